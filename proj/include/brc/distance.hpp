/*
 * Copyright 2026 The brcaustics Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BRC_DISTANCE_HPP
#define BRC_DISTANCE_HPP

#include <array>
#include <string>
#include <vector>

#include "brc/worldsheet.hpp"

namespace brc {

// The Lorentz distance-squared function G(u, t, lambda) = <X - lambda,
// X - lambda> and everything that can be read off its derivatives. This
// module is the independent check against the eigenvalue machinery: it
// touches embedding jets and closed formulas only.

double G_eval(const WorldSheet& ws, std::span<const double> u, double t, const MinkVec& lambda);

enum class CriticalVerdict { NonCritical, Critical, DegenerateCritical };
std::string to_string(CriticalVerdict v);

struct CriticalityReport {
    double g_value = 0.0;
    std::vector<double> grad_u;  // dG/du_i = 2 <X_{u_i}, X - lambda>
    Matrix hessian_u;            // 2 (<X_{u_i u_j}, X - lambda> + g_ij)
    double det_hessian = 0.0;
    double dG_dt = 0.0;          // 2 <X_t, X - lambda>
    CriticalVerdict verdict = CriticalVerdict::NonCritical;
    // residuals normalized by their natural scales (what the verdict used)
    double g_rel = 0.0, grad_rel = 0.0, det_rel = 0.0;
};

/// Rejects lambda == X(u,t); everything else is a report, not an error.
CriticalityReport criticality_check(const WorldSheet& ws, std::span<const double> u, double t,
                                    const MinkVec& lambda, double tol);

/// Scans det Hessian(g) along lambda(mu) = X + mu * (nT + sign*nS) over
/// mu_range (512 samples), brackets sign changes and bisects to the root
/// tolerance. Roots are the focal ray parameters; independent of the
/// eigenvalue path.
std::vector<double> focal_mu_roots(const WorldSheet& ws, std::span<const double> u, double t,
                                   int sign, std::array<double, 2> mu_range);

struct MorseFamilyReport {
    double sv_min = 0.0, sv_max = 0.0;  // singular values of the lambda-Jacobian
    double dG_dt = 0.0;
    bool rank_ok = false;
    bool dt_ok = false;
    bool pass() const { return rank_ok && dt_ok; }
};

/// Non-degeneracy of G as a graph-like family at a critical configuration:
/// (a) the n x (n+1) Jacobian of (G, dG/du) in the lambda directions has
/// full rank, and (b) dG/dt does not vanish. Requires the input to be at
/// least Critical.
MorseFamilyReport verify_morse_family(const WorldSheet& ws, std::span<const double> u, double t,
                                      const MinkVec& lambda, int sign);

struct LegendrianPoint {
    MinkVec lambda;
    double t = 0.0;
    MinkVec p;  // jet-space momentum
};

/// Lift of a light-sheet configuration into 1-jet space. The momentum is
/// conj(LG) / <X_t, nT> with conj negating the time component; this
/// normalization is exactly what makes dt = sum p_i dlambda_i hold along
/// the critical set.
LegendrianPoint legendrian_lift(const WorldSheet& ws, std::span<const double> u, double t,
                                double mu, int sign);

/// True iff the lightcone with vertex lambda is tangent to the momentary
/// space at X(u,t): G = 0 and all dG/du_i = 0 within tolerance.
bool tangent_lightcone_contact(const WorldSheet& ws, std::span<const double> u, double t,
                               const MinkVec& lambda, double tol);

}  // namespace brc

#endif
