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

#ifndef BRC_LIGHTCONE_HPP
#define BRC_LIGHTCONE_HPP

#include "brc/worldsheet.hpp"

namespace brc {

/// Curvature package of a momentary space with respect to one lightlike
/// normal direction nT + sign*nS.
struct CurvatureData {
    int sign = +1;
    Matrix h;                    // second fundamental invariants h[sign]_{ij}
    Matrix weingarten;           // h_i^j = h * g^{-1}
    std::vector<double> kappas;  // principal curvatures, ascending
    Matrix eigvecs;              // tangent coefficient vectors, one column per kappa
    double gauss_kronecker = 0.0;
};

/// The lightlike normal nT + sign*nS (future directed by construction).
MinkVec lightcone_gauss(const MomentaryFrame& frame, int sign);

/// Second fundamental form with respect to the lightlike normal, computed
/// two ways and reconciled:
///   (a) h_ij = <-(d/du_i)(nT + sign*nS), X_{u_j}>  (jet-differentiated frame)
///   (b) h_ij = <nT + sign*nS, X_{u_i u_j}>          (embedding jets only)
/// Path (b) is authoritative; disagreement beyond the reconcile tolerance
/// raises NumericalError.
Matrix second_fundamental(const WorldSheet& ws, std::span<const double> u, double t, int sign);

/// Generalized eigensolve h v = kappa g v (Cholesky whitening + Jacobi).
CurvatureData principal_curvatures(const MomentaryFrame& frame, const Matrix& h, int sign);

/// Frame + second fundamental + eigensolve in one call.
CurvatureData curvature_data(const WorldSheet& ws, std::span<const double> u, double t, int sign);

/// Residuals of the two lightcone Weingarten identities at a point
/// (sup-norms, with the scale they should be compared against):
///   (a) (LG)_{u_i} - <nS, (nT)_{u_i}> LG + sum_j h_i^j X_{u_j} = 0
///   (b) proj_t((LG)_{u_i}) + sum_j h_i^j X_{u_j} = 0.
struct WeingartenResiduals {
    double formula_a = 0.0;
    double formula_b = 0.0;
    double scale = 1.0;
};
WeingartenResiduals weingarten_residuals(const WorldSheet& ws, std::span<const double> u,
                                         double t, int sign);

/// Evolute of the timelike surface itself (n = 2): offsets X + (1/k_i) nS
/// along the real principal-curvature branches of W with respect to nS.
/// Complex-eigenvalue samples are counted, not guessed at.
struct EvolutePoint {
    MinkVec point;
    double u = 0.0, t = 0.0;
    int branch = 0;
    double kappa = 0.0;
};
struct EvoluteCloud {
    std::vector<EvolutePoint> points;
    std::size_t skipped_complex = 0;
    std::size_t skipped_flat = 0;
};
EvoluteCloud evolute_points(const WorldSheet& ws);

}  // namespace brc

#endif
