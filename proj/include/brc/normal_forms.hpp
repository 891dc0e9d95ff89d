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

#ifndef BRC_NORMAL_FORMS_HPP
#define BRC_NORMAL_FORMS_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

namespace brc {

// Reference parametrizations of the classical front/caustic singularities
// and the five one-variable generating families whose critical data
// reproduce them. Everything here is closed-form polynomial arithmetic;
// no numerics beyond evaluation.

enum class SurfaceKind { CE, SW, PY, PU, Thm94_1, Thm94_2, Thm94_3, Thm94_4 };

SurfaceKind surface_kind_from_name(const std::string& name);

struct NormalSurface {
    SurfaceKind kind;
    int point_dim = 3;  // 3 for the model surfaces, 4 for graph-like fronts
    std::vector<std::array<double, 4>> points;
};

/// Exact evaluation of the model parametrizations over a [-extent,extent]
/// grid. The pyramid is restricted to w^2 = u^2 + v^2 and the purse to
/// w^2 = 36uv (both branches of w).
NormalSurface normal_form_surface(SurfaceKind kind, int nu, int nv, double extent);

/// F(q, x, t), one of:
///   (1) q
///   (2) sign_t*t + sign_q*q^2
///   (3) sign_t*t + q^3 + x0 q
///   (4) sign_t*t + sign_q*q^4 + x0 q + x1 q^2
///   (5) sign_t*t + q^5 + x0 q + x1 q^2 + x2 q^3
struct GeneratingFamily {
    int form_id = 5;
    int sign_t = +1;
    int sign_q = +1;

    double eval(double q, const std::array<double, 3>& x, double t) const;
    double dq(double q, const std::array<double, 3>& x) const;  // dF/dq

    // The critical branch in closed form (forms 3-5 are linear in x0 and t):
    double x0_branch(double q, double v, double w) const;
    double t_branch(double q, double v, double w) const;
    // v on the rank-deficiency locus of the base projection
    double caustic_v(double u, double w) const;
};

/// Solution branch of F = dF/dq = 0, rows (q, x0, x1, x2, t). For form 2
/// the branch is q = 0, t = 0 with x free; form 1 has no critical points.
std::vector<std::array<double, 5>> family_critical_set(const GeneratingFamily& fam, int nq,
                                                       int nv, int nw, double extent);

/// The graph-like wave front: base coordinates plus the t-component of the
/// solution branch, rows (x0, x1, x2, t).
std::vector<std::array<double, 4>> family_front(const GeneratingFamily& fam, int nq, int nv,
                                                int nw, double extent);

/// Critical values of the base projection restricted to the branch, i.e.
/// the caustic of the family, rows (x0, x1, x2) over (u, w). Form 5 is
/// emitted in the orientation that the swallowtail normalizer psi maps
/// onto the reference SW parametrization (see swallowtail_normalizer).
std::vector<std::array<double, 3>> family_caustic(const GeneratingFamily& fam, int nu, int nw,
                                                  double extent);

/// psi(x0, x1, x2) = (-x0/5, -2 x1/5, 3 x2/5); carries the form-5 caustic
/// onto (3U^4 + V U^2, 4U^3 + 2UV, V) with U = u, V = 3w/5.
std::array<double, 3> swallowtail_normalizer(const std::array<double, 3>& x);

enum class GermType { Regular, A1, A2, A3, A4, Unresolved };
std::string to_string(GermType g);

/// Recognizes the A_k type of a one-variable germ from its derivative
/// list (f', f'', ..., f^(m)): Regular when f' is nonzero, else A_{k-1}
/// for the lowest non-vanishing derivative f^(k). Thresholds scale with
/// the largest derivative magnitude.
GermType germ_type(std::span<const double> derivs, double tol);

}  // namespace brc

#endif
