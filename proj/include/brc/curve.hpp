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

#ifndef BRC_CURVE_HPP
#define BRC_CURVE_HPP

#include <optional>

#include "brc/worldsheet.hpp"

namespace brc {

// The dim-3 specialization: momentary curves on a timelike surface, their
// pseudo-orthonormal frame {b, n, t}, the curvature triple, and the sigma
// invariant whose zeros govern swallowtail formation on the light sheets.
//
// Input curves need not be arclength-parametrized; every derivative below
// is taken with respect to oriented arclength (chain rule through the
// speed), with the curve orientation fixed so that b = n ^ t is future
// directed.

struct CurveFrame {
    MinkVec t_vec;  // oriented unit tangent, <t,t> = 1
    MinkVec n_vec;  // surface normal nS,     <n,n> = 1
    MinkVec b_vec;  // n ^ t, future directed, <b,b> = -1
    double kappa_g = 0.0;  // <t', b>
    double kappa_n = 0.0;  // <t', n>
    double tau_g = 0.0;    // <b', n>
    double speed = 0.0;    // |Gamma_u|
    int orientation = +1;  // +1 if the parametrization already has b future directed
};

CurveFrame frenet_frame(const WorldSheet& ws, double s, double t);

/// Sup-norms of the three Frenet-type closure residuals
///   b' - (tau_g n - kappa_g t), n' - (tau_g b - kappa_n t),
///   t' - (-kappa_g b + kappa_n n).
struct FrenetResiduals {
    double b_res = 0.0, n_res = 0.0, t_res = 0.0;
    double scale = 1.0;
};
FrenetResiduals frenet_residuals(const WorldSheet& ws, double s, double t);

/// (kappa_g + kappa_n, kappa_g - kappa_n), cross-checked against the
/// shape-operator eigenvalues; disagreement beyond tolerance raises
/// NumericalError.
std::pair<double, double> lightcone_curvatures(const WorldSheet& ws, double s, double t);

struct SigmaValue {
    double sigma = 0.0;
    double dsigma_ds = 0.0;  // oriented-arclength derivative
    double scale = 1.0;      // curvature scale the thresholds apply to
};

/// sigma^sign = (kappa_n + sign*kappa_g) tau_g - sign*(kappa_n' + sign*kappa_g'),
/// from order-3 jets; its s-derivative from order-4 jets.
SigmaValue sigma_invariant(const WorldSheet& ws, double s, double t, int sign);

enum class SingularityTag { Regular, CuspidalEdge, Swallowtail, ConicalDegenerate, Unresolved };
std::string to_string(SingularityTag tag);

struct SingularityClass {
    SingularityTag tag = SingularityTag::Unresolved;
    double sigma = 0.0;
    double dsigma_ds = 0.0;
};

/// Classification of the light sheet along the focal branch at (s, t):
/// cuspidal edge when sigma is away from zero, swallowtail at simple
/// zeros, the conical case when sigma vanishes along the whole slice.
/// Near-threshold points come back Unresolved rather than guessed.
SingularityClass classify_lightsheet_point(const WorldSheet& ws, double s, double t, int sign);

/// If sigma^sign vanishes identically on the slice, returns the common
/// focal vertex after verifying that the momentary curve lies on the
/// lightcone with that vertex; empty otherwise.
std::optional<MinkVec> detect_conical_momentary_curve(const WorldSheet& ws, double t0, int sign);

/// Zeros of s -> sigma(s, t0) on the slice, bracketed on the sample grid
/// and bisection-refined, each with its classification.
struct SigmaRoot {
    double s = 0.0;
    SingularityClass cls;
};
std::vector<SigmaRoot> find_sigma_roots(const WorldSheet& ws, double t0, int sign);

/// Whole-slice classification: per-sample tags plus the refined sigma
/// roots, with the conical test run once for the slice rather than per
/// sample point.
struct SliceClassification {
    std::vector<double> s;                   // the sample positions
    std::vector<SingularityClass> samples;   // parallel to s
    std::vector<SigmaRoot> roots;
    std::optional<MinkVec> conical_vertex;
};
SliceClassification classify_slice(const WorldSheet& ws, double t0, int sign);

}  // namespace brc

#endif
