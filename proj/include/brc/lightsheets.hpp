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

#ifndef BRC_LIGHTSHEETS_HPP
#define BRC_LIGHTSHEETS_HPP

#include <cstdint>
#include <optional>

#include "brc/lightcone.hpp"
#include "brc/worldsheet.hpp"

namespace brc {

/// One point of a lightlike focal set: lambda = X + (1/kappa) LG, with the
/// branch/ray bookkeeping that produced it.
struct FocalPoint {
    MinkVec lambda;
    double t = 0.0;
    std::vector<double> u;
    int sign = +1;
    int branch = 0;
    double kappa = 0.0;
    double mu = 0.0;  // 1/kappa
};

struct CausticCloud {
    std::vector<FocalPoint> points;
    std::size_t skipped = 0;  // samples dropped (flat, invalid frame, oracle failure)
};

/// lambda = X(u,t) + mu * (nT + sign*nS). Lies on the lightcone with
/// vertex X(u,t) for every mu.
MinkVec light_sheet_point(const WorldSheet& ws, std::span<const double> u, double t, double mu,
                          int sign);

/// One focal point per principal curvature with |kappa| above the zero
/// tolerance, each confirmed DegenerateCritical by the distance-squared
/// oracle (disagreement raises NumericalError with diagnostics).
std::vector<FocalPoint> lightlike_focal_points(const WorldSheet& ws, std::span<const double> u,
                                               double t, int sign);

/// Union of the momentary focal sets over the whole (u, t) grid for the
/// scene's signs; deterministic (t, u, sign, branch) ordering.
CausticCloud br_caustic(const WorldSheet& ws);

/// Same point set with the foliation parameter kept as a coordinate: the
/// t-slices are exactly the momentary focal sets.
CausticCloud unfolded_focal(const WorldSheet& ws);

/// Smallest singular value of the Jacobian of (u, mu) -> light_sheet_point
/// at a configuration; vanishes along the focal set.
double lightsheet_jacobian_min_sv(const WorldSheet& ws, std::span<const double> u, double t,
                                  double mu, int sign);

/// A refined self-intersection of the momentary wave front of one t-slice.
struct MaxwellPoint {
    MinkVec lambda;
    double t = 0.0;
    double s1 = 0.0, mu1 = 0.0;
    int sign1 = +1;
    double s2 = 0.0, mu2 = 0.0;
    int sign2 = +1;
};

struct MaxwellResult {
    std::vector<MaxwellPoint> points;
    std::size_t dropped = 0;  // candidates Newton could not close
    double capture = 0.0;     // capture radius used for pairing
};

/// Per-slice self-intersections of the front (n = 2): spatial-hash pairing
/// of front samples at capture radius 2x the sample spacing, followed by
/// Newton refinement of the three-equation coincidence system with s1
/// frozen (the solution set is one-dimensional per slice).
MaxwellResult maxwell_set(const WorldSheet& ws);

/// Brute-force oracle for the refined Maxwell set. The time coordinate of
/// a front point is t + mu, so coincidences force equal mu; per mu-plane
/// the front is a pair of offset curves, and self-intersections are found
/// by testing every sampled segment against every other. No hashing, no
/// Newton. `resolution` is twice the largest adjacent sample distance
/// along the offsets: the scale at which the oracle sees the set.
struct BruteForceMaxwell {
    std::vector<MinkVec> points;
    double resolution = 0.0;
};
BruteForceMaxwell maxwell_bruteforce(const WorldSheet& ws, int s_samples, int mu_samples);

}  // namespace brc

#endif
