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

#ifndef BRC_SCENE_HPP
#define BRC_SCENE_HPP

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "brc/expression.hpp"

namespace brc {

/// Named tolerances, overridable per scene through the `tolerances` map.
struct Tolerances {
    double causal = 1e-9;       // causal character / lightcone membership
    double frame = 1e-8;        // frame orthonormality and lightlikeness
    double immersion = 1e-9;    // relative wedge-norm floor
    double reconcile = 1e-5;    // dual-path agreement of the second fundamental form
    double kappa_zero = 1e-10;  // |kappa| below this: focal point at infinity, skipped
    double criticality = 1e-6;  // criticality / degeneracy verdicts
    double rank = 1e-8;         // singular-value ratio for rank checks
    double sigma = 1e-6;        // sigma classification thresholds (times curvature scale)
    double root = 1e-10;        // bisection target width
    double newton = 1e-10;      // Newton residual target
    double spread = 1e-9;       // focal-point spread for conical detection
};

enum class DiffMode { Jets, FiniteDifference };

/// A validated scene: the embedding of a world hyper-sheet plus sampling
/// and tolerance choices. Immutable in practice once loaded.
struct Scene {
    int dim = 0;                                   // n+1
    std::vector<Expression> embedding;             // n+1 components
    std::vector<std::array<double, 2>> u_domain;   // n-1 closed intervals
    std::array<double, 2> t_domain{0.0, 1.0};
    std::vector<int> grid;                         // n counts: u samples..., t samples
    std::array<double, 2> mu_range{-3.0, 3.0};
    bool sign_plus = true;
    bool sign_minus = true;
    DiffMode diff_mode = DiffMode::Jets;
    double fd_step = 1e-3;
    std::vector<bool> u_periodic;                  // per u-parameter; default false
    Tolerances tol;

    int n() const { return dim - 1; }
    std::vector<std::string> param_names() const;  // u1..u_{n-1}, t
    std::vector<int> signs() const;                // subset of {+1, -1}

    /// Grid sample positions. Periodic u-parameters omit the duplicate
    /// endpoint so closed momentary spaces are not double-counted.
    std::vector<double> u_samples(int k) const;
    std::vector<double> t_samples() const;
};

/// Parse and validate a scene from JSON text. Unknown keys and malformed
/// fields raise ValidationError naming the offending field; omitted
/// optional fields get documented defaults (grid 200x50, mu_range [-3,3],
/// both signs, jet differentiation).
Scene scene_from_json_text(const std::string& text);

Scene load_scene(const std::filesystem::path& path);

}  // namespace brc

#endif
