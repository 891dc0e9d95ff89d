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

#ifndef BRC_VERIFY_HPP
#define BRC_VERIFY_HPP

#include <string>
#include <vector>

#include "brc/worldsheet.hpp"

namespace brc {

struct VerifyResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;
    double tolerance = 0.0;
    std::string note;
};

struct VerifyOptions {
    int max_axis_samples = 25;  // subsample cap per grid axis
    int contact_curves = 50;
    unsigned seed = 20260810;
};

/// Worst contact-form residual |dt/dr - sum p_i dlambda_i/dr| along random
/// curves inside the critical set, derivatives by central differences.
/// Residuals are normalized by max(1, |dt/dr|, sum |p_i dlambda_i/dr|).
double legendrian_contact_residual(const WorldSheet& ws, int curves, unsigned seed);

/// Cross-checks a scene against the independent derivative and
/// distance-squared oracles: frame identities, Weingarten residuals,
/// focal degeneracy, root/eigenvalue agreement, Morse-family rank,
/// contact residuals, gradient consistency.
std::vector<VerifyResult> run_verification(const WorldSheet& ws, const VerifyOptions& opt = {});

}  // namespace brc

#endif
