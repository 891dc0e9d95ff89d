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

#ifndef BRC_WORLDSHEET_HPP
#define BRC_WORLDSHEET_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brc/geom.hpp"
#include "brc/linalg.hpp"
#include "brc/minkowski.hpp"
#include "brc/scene.hpp"

namespace brc {

/// Per-point frame package of a momentary space: tangents, first
/// fundamental form, the spacelike unit normal nS of W and the
/// future-directed timelike unit normal nT of S_t inside TW.
struct MomentaryFrame {
    std::vector<double> u;
    double t = 0.0;
    MinkVec point;
    std::vector<MinkVec> tangent_u;
    MinkVec tangent_t;
    Matrix g;
    MinkVec nS, nT;
    FrameStatus status = FrameStatus::Ok;

    bool ok() const { return status == FrameStatus::Ok; }
    /// Throws NumericalError with position diagnostics unless ok().
    void require_ok() const;
};

/// Frame fields along one u-direction, every component a univariate jet.
/// Feeding the frame construction with jets is what gives exact
/// Gauss-map derivatives without finite differencing.
struct JetFrame {
    int direction = 0;
    std::vector<std::vector<Jet>> tangent_u;
    std::vector<Jet> tangent_t;
    std::vector<std::vector<Jet>> g;
    std::vector<Jet> nS, nT;
    FrameStatus status = FrameStatus::Ok;

    bool ok() const { return status == FrameStatus::Ok; }
    std::vector<Jet> gauss(int sign) const;  // nT + sign*nS
};

struct ValidationCheck {
    std::string name;
    bool pass = true;
    double margin = 0.0;            // worst observed value
    std::vector<double> worst_at;   // (u..., t) of the worst sample
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    std::size_t samples = 0;
    double min_g_eigenvalue = 0.0;

    bool pass() const;
    std::string table() const;
};

class WorldSheet {
public:
    explicit WorldSheet(Scene scene);

    const Scene& scene() const { return scene_; }
    int dim() const { return scene_.dim; }
    int n() const { return scene_.dim - 1; }

    /// Componentwise evaluation of the embedding. Throws ValidationError
    /// outside the declared domain (periodic parameters wrap).
    MinkVec embed(std::span<const double> u, double t) const;

    /// Jets of every embedding component in the given parameter
    /// directions. Honors the scene's diff_mode: exact propagation or the
    /// central-difference cross-check provider.
    std::vector<Jet> component_jets(std::span<const double> u, double t, int order,
                                    std::span<const int> directions) const;

    MomentaryFrame frame_at(std::span<const double> u, double t) const;

    /// Frame fields along u-direction `dir` as univariate jets of the
    /// given order (embedding jets one order higher are consumed).
    JetFrame frame_jets_along(std::span<const double> u, double t, int dir, int order) const;

    /// Sweeps the sample grid and reports immersion, timelike-plane,
    /// spacelike-leaf and nT margins with the worst offending point.
    ValidationReport validate() const;

private:
    Scene scene_;

    void check_domain(std::span<const double>& u, double& t,
                      std::vector<double>& wrapped) const;
    std::vector<Jet> fd_component_jets(std::span<const double> u, double t, int order,
                                       std::span<const int> directions) const;
};

}  // namespace brc

#endif
