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

#include "brc/scene.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "brc/errors.hpp"

namespace brc {

using nlohmann::json;

std::vector<std::string> Scene::param_names() const {
    std::vector<std::string> names;
    for (int i = 1; i < dim - 1; ++i) names.push_back("u" + std::to_string(i));
    names.push_back("t");
    return names;
}

std::vector<int> Scene::signs() const {
    std::vector<int> s;
    if (sign_plus) s.push_back(+1);
    if (sign_minus) s.push_back(-1);
    return s;
}

std::vector<double> Scene::u_samples(int k) const {
    const auto [lo, hi] = u_domain[k];
    const int count = grid[k];
    std::vector<double> s(count);
    if (u_periodic[k]) {
        const double step = (hi - lo) / count;  // open at the seam
        for (int i = 0; i < count; ++i) s[i] = lo + step * i;
    } else {
        const double step = (hi - lo) / (count - 1);
        for (int i = 0; i < count; ++i) s[i] = lo + step * i;
    }
    return s;
}

std::vector<double> Scene::t_samples() const {
    const auto [lo, hi] = t_domain;
    const int count = grid[dim - 2];
    std::vector<double> s(count);
    const double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) s[i] = lo + step * i;
    return s;
}

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
    throw ValidationError("scene field '" + field + "': " + why);
}

std::array<double, 2> interval_from(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        bad_field(field, "expected [lo, hi]");
    std::array<double, 2> iv{j[0].get<double>(), j[1].get<double>()};
    if (!(iv[0] < iv[1])) bad_field(field, "interval is degenerate");
    if (!std::isfinite(iv[0]) || !std::isfinite(iv[1])) bad_field(field, "interval not finite");
    return iv;
}

}  // namespace

Scene scene_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("scene: JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("scene: top level must be an object");

    static const std::set<std::string> known = {
        "dim",      "embedding", "u_domain",  "t_domain",   "grid",      "mu_range",
        "signs",    "diff_mode", "fd_step",   "tolerances", "u_periodic"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key())) bad_field(it.key(), "unknown key");

    Scene s;

    if (!j.contains("dim") || !j["dim"].is_number_integer()) bad_field("dim", "required integer");
    s.dim = j["dim"].get<int>();
    if (s.dim < 3) bad_field("dim", "needs dim >= 3 (n >= 2)");
    if (s.dim > 5) bad_field("dim", "dimensions above 5 are not supported");

    const int n = s.dim - 1;
    const auto params = [&] {
        std::vector<std::string> names;
        for (int i = 1; i < n; ++i) names.push_back("u" + std::to_string(i));
        names.push_back("t");
        return names;
    }();

    if (!j.contains("embedding") || !j["embedding"].is_array() ||
        j["embedding"].size() != static_cast<std::size_t>(s.dim))
        bad_field("embedding", "expected an array of dim expression strings");
    for (std::size_t i = 0; i < j["embedding"].size(); ++i) {
        const auto& item = j["embedding"][i];
        if (!item.is_string()) bad_field("embedding", "components must be strings");
        try {
            s.embedding.push_back(Expression::parse(item.get<std::string>(), params));
        } catch (const ParseError& e) {
            bad_field("embedding[" + std::to_string(i) + "]", e.what());
        }
    }

    if (!j.contains("u_domain")) bad_field("u_domain", "required");
    {
        const json& ud = j["u_domain"];
        if (ud.is_array() && ud.size() == 2 && ud[0].is_number()) {
            // single interval shorthand, only valid when there is one u-parameter
            if (n - 1 != 1) bad_field("u_domain", "expected one interval per u-parameter");
            s.u_domain.push_back(interval_from(ud, "u_domain"));
        } else if (ud.is_array() && ud.size() == static_cast<std::size_t>(n - 1)) {
            for (std::size_t k = 0; k < ud.size(); ++k)
                s.u_domain.push_back(interval_from(ud[k], "u_domain[" + std::to_string(k) + "]"));
        } else {
            bad_field("u_domain", "expected one interval per u-parameter");
        }
    }

    if (!j.contains("t_domain")) bad_field("t_domain", "required");
    s.t_domain = interval_from(j["t_domain"], "t_domain");

    if (j.contains("grid")) {
        const json& g = j["grid"];
        if (!g.is_array() || g.size() != static_cast<std::size_t>(n))
            bad_field("grid", "expected n sample counts (u..., t)");
        for (const auto& item : g) {
            if (!item.is_number_integer()) bad_field("grid", "counts must be integers");
            s.grid.push_back(item.get<int>());
        }
    } else {
        s.grid.assign(n, 200);
        s.grid.back() = 50;
    }
    for (int c : s.grid)
        if (c < 2) bad_field("grid", "sample counts must be >= 2");

    if (j.contains("mu_range")) s.mu_range = interval_from(j["mu_range"], "mu_range");

    if (j.contains("signs")) {
        const json& sg = j["signs"];
        if (!sg.is_array() || sg.empty()) bad_field("signs", "expected a non-empty array");
        s.sign_plus = s.sign_minus = false;
        for (const auto& item : sg) {
            if (!item.is_string()) bad_field("signs", "entries must be \"+\" or \"-\"");
            const std::string v = item.get<std::string>();
            if (v == "+")
                s.sign_plus = true;
            else if (v == "-")
                s.sign_minus = true;
            else
                bad_field("signs", "entries must be \"+\" or \"-\"");
        }
    }

    if (j.contains("diff_mode")) {
        const std::string m = j["diff_mode"].is_string() ? j["diff_mode"].get<std::string>() : "";
        if (m == "jets")
            s.diff_mode = DiffMode::Jets;
        else if (m == "finite_difference")
            s.diff_mode = DiffMode::FiniteDifference;
        else
            bad_field("diff_mode", "expected \"jets\" or \"finite_difference\"");
    }

    if (j.contains("fd_step")) {
        if (!j["fd_step"].is_number()) bad_field("fd_step", "expected a number");
        s.fd_step = j["fd_step"].get<double>();
        if (!(s.fd_step > 0.0)) bad_field("fd_step", "must be > 0");
    }

    if (j.contains("u_periodic")) {
        const json& up = j["u_periodic"];
        if (!up.is_array() || up.size() != static_cast<std::size_t>(n - 1))
            bad_field("u_periodic", "expected one boolean per u-parameter");
        for (const auto& item : up) {
            if (!item.is_boolean()) bad_field("u_periodic", "entries must be booleans");
            s.u_periodic.push_back(item.get<bool>());
        }
    } else {
        s.u_periodic.assign(n - 1, false);
    }

    if (j.contains("tolerances")) {
        const json& t = j["tolerances"];
        if (!t.is_object()) bad_field("tolerances", "expected an object");
        for (auto it = t.begin(); it != t.end(); ++it) {
            if (!it.value().is_number()) bad_field("tolerances." + it.key(), "expected a number");
            const double v = it.value().get<double>();
            if (!(v >= 0.0)) bad_field("tolerances." + it.key(), "must be >= 0");
            const std::string& k = it.key();
            if (k == "causal") s.tol.causal = v;
            else if (k == "frame") s.tol.frame = v;
            else if (k == "immersion") s.tol.immersion = v;
            else if (k == "reconcile") s.tol.reconcile = v;
            else if (k == "kappa_zero") s.tol.kappa_zero = v;
            else if (k == "criticality") s.tol.criticality = v;
            else if (k == "rank") s.tol.rank = v;
            else if (k == "sigma") s.tol.sigma = v;
            else if (k == "root") s.tol.root = v;
            else if (k == "newton") s.tol.newton = v;
            else if (k == "spread") s.tol.spread = v;
            else bad_field("tolerances." + k, "unknown tolerance name");
        }
    }

    return s;
}

Scene load_scene(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("scene: cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return scene_from_json_text(ss.str());
}

}  // namespace brc
