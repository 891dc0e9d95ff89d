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

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "brc/curve.hpp"
#include "brc/distance.hpp"
#include "brc/errors.hpp"
#include "brc/io.hpp"
#include "brc/lightcone.hpp"
#include "brc/lightsheets.hpp"
#include "brc/normal_forms.hpp"
#include "brc/scene.hpp"
#include "brc/verify.hpp"
#include "brc/worldsheet.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitValidation = 2;

struct CommonArgs {
    std::string scene_path;
    std::string out;
    std::string format = "csv";
    std::string sign = "both";
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_scene = true) {
    auto* opt = cmd->add_option("--scene", args.scene_path, "scene JSON file");
    if (needs_scene) opt->required();
    cmd->add_option("--out", args.out, "output path (default: stdout)");
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"csv", "obj"}));
    cmd->add_option("--sign", args.sign, "lightlike normal branch")
        ->check(CLI::IsMember({"+", "-", "both"}));
}

brc::Scene load_with_sign(const CommonArgs& args) {
    brc::Scene sc = brc::load_scene(args.scene_path);
    if (args.sign == "+") {
        sc.sign_plus = true;
        sc.sign_minus = false;
    } else if (args.sign == "-") {
        sc.sign_plus = false;
        sc.sign_minus = true;
    }
    return sc;
}

void emit(const CommonArgs& args, const brc::PointTable& table) {
    brc::write_text(args.out, args.format == "obj" ? brc::to_obj(table) : brc::to_csv(table));
}

std::vector<std::string> focal_columns(int dim, int nu) {
    std::vector<std::string> cols;
    for (int c = 0; c < dim; ++c) cols.push_back("x" + std::to_string(c));
    cols.push_back("t");
    for (int k = 1; k <= nu; ++k) cols.push_back("u" + std::to_string(k));
    cols.insert(cols.end(), {"sign", "branch", "kappa"});
    return cols;
}

brc::PointTable focal_table(const brc::WorldSheet& ws, const brc::CausticCloud& cloud) {
    brc::PointTable t;
    t.columns = focal_columns(ws.dim(), ws.n() - 1);
    for (const auto& fp : cloud.points) {
        std::vector<double> row(fp.lambda.components());
        row.push_back(fp.t);
        row.insert(row.end(), fp.u.begin(), fp.u.end());
        row.push_back(fp.sign);
        row.push_back(fp.branch);
        row.push_back(fp.kappa);
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"light sheets, caustics and Maxwell sets of world hyper-sheets"};
    app.require_subcommand(1);

    CommonArgs args;

    auto* validate = app.add_subcommand("validate", "check the world hyper-sheet conditions");
    add_common(validate, args);

    auto* caustic = app.add_subcommand("caustic", "focal sets swept over every time slice");
    add_common(caustic, args);

    auto* focal = app.add_subcommand("focal", "momentary focal set of one time slice");
    add_common(focal, args);
    double focal_t = 0.0;
    bool focal_t_set = false;
    focal->add_option("--t", focal_t, "slice parameter (default: domain midpoint)")
        ->each([&](const std::string&) { focal_t_set = true; });

    auto* lightsheet = app.add_subcommand("lightsheet", "momentary light sheet samples");
    add_common(lightsheet, args);
    double ls_t = 0.0;
    bool ls_t_set = false;
    int mu_samples = 33;
    lightsheet->add_option("--t", ls_t, "slice parameter (default: domain midpoint)")
        ->each([&](const std::string&) { ls_t_set = true; });
    lightsheet->add_option("--mu-samples", mu_samples, "ray samples per point")
        ->check(CLI::PositiveNumber);

    auto* maxwell = app.add_subcommand("maxwell", "self-intersections of the momentary fronts");
    add_common(maxwell, args);

    auto* classify = app.add_subcommand("classify", "singularity classes along focal branches");
    add_common(classify, args);

    auto* verify = app.add_subcommand("verify", "run the oracle cross-check suite");
    add_common(verify, args);

    auto* normal_form = app.add_subcommand("normal-form", "reference singularity models");
    std::string nf_kind;
    int nf_samples = 41;
    double nf_extent = 1.0;
    normal_form->add_option("--kind", nf_kind, "ce|sw|py|pu|family3|family4|family5")
        ->required()
        ->check(CLI::IsMember({"ce", "sw", "py", "pu", "family3", "family4", "family5"}));
    normal_form->add_option("--samples", nf_samples, "grid samples per axis")
        ->check(CLI::PositiveNumber);
    normal_form->add_option("--extent", nf_extent, "half-width of the parameter grid");
    add_common(normal_form, args, /*needs_scene=*/false);

    auto* evolute = app.add_subcommand("evolute", "evolute of the timelike surface");
    add_common(evolute, args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) {
            const brc::WorldSheet ws(load_with_sign(args));
            const auto report = ws.validate();
            std::cout << report.table();
            return report.pass() ? kExitOk : kExitValidation;
        }

        if (caustic->parsed()) {
            const brc::WorldSheet ws(load_with_sign(args));
            const auto cloud = brc::br_caustic(ws);
            emit(args, focal_table(ws, cloud));
            if (cloud.skipped)
                std::cerr << "skipped " << cloud.skipped << " samples\n";
            return kExitOk;
        }

        if (focal->parsed()) {
            const brc::WorldSheet ws(load_with_sign(args));
            const auto& sc = ws.scene();
            const double t =
                focal_t_set ? focal_t : 0.5 * (sc.t_domain[0] + sc.t_domain[1]);
            brc::CausticCloud cloud;
            const int m = ws.n() - 1;
            std::vector<std::vector<double>> axes;
            for (int k = 0; k < m; ++k) axes.push_back(sc.u_samples(k));
            std::vector<int> idx(m, 0);
            std::vector<double> u(m);
            while (true) {
                for (int k = 0; k < m; ++k) u[k] = axes[k][idx[k]];
                for (int sign : sc.signs()) {
                    try {
                        for (auto& fp : brc::lightlike_focal_points(ws, u, t, sign))
                            cloud.points.push_back(std::move(fp));
                    } catch (const brc::NumericalError&) {
                        ++cloud.skipped;
                    }
                }
                int k = m - 1;
                for (; k >= 0; --k) {
                    if (++idx[k] < static_cast<int>(axes[k].size())) break;
                    idx[k] = 0;
                }
                if (k < 0) break;
            }
            emit(args, focal_table(ws, cloud));
            return kExitOk;
        }

        if (lightsheet->parsed()) {
            const brc::WorldSheet ws(load_with_sign(args));
            const auto& sc = ws.scene();
            const double t = ls_t_set ? ls_t : 0.5 * (sc.t_domain[0] + sc.t_domain[1]);
            const int m = ws.n() - 1;
            brc::PointTable table;
            for (int c = 0; c < ws.dim(); ++c) table.columns.push_back("x" + std::to_string(c));
            table.columns.push_back("t");
            for (int k = 1; k <= m; ++k) table.columns.push_back("u" + std::to_string(k));
            table.columns.insert(table.columns.end(), {"sign", "mu"});

            std::vector<std::vector<double>> axes;
            for (int k = 0; k < m; ++k) axes.push_back(sc.u_samples(k));
            std::vector<int> idx(m, 0);
            std::vector<double> u(m);
            while (true) {
                for (int k = 0; k < m; ++k) u[k] = axes[k][idx[k]];
                for (int sign : sc.signs()) {
                    for (int j = 0; j < mu_samples; ++j) {
                        const double mu = sc.mu_range[0] +
                                          (sc.mu_range[1] - sc.mu_range[0]) * j /
                                              (mu_samples - 1);
                        const auto p = brc::light_sheet_point(ws, u, t, mu, sign);
                        std::vector<double> row(p.components());
                        row.push_back(t);
                        row.insert(row.end(), u.begin(), u.end());
                        row.push_back(sign);
                        row.push_back(mu);
                        table.rows.push_back(std::move(row));
                    }
                }
                int k = m - 1;
                for (; k >= 0; --k) {
                    if (++idx[k] < static_cast<int>(axes[k].size())) break;
                    idx[k] = 0;
                }
                if (k < 0) break;
            }
            emit(args, table);
            return kExitOk;
        }

        if (maxwell->parsed()) {
            const brc::WorldSheet ws(load_with_sign(args));
            const auto result = brc::maxwell_set(ws);
            brc::PointTable table;
            for (int c = 0; c < ws.dim(); ++c) table.columns.push_back("x" + std::to_string(c));
            table.columns.insert(table.columns.end(),
                                 {"t", "s1", "mu1", "sign1", "s2", "mu2", "sign2"});
            for (const auto& p : result.points) {
                std::vector<double> row(p.lambda.components());
                row.insert(row.end(), {p.t, p.s1, p.mu1, static_cast<double>(p.sign1), p.s2,
                                       p.mu2, static_cast<double>(p.sign2)});
                table.rows.push_back(std::move(row));
            }
            emit(args, table);
            if (result.dropped) std::cerr << "dropped " << result.dropped << " candidates\n";
            return kExitOk;
        }

        if (classify->parsed()) {
            const brc::WorldSheet ws(load_with_sign(args));
            const auto& sc = ws.scene();
            std::string out = "s,t,sign,sigma,dsigma_ds,class\n";
            auto row = [&out](double s, double t, int sign, const brc::SingularityClass& c) {
                char buf[200];
                std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%+d,%.17g,%.17g,%s\n", s, t, sign,
                              c.sigma, c.dsigma_ds, brc::to_string(c.tag).c_str());
                out += buf;
            };
            for (double t : sc.t_samples()) {
                for (int sign : sc.signs()) {
                    const auto slice = brc::classify_slice(ws, t, sign);
                    for (std::size_t i = 0; i < slice.s.size(); ++i)
                        row(slice.s[i], t, sign, slice.samples[i]);
                    for (const auto& root : slice.roots) row(root.s, t, sign, root.cls);
                }
            }
            brc::write_text(args.out, out);
            return kExitOk;
        }

        if (verify->parsed()) {
            const brc::WorldSheet ws(load_with_sign(args));
            const auto results = brc::run_verification(ws);
            bool all = true;
            for (const auto& r : results) {
                std::printf("%-34s %s  worst=%.3g tol=%.3g %s\n", r.name.c_str(),
                            r.pass ? "PASS" : "FAIL", r.worst, r.tolerance, r.note.c_str());
                all = all && r.pass;
            }
            return all ? kExitOk : kExitNumerical;
        }

        if (normal_form->parsed()) {
            brc::PointTable table;
            if (nf_kind.rfind("family", 0) == 0) {
                brc::GeneratingFamily fam;
                fam.form_id = nf_kind.back() - '0';
                table.columns = {"x0", "x1", "x2", "t"};
                for (const auto& row :
                     brc::family_front(fam, nf_samples, nf_samples, 9, nf_extent))
                    table.rows.push_back({row[0], row[1], row[2], row[3]});
            } else {
                const auto kind = brc::surface_kind_from_name(nf_kind);
                const auto surf = brc::normal_form_surface(kind, nf_samples, nf_samples,
                                                           nf_extent);
                table.columns = {"x0", "x1", "x2"};
                if (surf.point_dim == 4) table.columns.push_back("t");
                for (const auto& p : surf.points) {
                    std::vector<double> row(p.begin(), p.begin() + surf.point_dim);
                    table.rows.push_back(std::move(row));
                }
            }
            emit(args, table);
            return kExitOk;
        }

        if (evolute->parsed()) {
            const brc::WorldSheet ws(load_with_sign(args));
            const auto cloud = brc::evolute_points(ws);
            brc::PointTable table;
            table.columns = {"x0", "x1", "x2", "branch"};
            for (const auto& p : cloud.points) {
                std::vector<double> row(p.point.components());
                row.push_back(p.branch);
                table.rows.push_back(std::move(row));
            }
            emit(args, table);
            if (cloud.skipped_complex)
                std::cerr << "skipped " << cloud.skipped_complex
                          << " samples with complex principal curvatures\n";
            return kExitOk;
        }
    } catch (const brc::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const brc::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
