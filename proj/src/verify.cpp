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

#include "brc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "brc/curve.hpp"
#include "brc/distance.hpp"
#include "brc/lightcone.hpp"
#include "brc/lightsheets.hpp"

namespace brc {

namespace {

std::vector<double> subsample(std::vector<double> xs, int cap) {
    if (static_cast<int>(xs.size()) <= cap) return xs;
    std::vector<double> out;
    const double step = static_cast<double>(xs.size() - 1) / (cap - 1);
    for (int i = 0; i < cap; ++i) out.push_back(xs[static_cast<std::size_t>(i * step)]);
    return out;
}

}  // namespace

double legendrian_contact_residual(const WorldSheet& ws, int curves, unsigned seed) {
    const Scene& sc = ws.scene();
    const int m = ws.n() - 1;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const double mu_hi = std::max(std::abs(sc.mu_range[0]), std::abs(sc.mu_range[1]));
    const double h = 1e-4;
    double worst = 0.0;
    int done = 0;
    int attempts = 0;
    while (done < curves && attempts < curves * 20) {
        ++attempts;
        std::vector<double> u0(m);
        for (int k = 0; k < m; ++k) {
            const auto [lo, hi] = sc.u_domain[k];
            u0[k] = lo + (0.1 + 0.8 * unit(rng)) * (hi - lo);
        }
        const double t0 = sc.t_domain[0] + (0.1 + 0.8 * unit(rng)) *
                                               (sc.t_domain[1] - sc.t_domain[0]);
        double mu0 = (0.3 + 0.6 * unit(rng)) * mu_hi;
        if (unit(rng) < 0.5) mu0 = -mu0;
        const auto signs = sc.signs();
        const int sign = signs[std::min(signs.size() - 1,
                                        static_cast<std::size_t>(unit(rng) * signs.size()))];

        // a straight parameter path through the configuration
        std::vector<double> du(m);
        for (int k = 0; k < m; ++k)
            du[k] = (unit(rng) - 0.5) * 0.02 * (sc.u_domain[k][1] - sc.u_domain[k][0]);
        const double dt = (unit(rng) - 0.5) * 0.02 * (sc.t_domain[1] - sc.t_domain[0]);
        const double dmu = (unit(rng) - 0.5) * 0.02 * mu_hi;

        auto lambda_at = [&](double r) {
            std::vector<double> u(m);
            for (int k = 0; k < m; ++k) u[k] = u0[k] + r * du[k];
            return light_sheet_point(ws, u, t0 + r * dt, mu0 + r * dmu, sign);
        };

        try {
            const LegendrianPoint lp = legendrian_lift(ws, u0, t0, mu0, sign);
            const MinkVec lp1 = lambda_at(h), lm1 = lambda_at(-h);
            double sum = 0.0, mag = 0.0;
            for (int c = 0; c < ws.dim(); ++c) {
                const double dl = (lp1[c] - lm1[c]) / (2.0 * h);
                sum += lp.p[c] * dl;
                mag += std::abs(lp.p[c] * dl);
            }
            const double scale = std::max({1.0, std::abs(dt), mag});
            worst = std::max(worst, std::abs(dt - sum) / scale);
            ++done;
        } catch (const NumericalError&) {
            continue;  // invalid frame; try another configuration
        } catch (const ValidationError&) {
            continue;
        }
    }
    return worst;
}

std::vector<VerifyResult> run_verification(const WorldSheet& ws, const VerifyOptions& opt) {
    const Scene& sc = ws.scene();
    const int m = ws.n() - 1;
    std::vector<VerifyResult> results;

    std::vector<std::vector<double>> axes;
    for (int k = 0; k < m; ++k) axes.push_back(subsample(sc.u_samples(k), opt.max_axis_samples));
    const auto ts = subsample(sc.t_samples(), opt.max_axis_samples);

    auto sweep = [&](auto&& fn) {
        std::vector<int> idx(m, 0);
        std::vector<double> u(m);
        while (true) {
            for (int k = 0; k < m; ++k) u[k] = axes[k][idx[k]];
            for (double t : ts) fn(u, t);
            int k = m - 1;
            for (; k >= 0; --k) {
                if (++idx[k] < static_cast<int>(axes[k].size())) break;
                idx[k] = 0;
            }
            if (k < 0) break;
        }
    };

    // frame identities + lightlikeness of the Gauss directions
    {
        VerifyResult r{"frame identities", true, 0.0, sc.tol.frame, ""};
        sweep([&](const std::vector<double>& u, double t) {
            const MomentaryFrame f = ws.frame_at(u, t);
            if (!f.ok()) {
                r.pass = false;
                r.note = "invalid frame (" + to_string(f.status) + ")";
                return;
            }
            double w = std::abs(pseudo_dot(f.nS, f.nS) - 1.0);
            w = std::max(w, std::abs(pseudo_dot(f.nT, f.nT) + 1.0));
            w = std::max(w, std::abs(pseudo_dot(f.nS, f.nT)));
            for (const auto& xu : f.tangent_u) {
                w = std::max(w, std::abs(pseudo_dot(f.nS, xu)));
                w = std::max(w, std::abs(pseudo_dot(f.nT, xu)));
            }
            for (int sign : {+1, -1}) {
                const MinkVec lg = lightcone_gauss(f, sign);
                w = std::max(w, std::abs(pseudo_dot(lg, lg)));
            }
            r.worst = std::max(r.worst, w);
        });
        r.pass = r.pass && r.worst <= r.tolerance;
        results.push_back(r);
    }

    // Weingarten formulae
    {
        VerifyResult r{"weingarten residuals", true, 0.0, sc.tol.reconcile, ""};
        sweep([&](const std::vector<double>& u, double t) {
            for (int sign : sc.signs()) {
                try {
                    const auto res = weingarten_residuals(ws, u, t, sign);
                    r.worst =
                        std::max(r.worst, std::max(res.formula_a, res.formula_b) / res.scale);
                } catch (const NumericalError& e) {
                    r.pass = false;
                    r.note = e.what();
                }
            }
        });
        r.pass = r.pass && r.worst <= r.tolerance;
        results.push_back(r);
    }

    // focal points pass the degeneracy oracle; roots match eigenvalues
    {
        VerifyResult r{"focal degeneracy oracle", true, 0.0, sc.tol.criticality, ""};
        VerifyResult rr{"focal roots vs eigenvalues", true, 0.0, 1e-7, ""};
        VerifyResult rm{"morse family non-degeneracy", true, 0.0, sc.tol.rank, "rank margin"};
        sweep([&](const std::vector<double>& u, double t) {
            for (int sign : sc.signs()) {
                try {
                    const auto pts = lightlike_focal_points(ws, u, t, sign);
                    const auto roots = focal_mu_roots(ws, u, t, sign, sc.mu_range);
                    for (const auto& fp : pts) {
                        if (fp.mu > sc.mu_range[0] && fp.mu < sc.mu_range[1]) {
                            double best = 1e300;
                            for (double root : roots)
                                best = std::min(best, std::abs(root - fp.mu));
                            rr.worst = std::max(rr.worst, best);
                        }
                        const auto mf = verify_morse_family(ws, u, t, fp.lambda, sign);
                        if (!mf.pass()) {
                            rm.pass = false;
                            rm.note = "rank or dG/dt check failed";
                        }
                    }
                } catch (const NumericalError& e) {
                    r.pass = false;
                    r.note = e.what();
                }
            }
        });
        rr.pass = rr.worst <= rr.tolerance;
        results.push_back(r);
        results.push_back(rr);
        results.push_back(rm);
    }

    // gradient of the distance-squared function vs finite differences
    {
        VerifyResult r{"distance gradient consistency", true, 0.0, 1e-5, ""};
        std::mt19937 rng(opt.seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int it = 0; it < 50; ++it) {
            std::vector<double> u(m);
            for (int k = 0; k < m; ++k) {
                const auto [lo, hi] = sc.u_domain[k];
                u[k] = lo + (0.05 + 0.9 * unit(rng)) * (hi - lo);
            }
            const double t = sc.t_domain[0] +
                             (0.05 + 0.9 * unit(rng)) * (sc.t_domain[1] - sc.t_domain[0]);
            MinkVec lambda(ws.dim());
            for (int c = 0; c < ws.dim(); ++c) lambda[c] = 4.0 * (unit(rng) - 0.5);
            const auto rep = criticality_check(ws, u, t, lambda, sc.tol.criticality);
            const double h = 1e-5;
            for (int k = 0; k < m; ++k) {
                std::vector<double> up = u, um = u;
                up[k] += h;
                um[k] -= h;
                const double fd =
                    (G_eval(ws, up, t, lambda) - G_eval(ws, um, t, lambda)) / (2 * h);
                const double scale = std::max(1.0, std::abs(rep.grad_u[k]));
                r.worst = std::max(r.worst, std::abs(fd - rep.grad_u[k]) / scale);
            }
        }
        r.pass = r.worst <= r.tolerance;
        results.push_back(r);
    }

    // contact form along the lifted critical set
    {
        VerifyResult r{"legendrian contact residual", true, 0.0, 1e-5, ""};
        r.worst = legendrian_contact_residual(ws, opt.contact_curves, opt.seed);
        r.pass = r.worst <= r.tolerance;
        results.push_back(r);
    }

    // two-path curvature agreement (surfaces only)
    if (ws.n() == 2) {
        VerifyResult r{"curvature two-path agreement", true, 0.0, 1e-6, ""};
        sweep([&](const std::vector<double>& u, double t) {
            try {
                lightcone_curvatures(ws, u[0], t);  // throws beyond 1e-6
            } catch (const NumericalError& e) {
                r.pass = false;
                r.note = e.what();
            }
        });
        results.push_back(r);
    }

    return results;
}

}  // namespace brc
