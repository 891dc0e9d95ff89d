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

#include "brc/lightsheets.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "brc/distance.hpp"

namespace brc {

MinkVec light_sheet_point(const WorldSheet& ws, std::span<const double> u, double t, double mu,
                          int sign) {
    const MomentaryFrame frame = ws.frame_at(u, t);
    frame.require_ok();
    return frame.point + mu * lightcone_gauss(frame, sign);
}

std::vector<FocalPoint> lightlike_focal_points(const WorldSheet& ws, std::span<const double> u,
                                               double t, int sign) {
    const Scene& sc = ws.scene();
    const MomentaryFrame frame = ws.frame_at(u, t);
    frame.require_ok();
    const Matrix h = second_fundamental(ws, u, t, sign);
    const CurvatureData cd = principal_curvatures(frame, h, sign);
    const MinkVec lg = lightcone_gauss(frame, sign);

    std::vector<FocalPoint> out;
    for (std::size_t b = 0; b < cd.kappas.size(); ++b) {
        const double kappa = cd.kappas[b];
        if (std::abs(kappa) <= sc.tol.kappa_zero) continue;  // focal point at infinity
        FocalPoint fp;
        fp.kappa = kappa;
        fp.mu = 1.0 / kappa;
        fp.lambda = frame.point + fp.mu * lg;
        fp.t = t;
        fp.u.assign(u.begin(), u.end());
        fp.sign = sign;
        fp.branch = static_cast<int>(b);

        const auto oracle = criticality_check(ws, u, t, fp.lambda, sc.tol.criticality);
        if (oracle.verdict != CriticalVerdict::DegenerateCritical) {
            std::ostringstream ss;
            ss << "focal point failed the degeneracy oracle at t=" << t
               << " (verdict " << to_string(oracle.verdict) << ", |g|=" << oracle.g_rel
               << ", |grad|=" << oracle.grad_rel << ", |detH|=" << oracle.det_rel << ")";
            throw NumericalError(ss.str());
        }
        out.push_back(std::move(fp));
    }
    return out;
}

namespace {

// Iterate the full u-grid in lexicographic order.
template <class F>
void for_each_u(const Scene& sc, F&& fn) {
    const int m = sc.dim - 2;
    std::vector<std::vector<double>> axes;
    for (int k = 0; k < m; ++k) axes.push_back(sc.u_samples(k));
    std::vector<int> idx(m, 0);
    std::vector<double> u(m);
    while (true) {
        for (int k = 0; k < m; ++k) u[k] = axes[k][idx[k]];
        fn(u);
        int k = m - 1;
        for (; k >= 0; --k) {
            if (++idx[k] < static_cast<int>(axes[k].size())) break;
            idx[k] = 0;
        }
        if (k < 0) break;
    }
}

}  // namespace

CausticCloud br_caustic(const WorldSheet& ws) {
    const Scene& sc = ws.scene();
    CausticCloud cloud;
    for (double t : sc.t_samples()) {
        for_each_u(sc, [&](const std::vector<double>& u) {
            for (int sign : sc.signs()) {
                try {
                    auto pts = lightlike_focal_points(ws, u, t, sign);
                    for (auto& p : pts) cloud.points.push_back(std::move(p));
                } catch (const NumericalError&) {
                    ++cloud.skipped;
                }
            }
        });
    }
    return cloud;
}

CausticCloud unfolded_focal(const WorldSheet& ws) { return br_caustic(ws); }

double lightsheet_jacobian_min_sv(const WorldSheet& ws, std::span<const double> u, double t,
                                  double mu, int sign) {
    const int n = ws.n();
    const int m = n - 1;
    const int exp1[1] = {1};
    Matrix jac(ws.dim(), n);  // columns: d/du_i, d/dmu
    for (int i = 0; i < m; ++i) {
        const JetFrame jf = ws.frame_jets_along(u, t, i, 1);
        if (!jf.ok()) throw NumericalError("lightsheet_jacobian: frame field not valid");
        const auto lg = jf.gauss(sign);
        for (int c = 0; c < ws.dim(); ++c)
            jac(c, i) = jf.tangent_u[i][c].value() + mu * lg[c].deriv(exp1);
    }
    const MomentaryFrame frame = ws.frame_at(u, t);
    frame.require_ok();
    const MinkVec lg0 = lightcone_gauss(frame, sign);
    for (int c = 0; c < ws.dim(); ++c) jac(c, n - 1) = lg0[c];
    return singular_values(jac).back();
}

// ---------------------------------------------------------------------------
// Maxwell set
// ---------------------------------------------------------------------------

namespace {

struct FrontSample {
    double s, mu;
    int sign;
    MinkVec p;
    int si = 0, mj = 0;  // structured indices for spacing estimates
};

struct SliceGeometry {
    const WorldSheet* ws;
    double t;
    double period;        // u-domain width (periodic wrap) or 0
    double s_spacing;
    double mu_spacing;

    double s_distance(double a, double b) const {
        double d = std::abs(a - b);
        if (period > 0.0) d = std::min(d, period - d);
        return d;
    }

    // trivial-coincidence exclusion: the same patch of the same branch
    bool same_patch(double s1, double mu1, int sig1, double s2, double mu2, int sig2) const {
        return sig1 == sig2 && std::abs(mu1 - mu2) <= 3.0 * mu_spacing &&
               s_distance(s1, s2) <= 3.0 * s_spacing;
    }
};

std::array<long long, 3> cell_of(const MinkVec& p, double size) {
    return {static_cast<long long>(std::floor(p[0] / size)),
            static_cast<long long>(std::floor(p[1] / size)),
            static_cast<long long>(std::floor(p[2] / size))};
}

// Newton on F(mu1, s2, mu2) = LH(s1, mu1, sig1) - LH(s2, mu2, sig2).
struct NewtonOutcome {
    bool converged = false;
    double mu1 = 0.0, s2 = 0.0, mu2 = 0.0;
    MinkVec lambda;
};

NewtonOutcome refine_pair(const WorldSheet& ws, const SliceGeometry& geo, double s1, int sig1,
                          double mu1, double s2, int sig2, double mu2) {
    const Scene& sc = ws.scene();
    NewtonOutcome out;
    const double u1[1] = {s1};
    const MomentaryFrame f1 = ws.frame_at(std::span<const double>(u1, 1), geo.t);
    if (!f1.ok()) return out;
    const MinkVec lg1 = lightcone_gauss(f1, sig1);
    const int exp1[1] = {1};

    double x[3] = {mu1, s2, mu2};
    for (int iter = 0; iter < 30; ++iter) {
        const double u2[1] = {x[1]};
        const JetFrame jf2 = ws.frame_jets_along(std::span<const double>(u2, 1), geo.t, 0, 1);
        if (!jf2.ok()) return out;
        const auto lg2 = jf2.gauss(sig2);
        const MinkVec base2 = ws.embed(std::span<const double>(u2, 1), geo.t);

        const MinkVec p1 = f1.point + x[0] * lg1;
        MinkVec p2(ws.dim()), dp2(ws.dim()), lg2v(ws.dim());
        for (int c = 0; c < ws.dim(); ++c) {
            lg2v[c] = lg2[c].value();
            p2[c] = base2[c] + x[2] * lg2v[c];
            dp2[c] = jf2.tangent_u[0][c].value() + x[2] * lg2[c].deriv(exp1);
        }

        const MinkVec fval = p1 - p2;
        const double scale = std::max(1.0, p1.sup_norm());
        if (fval.sup_norm() <= sc.tol.newton * scale) {
            out.converged = true;
            out.mu1 = x[0];
            out.s2 = x[1];
            out.mu2 = x[2];
            out.lambda = p1;
            return out;
        }

        Matrix jac(3, 3);
        for (int c = 0; c < 3; ++c) {
            jac(c, 0) = lg1[c];
            jac(c, 1) = -dp2[c];
            jac(c, 2) = -lg2v[c];
        }
        std::vector<double> rhs = {-fval[0], -fval[1], -fval[2]};
        if (!lu_solve(jac, rhs)) return out;
        x[0] += rhs[0];
        x[1] += rhs[1];
        x[2] += rhs[2];

        const double big = 10.0 * std::max({1.0, std::abs(sc.mu_range[0]),
                                            std::abs(sc.mu_range[1])});
        if (std::abs(x[0]) > big || std::abs(x[2]) > big) return out;
        if (geo.period > 0.0) {
            const double lo = sc.u_domain[0][0];
            x[1] = lo + std::fmod(std::fmod(x[1] - lo, geo.period) + geo.period, geo.period);
        } else if (x[1] < sc.u_domain[0][0] || x[1] > sc.u_domain[0][1]) {
            return out;
        }
    }
    return out;
}

std::vector<FrontSample> sample_front(const WorldSheet& ws, double t, int s_count, int mu_count,
                                      double mu_floor, std::size_t* failures) {
    const Scene& sc = ws.scene();
    std::vector<FrontSample> samples;
    const double mu_lo = sc.mu_range[0];
    const double mu_step = (sc.mu_range[1] - sc.mu_range[0]) / mu_count;

    std::vector<double> svals(s_count);
    const auto [ulo, uhi] = sc.u_domain[0];
    const double sstep =
        sc.u_periodic[0] ? (uhi - ulo) / s_count : (uhi - ulo) / (s_count - 1);
    for (int i = 0; i < s_count; ++i) svals[i] = ulo + sstep * i;

    int sign_index = 0;
    for (int sign : sc.signs()) {
        for (int i = 0; i < s_count; ++i) {
            const double uu[1] = {svals[i]};
            const MomentaryFrame frame = ws.frame_at(std::span<const double>(uu, 1), t);
            if (!frame.ok()) {
                if (failures) ++(*failures);
                continue;
            }
            const MinkVec lg = lightcone_gauss(frame, sign);
            for (int j = 0; j <= mu_count; ++j) {
                const double mu = mu_lo + j * mu_step;
                if (std::abs(mu) < mu_floor) continue;
                samples.push_back(
                    {svals[i], mu, sign, frame.point + mu * lg, sign_index * s_count + i, j});
            }
        }
        ++sign_index;
    }
    return samples;
}

}  // namespace

MaxwellResult maxwell_set(const WorldSheet& ws) {
    if (ws.n() != 2) throw ValidationError("maxwell_set: only defined for dim 3 scenes");
    const Scene& sc = ws.scene();
    MaxwellResult result;

    const int s_count = sc.grid[0];
    const int mu_count = std::max(16, sc.grid[0] / 2);
    const double mu_spacing = (sc.mu_range[1] - sc.mu_range[0]) / mu_count;
    const double mu_floor = 2.0 * mu_spacing;

    for (double t : sc.t_samples()) {
        SliceGeometry geo;
        geo.ws = &ws;
        geo.t = t;
        geo.period = sc.u_periodic[0] ? (sc.u_domain[0][1] - sc.u_domain[0][0]) : 0.0;
        geo.s_spacing = (sc.u_domain[0][1] - sc.u_domain[0][0]) /
                        (sc.u_periodic[0] ? s_count : (s_count - 1));
        geo.mu_spacing = mu_spacing;

        std::size_t fails = 0;
        const auto samples = sample_front(ws, t, s_count, mu_count, mu_floor, &fails);
        result.dropped += fails;
        if (samples.size() < 2) continue;

        // capture radius from the median adjacent sample distance, taken
        // along both grid directions of the front parametrization
        std::vector<double> spacings;
        for (std::size_t i = 1; i < samples.size(); ++i)
            if (samples[i].si == samples[i - 1].si && samples[i].mj == samples[i - 1].mj + 1)
                spacings.push_back((samples[i].p - samples[i - 1].p).sup_norm());
        {
            std::map<std::pair<int, int>, std::map<int, std::size_t>> rows;  // (sign, mj) -> si
            for (std::size_t i = 0; i < samples.size(); ++i)
                rows[{samples[i].sign, samples[i].mj}][samples[i].si] = i;
            for (const auto& [key, row] : rows) {
                std::size_t prev = 0;
                bool have = false;
                int prev_si = 0;
                for (const auto& [si, idx] : row) {
                    if (have && si == prev_si + 1)
                        spacings.push_back((samples[idx].p - samples[prev].p).sup_norm());
                    prev = idx;
                    prev_si = si;
                    have = true;
                }
            }
        }
        if (spacings.empty()) continue;
        std::nth_element(spacings.begin(), spacings.begin() + spacings.size() / 2,
                         spacings.end());
        const double capture = 2.0 * spacings[spacings.size() / 2];
        result.capture = std::max(result.capture, capture);

        // Coincidences need equal time coordinates, i.e. |mu_a - mu_b| within
        // the capture radius, so only neighboring mu-rows can ever pair.
        const std::size_t count = samples.size();
        std::vector<double> x1(count), x2(count);
        for (std::size_t i = 0; i < count; ++i) {
            x1[i] = samples[i].p[1];
            x2[i] = samples[i].p[2];
        }

        std::map<int, std::vector<std::size_t>> rows;  // mu index -> samples, sorted by x1
        for (std::size_t i = 0; i < count; ++i) rows[samples[i].mj].push_back(i);
        for (auto& [mj, row] : rows)
            std::stable_sort(row.begin(), row.end(),
                             [&](std::size_t a, std::size_t b) { return x1[a] < x1[b]; });

        const int jwin = static_cast<int>(std::ceil(capture / geo.mu_spacing));
        std::map<std::array<long long, 3>, bool> emitted;
        auto emit_key = [&](const MinkVec& p) { return cell_of(p, 0.5 * capture); };
        // one refinement attempt per capture cell and sign pair: candidate
        // clusters around one intersection collapse to a single Newton run
        std::map<std::array<long long, 4>, bool> attempted;
        auto attempt_key = [&](const MinkVec& mid, int sa, int sb) {
            const auto c = cell_of(mid, capture);
            return std::array<long long, 4>{c[0], c[1], c[2], 3ll * sa + sb};
        };

        for (const auto& [j1, row1] : rows) {
            for (int j2 = j1; j2 <= j1 + jwin; ++j2) {
                const auto itr = rows.find(j2);
                if (itr == rows.end()) continue;
                const auto& row2 = itr->second;
                for (std::size_t i : row1) {
                    // binary search the x1 window of the partner row
                    const double lo = x1[i] - capture;
                    auto first = std::lower_bound(
                        row2.begin(), row2.end(), lo,
                        [&](std::size_t idx, double v) { return x1[idx] < v; });
                    for (auto it2 = first; it2 != row2.end(); ++it2) {
                        const std::size_t j = *it2;
                        if (x1[j] > x1[i] + capture) break;
                        if (j1 == j2 && j <= i) continue;
                        if (std::abs(x2[i] - x2[j]) > capture) continue;
                        const auto& a = samples[i];
                        const auto& b = samples[j];
                        if (std::abs(a.mu - b.mu) > capture) continue;
                        if (geo.same_patch(a.s, a.mu, a.sign, b.s, b.mu, b.sign)) continue;
                        const MinkVec mid = (a.p + b.p) * 0.5;
                        const auto akey = attempt_key(mid, a.sign, b.sign);
                        if (attempted.count(akey)) continue;
                        attempted[akey] = true;

                        const auto ref =
                            refine_pair(ws, geo, a.s, a.sign, a.mu, b.s, b.sign, b.mu);
                        if (!ref.converged) {
                            ++result.dropped;
                            continue;
                        }
                        if (std::abs(ref.mu1) < mu_floor || std::abs(ref.mu2) < mu_floor ||
                            ref.mu1 < sc.mu_range[0] - mu_spacing ||
                            ref.mu1 > sc.mu_range[1] + mu_spacing ||
                            ref.mu2 < sc.mu_range[0] - mu_spacing ||
                            ref.mu2 > sc.mu_range[1] + mu_spacing)
                            continue;
                        if (geo.same_patch(a.s, ref.mu1, a.sign, ref.s2, ref.mu2, b.sign))
                            continue;
                        const auto key = emit_key(ref.lambda);
                        if (emitted.count(key)) continue;
                        emitted[key] = true;

                        MaxwellPoint mp;
                        mp.lambda = ref.lambda;
                        mp.t = t;
                        mp.s1 = a.s;
                        mp.mu1 = ref.mu1;
                        mp.sign1 = a.sign;
                        mp.s2 = ref.s2;
                        mp.mu2 = ref.mu2;
                        mp.sign2 = b.sign;
                        result.points.push_back(std::move(mp));
                    }
                }
            }
        }
    }
    return result;
}

BruteForceMaxwell maxwell_bruteforce(const WorldSheet& ws, int s_samples, int mu_samples) {
    if (ws.n() != 2) throw ValidationError("maxwell_bruteforce: only defined for dim 3 scenes");
    const Scene& sc = ws.scene();
    const double mu_lo = sc.mu_range[0];
    const double mu_step = (sc.mu_range[1] - sc.mu_range[0]) / mu_samples;
    const double mu_floor = 2.0 * mu_step;
    const bool periodic = sc.u_periodic[0];

    std::vector<double> svals(s_samples);
    const auto [ulo, uhi] = sc.u_domain[0];
    const double sstep = periodic ? (uhi - ulo) / s_samples : (uhi - ulo) / (s_samples - 1);
    for (int i = 0; i < s_samples; ++i) svals[i] = ulo + sstep * i;

    BruteForceMaxwell out;
    const auto signs = sc.signs();

    for (double t : sc.t_samples()) {
        // base points and Gauss directions once per slice
        std::vector<MinkVec> base(s_samples);
        std::vector<std::vector<MinkVec>> gauss(signs.size(),
                                                std::vector<MinkVec>(s_samples));
        bool slice_ok = true;
        for (int i = 0; i < s_samples; ++i) {
            const double uu[1] = {svals[i]};
            const MomentaryFrame f = ws.frame_at(std::span<const double>(uu, 1), t);
            if (!f.ok()) {
                slice_ok = false;
                break;
            }
            base[i] = f.point;
            for (std::size_t a = 0; a < signs.size(); ++a)
                gauss[a][i] = lightcone_gauss(f, signs[a]);
        }
        if (!slice_ok) continue;

        for (int j = 0; j <= mu_samples; ++j) {
            const double mu = mu_lo + j * mu_step;
            if (std::abs(mu) < mu_floor) continue;

            // spatial offset curves of this mu-plane, one per sign
            std::vector<std::vector<std::array<double, 2>>> curves(signs.size());
            for (std::size_t a = 0; a < signs.size(); ++a) {
                curves[a].resize(s_samples);
                for (int i = 0; i < s_samples; ++i) {
                    curves[a][i] = {base[i][1] + mu * gauss[a][i][1],
                                    base[i][2] + mu * gauss[a][i][2]};
                }
                for (int i = 0; i + 1 < s_samples; ++i) {
                    const double d = std::max(std::abs(curves[a][i + 1][0] - curves[a][i][0]),
                                              std::abs(curves[a][i + 1][1] - curves[a][i][1]));
                    out.resolution = std::max(out.resolution, 2.0 * d);
                }
            }

            const int seg_count = periodic ? s_samples : s_samples - 1;
            auto seg = [&](std::size_t a, int i, std::array<double, 2>& p,
                           std::array<double, 2>& q) {
                p = curves[a][i];
                q = curves[a][(i + 1) % s_samples];
            };

            for (std::size_t a = 0; a < signs.size(); ++a) {
                for (std::size_t b = a; b < signs.size(); ++b) {
                    for (int i = 0; i < seg_count; ++i) {
                        std::array<double, 2> p1, q1;
                        seg(a, i, p1, q1);
                        const int jstart = (a == b) ? i + 2 : 0;
                        for (int k = jstart; k < seg_count; ++k) {
                            if (a == b) {
                                // adjacent segments of one closed curve share a node
                                if (k == i) continue;
                                if (periodic && (k + 1) % s_samples == i) continue;
                            }
                            std::array<double, 2> p2, q2;
                            seg(b, k, p2, q2);
                            // solve p1 + alpha (q1-p1) = p2 + beta (q2-p2)
                            const double rx = q1[0] - p1[0], ry = q1[1] - p1[1];
                            const double sx = q2[0] - p2[0], sy = q2[1] - p2[1];
                            const double den = rx * sy - ry * sx;
                            if (std::abs(den) < 1e-14) continue;
                            const double dx = p2[0] - p1[0], dy = p2[1] - p1[1];
                            const double alpha = (dx * sy - dy * sx) / den;
                            const double beta = (dx * ry - dy * rx) / den;
                            if (alpha < 0.0 || alpha > 1.0 || beta < 0.0 || beta > 1.0)
                                continue;
                            MinkVec pt(3);
                            pt[0] = t + mu;
                            pt[1] = p1[0] + alpha * rx;
                            pt[2] = p1[1] + alpha * ry;
                            out.points.push_back(std::move(pt));
                        }
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace brc
