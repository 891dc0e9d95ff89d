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

#include "brc/worldsheet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace brc {

std::string to_string(FrameStatus s) {
    switch (s) {
        case FrameStatus::Ok: return "Ok";
        case FrameStatus::NotImmersed: return "NotImmersed";
        case FrameStatus::NotSpacelike: return "NotSpacelike";
        case FrameStatus::NotTimelike: return "NotTimelike";
    }
    return "?";
}

void MomentaryFrame::require_ok() const {
    if (ok()) return;
    std::ostringstream ss;
    ss << "invalid momentary frame (" << to_string(status) << ") at (";
    for (double v : u) ss << v << ", ";
    ss << "t=" << t << ")";
    throw NumericalError(ss.str());
}

std::vector<Jet> JetFrame::gauss(int sign) const {
    std::vector<Jet> lg;
    lg.reserve(nT.size());
    for (std::size_t c = 0; c < nT.size(); ++c)
        lg.push_back(sign > 0 ? nT[c] + nS[c] : nT[c] - nS[c]);
    return lg;
}

bool ValidationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ValidationCheck& c) { return c.pass; });
}

std::string ValidationReport::table() const {
    std::ostringstream ss;
    ss << "check                     status  margin        worst at\n";
    for (const auto& c : checks) {
        ss << c.name;
        for (std::size_t i = c.name.size(); i < 26; ++i) ss << ' ';
        ss << (c.pass ? "pass    " : "FAIL    ");
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%-13.4g", c.margin);
        ss << buf << " (";
        for (std::size_t i = 0; i < c.worst_at.size(); ++i)
            ss << (i ? ", " : "") << c.worst_at[i];
        ss << ")\n";
    }
    ss << "samples: " << samples << ", min eigenvalue of g: " << min_g_eigenvalue << "\n";
    return ss.str();
}

WorldSheet::WorldSheet(Scene scene) : scene_(std::move(scene)) {}

void WorldSheet::check_domain(std::span<const double>& u, double& t,
                              std::vector<double>& wrapped) const {
    const int m = n() - 1;
    if (static_cast<int>(u.size()) != m)
        throw ValidationError("worldsheet: expected " + std::to_string(m) + " u-parameters");
    constexpr double slack = 1e-9;
    wrapped.assign(u.begin(), u.end());
    for (int k = 0; k < m; ++k) {
        const auto [lo, hi] = scene_.u_domain[k];
        if (scene_.u_periodic[k]) {
            const double period = hi - lo;
            wrapped[k] = lo + std::fmod(std::fmod(wrapped[k] - lo, period) + period, period);
        } else if (wrapped[k] < lo - slack || wrapped[k] > hi + slack) {
            throw ValidationError("worldsheet: u" + std::to_string(k + 1) + " out of domain");
        }
    }
    if (t < scene_.t_domain[0] - slack || t > scene_.t_domain[1] + slack)
        throw ValidationError("worldsheet: t out of domain");
    u = wrapped;
}

MinkVec WorldSheet::embed(std::span<const double> u, double t) const {
    std::vector<double> wrapped;
    check_domain(u, t, wrapped);
    std::vector<double> values(wrapped.begin(), wrapped.end());
    values.push_back(t);
    MinkVec p(scene_.dim);
    for (int c = 0; c < scene_.dim; ++c) p[c] = scene_.embedding[c].eval(values);
    return p;
}

namespace {

// central-difference stencils, O(h^2)
struct Stencil {
    std::vector<int> offsets;
    std::vector<double> weights;  // divided by h^m later
};

const Stencil& stencil(int m) {
    static const Stencil tab[5] = {
        {{0}, {1.0}},
        {{-1, 1}, {-0.5, 0.5}},
        {{-1, 0, 1}, {1.0, -2.0, 1.0}},
        {{-2, -1, 1, 2}, {-0.5, 1.0, -1.0, 0.5}},
        {{-2, -1, 0, 1, 2}, {1.0, -4.0, 6.0, -4.0, 1.0}},
    };
    return tab[m];
}

double fd_deriv(const Expression& e, std::vector<double>& values, std::array<int, 4> alpha,
                std::span<const int> dirs, double h) {
    int k = -1;
    for (std::size_t i = 0; i < dirs.size(); ++i)
        if (alpha[i] > 0) {
            k = static_cast<int>(i);
            break;
        }
    if (k < 0) return e.eval(values);
    const int m = alpha[k];
    alpha[k] = 0;
    const Stencil& st = stencil(m);
    const double x0 = values[dirs[k]];
    double acc = 0.0;
    for (std::size_t i = 0; i < st.offsets.size(); ++i) {
        values[dirs[k]] = x0 + st.offsets[i] * h;
        acc += st.weights[i] * fd_deriv(e, values, alpha, dirs, h);
    }
    values[dirs[k]] = x0;
    return acc / std::pow(h, m);
}

}  // namespace

std::vector<Jet> WorldSheet::fd_component_jets(std::span<const double> u, double t, int order,
                                               std::span<const int> dirs) const {
    const int nv = static_cast<int>(dirs.size());
    std::vector<double> values(u.begin(), u.end());
    values.push_back(t);
    const auto exps = Jet::exponents(nv, order);
    std::vector<Jet> out;
    out.reserve(scene_.dim);
    for (int c = 0; c < scene_.dim; ++c) {
        Jet j(nv, order);
        for (const auto& alpha : exps) {
            double fact = 1.0;
            for (int k = 0; k < nv; ++k)
                for (int i = 2; i <= alpha[k]; ++i) fact *= i;
            const double d =
                fd_deriv(scene_.embedding[c], values, alpha, dirs, scene_.fd_step);
            j.set_coeff(std::span<const int>(alpha.data(), nv), d / fact);
        }
        out.push_back(std::move(j));
    }
    return out;
}

std::vector<Jet> WorldSheet::component_jets(std::span<const double> u, double t, int order,
                                            std::span<const int> dirs) const {
    std::vector<double> wrapped;
    check_domain(u, t, wrapped);
    if (scene_.diff_mode == DiffMode::FiniteDifference)
        return fd_component_jets(u, t, order, dirs);
    std::vector<double> values(u.begin(), u.end());
    values.push_back(t);
    std::vector<Jet> out;
    out.reserve(scene_.dim);
    for (int c = 0; c < scene_.dim; ++c)
        out.push_back(scene_.embedding[c].eval_jet(values, order, dirs));
    return out;
}

namespace {

std::vector<int> all_directions(int nparams) {
    std::vector<int> dirs(nparams);
    for (int i = 0; i < nparams; ++i) dirs[i] = i;
    return dirs;
}

MinkVec to_mink(const std::vector<double>& v) { return MinkVec(v); }

}  // namespace

MomentaryFrame WorldSheet::frame_at(std::span<const double> u, double t) const {
    const int nparams = n();
    const auto dirs = all_directions(nparams);
    const auto jets = component_jets(u, t, 1, dirs);

    const int m = nparams - 1;
    std::vector<std::vector<double>> tangent_u(m, std::vector<double>(scene_.dim));
    std::vector<double> tangent_t(scene_.dim), point(scene_.dim);
    std::vector<int> alpha(nparams, 0);
    for (int c = 0; c < scene_.dim; ++c) {
        point[c] = jets[c].value();
        for (int k = 0; k < m; ++k) {
            alpha.assign(nparams, 0);
            alpha[k] = 1;
            tangent_u[k][c] = jets[c].deriv(alpha);
        }
        alpha.assign(nparams, 0);
        alpha[nparams - 1] = 1;
        tangent_t[c] = jets[c].deriv(alpha);
    }

    auto f = build_frame<double>(std::move(tangent_u), std::move(tangent_t),
                                 scene_.tol.immersion);

    MomentaryFrame out;
    out.u.assign(u.begin(), u.end());
    out.t = t;
    out.point = to_mink(point);
    for (auto& tv : f.tangent_u) out.tangent_u.push_back(to_mink(tv));
    out.tangent_t = to_mink(f.tangent_t);
    out.status = f.status;
    if (!f.g.empty()) {
        out.g = Matrix(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) out.g(i, j) = f.g[i][j];
    }
    if (f.status == FrameStatus::Ok) {
        out.nS = to_mink(f.nS);
        out.nT = to_mink(f.nT);
    }
    return out;
}

JetFrame WorldSheet::frame_jets_along(std::span<const double> u, double t, int dir,
                                      int order) const {
    const int nparams = n();
    if (dir < 0 || dir >= nparams - 1)
        throw ValidationError("frame_jets_along: direction out of range");
    const auto dirs = all_directions(nparams);
    const auto full = component_jets(u, t, order + 1, dirs);

    // Extract univariate jets (in the chosen direction) of X_{u_k} and X_t
    // from the multivariate Taylor coefficients.
    auto line_jet = [&](const Jet& fj, int wrt) {
        Jet out(1, order);
        std::vector<int> alpha(nparams, 0);
        for (int k = 0; k <= order; ++k) {
            std::fill(alpha.begin(), alpha.end(), 0);
            double c;
            if (wrt == dir) {
                alpha[dir] = k + 1;
                c = fj.coeff(alpha) * (k + 1);
            } else {
                alpha[dir] = k;
                alpha[wrt] += 1;
                c = fj.coeff(alpha);
            }
            const int exp[1] = {k};
            out.set_coeff(exp, c);
        }
        return out;
    };

    const int m = nparams - 1;
    std::vector<std::vector<Jet>> tangent_u(m);
    std::vector<Jet> tangent_t;
    for (int c = 0; c < scene_.dim; ++c) {
        for (int k = 0; k < m; ++k) tangent_u[k].push_back(line_jet(full[c], k));
        tangent_t.push_back(line_jet(full[c], nparams - 1));
    }

    auto f = build_frame<Jet>(std::move(tangent_u), std::move(tangent_t),
                              scene_.tol.immersion);
    JetFrame out;
    out.direction = dir;
    out.tangent_u = std::move(f.tangent_u);
    out.tangent_t = std::move(f.tangent_t);
    out.g = std::move(f.g);
    out.nS = std::move(f.nS);
    out.nT = std::move(f.nT);
    out.status = f.status;
    return out;
}

ValidationReport WorldSheet::validate() const {
    const int nparams = n();
    const int m = nparams - 1;
    const auto dirs = all_directions(nparams);

    ValidationReport rep;
    ValidationCheck immersion{"immersion", true, 1e300, {}};
    ValidationCheck timelike{"timelike tangent plane", true, 1e300, {}};
    ValidationCheck spacelike{"spacelike momentary space", true, 1e300, {}};
    ValidationCheck nt{"timelike normal nT", true, -1e300, {}};
    rep.min_g_eigenvalue = 1e300;

    std::vector<std::vector<double>> axes;
    for (int k = 0; k < m; ++k) axes.push_back(scene_.u_samples(k));
    const auto ts = scene_.t_samples();

    std::vector<int> idx(m, 0);
    std::vector<double> u(m);
    bool done = false;
    while (!done) {
        for (int k = 0; k < m; ++k) u[k] = axes[k][idx[k]];
        for (double t : ts) {
            ++rep.samples;
            const auto frame = frame_at(u, t);
            std::vector<double> at(u.begin(), u.end());
            at.push_back(t);

            // recompute the raw margins from the tangents
            std::vector<std::vector<double>> rows;
            for (const auto& tv : frame.tangent_u) rows.push_back(tv.components());
            rows.push_back(frame.tangent_t.components());
            const auto w = wedge_t<double>(rows);
            double scale = 1.0;
            for (const auto& row : rows) {
                double sup = 0.0;
                for (double c : row) sup = std::max(sup, std::abs(c));
                scale *= sup;
            }
            double wsup = 0.0;
            for (double c : w) wsup = std::max(wsup, std::abs(c));
            const double imargin = scale > 0.0 ? wsup / scale : 0.0;
            if (imargin < immersion.margin) {
                immersion.margin = imargin;
                immersion.worst_at = at;
            }

            double wsq = -w[0] * w[0];
            for (std::size_t c = 1; c < w.size(); ++c) wsq += w[c] * w[c];
            const double nsq = wsup > 0.0 ? wsq / (wsup * wsup) : 0.0;
            if (nsq < timelike.margin) {
                timelike.margin = nsq;
                timelike.worst_at = at;
            }

            if (frame.g.rows() == static_cast<std::size_t>(m)) {
                const auto eig = symmetric_eigenvalues(frame.g);
                if (!eig.empty() && eig.front() < rep.min_g_eigenvalue)
                    rep.min_g_eigenvalue = eig.front();
                if (!eig.empty() && eig.front() < spacelike.margin) {
                    spacelike.margin = eig.front();
                    spacelike.worst_at = at;
                }
            }

            // causal character of the projected X_t
            double vsq_rel = 1.0;  // pessimistic when the projection is unavailable
            if (frame.g.rows() == static_cast<std::size_t>(m)) {
                std::vector<double> rhs(m);
                for (int i = 0; i < m; ++i)
                    rhs[i] = pseudo_dot(frame.tangent_t, frame.tangent_u[i]);
                Matrix gg = frame.g;
                if (lu_solve(gg, rhs)) {
                    MinkVec v = frame.tangent_t;
                    for (int i = 0; i < m; ++i) v -= rhs[i] * frame.tangent_u[i];
                    const double vs = v.sup_norm();
                    vsq_rel = vs > 0.0 ? pseudo_dot(v, v) / (vs * vs) : 0.0;
                }
            }
            if (vsq_rel > nt.margin) {
                nt.margin = vsq_rel;
                nt.worst_at = at;
            }
        }
        done = true;
        for (int k = m - 1; k >= 0; --k) {
            if (++idx[k] < static_cast<int>(axes[k].size())) {
                done = false;
                break;
            }
            idx[k] = 0;
        }
        if (m == 0) done = true;
    }

    immersion.pass = immersion.margin > scene_.tol.immersion;
    timelike.pass = timelike.margin > 0.0;
    spacelike.pass = spacelike.margin > 0.0;
    nt.pass = nt.margin < 0.0;
    rep.checks = {immersion, timelike, spacelike, nt};
    return rep;
}

}  // namespace brc
