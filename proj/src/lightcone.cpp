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

#include "brc/lightcone.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace brc {

MinkVec lightcone_gauss(const MomentaryFrame& frame, int sign) {
    frame.require_ok();
    return sign > 0 ? frame.nT + frame.nS : frame.nT - frame.nS;
}

namespace {

// h_ij from embedding jets alone: differentiate <LG, X_{u_j}> = 0 once to
// get h_ij = <LG, X_{u_i u_j}>.
Matrix second_fundamental_clean(const WorldSheet& ws, const MomentaryFrame& frame,
                                std::span<const double> u, double t, int sign) {
    const int n = ws.n();
    const int m = n - 1;
    std::vector<int> dirs(m);
    for (int i = 0; i < m; ++i) dirs[i] = i;
    const auto jets = ws.component_jets(u, t, 2, dirs);
    const MinkVec lg = lightcone_gauss(frame, sign);

    Matrix h(m, m);
    std::vector<int> alpha(m, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            std::fill(alpha.begin(), alpha.end(), 0);
            alpha[i] += 1;
            alpha[j] += 1;
            MinkVec xuu(ws.dim());
            for (int c = 0; c < ws.dim(); ++c) xuu[c] = jets[c].deriv(alpha);
            h(i, j) = pseudo_dot(lg, xuu);
            h(j, i) = h(i, j);
        }
    }
    return h;
}

// h_ij from the differentiated Gauss-map field along each u-direction.
Matrix second_fundamental_framefield(const WorldSheet& ws, std::span<const double> u, double t,
                                     int sign) {
    const int n = ws.n();
    const int m = n - 1;
    Matrix h(m, m);
    const int exp1[1] = {1};
    for (int i = 0; i < m; ++i) {
        const JetFrame jf = ws.frame_jets_along(u, t, i, 1);
        if (!jf.ok()) throw NumericalError("second_fundamental: frame field not valid");
        const auto lg = jf.gauss(sign);
        for (int j = 0; j < m; ++j) {
            double acc = 0.0;
            for (int c = 0; c < ws.dim(); ++c) {
                const double dlg = lg[c].deriv(exp1);
                const double xu = jf.tangent_u[j][c].value();
                acc += (c == 0 ? -1.0 : 1.0) * (-dlg) * xu;
            }
            h(i, j) = acc;
        }
    }
    // symmetric up to round-off
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const double avg = 0.5 * (h(i, j) + h(j, i));
            h(i, j) = h(j, i) = avg;
        }
    return h;
}

}  // namespace

Matrix second_fundamental(const WorldSheet& ws, std::span<const double> u, double t, int sign) {
    const MomentaryFrame frame = ws.frame_at(u, t);
    frame.require_ok();
    const Matrix clean = second_fundamental_clean(ws, frame, u, t, sign);
    const Matrix field = second_fundamental_framefield(ws, u, t, sign);

    double diff = 0.0, scale = 1.0;
    for (std::size_t i = 0; i < clean.rows(); ++i)
        for (std::size_t j = 0; j < clean.cols(); ++j) {
            diff = std::max(diff, std::abs(clean(i, j) - field(i, j)));
            scale = std::max(scale, std::abs(clean(i, j)));
        }
    if (diff > ws.scene().tol.reconcile * scale) {
        std::ostringstream ss;
        ss << "second_fundamental: derivative paths disagree by " << diff << " (scale " << scale
           << ") at t=" << t;
        throw NumericalError(ss.str());
    }
    return clean;
}

CurvatureData principal_curvatures(const MomentaryFrame& frame, const Matrix& h, int sign) {
    frame.require_ok();
    const auto eig = generalized_symmetric_eig(h, frame.g);
    if (!eig) throw NumericalError("principal_curvatures: first fundamental form not SPD");

    CurvatureData cd;
    cd.sign = sign;
    cd.h = h;
    cd.kappas = eig->values;
    cd.eigvecs = eig->vectors;

    // weingarten = h g^{-1}: each row solves g y = (row of h), g symmetric
    const std::size_t m = h.rows();
    cd.weingarten = Matrix(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<double> row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = h(i, j);
        Matrix gcopy = frame.g;
        if (!lu_solve(gcopy, row)) throw NumericalError("principal_curvatures: singular g");
        for (std::size_t j = 0; j < m; ++j) cd.weingarten(i, j) = row[j];
    }

    cd.gauss_kronecker = 1.0;
    for (double k : cd.kappas) cd.gauss_kronecker *= k;
    return cd;
}

CurvatureData curvature_data(const WorldSheet& ws, std::span<const double> u, double t,
                             int sign) {
    const MomentaryFrame frame = ws.frame_at(u, t);
    frame.require_ok();
    const Matrix h = second_fundamental(ws, u, t, sign);
    return principal_curvatures(frame, h, sign);
}

WeingartenResiduals weingarten_residuals(const WorldSheet& ws, std::span<const double> u,
                                         double t, int sign) {
    const MomentaryFrame frame = ws.frame_at(u, t);
    frame.require_ok();
    const Matrix h = second_fundamental(ws, u, t, sign);
    const CurvatureData cd = principal_curvatures(frame, h, sign);
    const MinkVec lg = lightcone_gauss(frame, sign);
    const int n = ws.n();
    const int m = n - 1;
    const int exp1[1] = {1};

    WeingartenResiduals out;
    for (int i = 0; i < m; ++i) {
        const JetFrame jf = ws.frame_jets_along(u, t, i, 1);
        if (!jf.ok()) throw NumericalError("weingarten_residuals: frame field not valid");
        const auto lgj = jf.gauss(sign);

        MinkVec dlg(ws.dim());
        for (int c = 0; c < ws.dim(); ++c) dlg[c] = lgj[c].deriv(exp1);
        MinkVec dnt(ws.dim());
        for (int c = 0; c < ws.dim(); ++c) dnt[c] = jf.nT[c].deriv(exp1);

        MinkVec correction(ws.dim());
        for (int j = 0; j < m; ++j) correction += cd.weingarten(i, j) * frame.tangent_u[j];

        // (a): (LG)_{u_i} = <nS, (nT)_{u_i}> LG - sum_j h_i^j X_{u_j}
        const double factor = pseudo_dot(frame.nS, dnt);
        const MinkVec res_a = dlg - factor * lg + correction;

        // (b): tangential part of (LG)_{u_i} = -sum_j h_i^j X_{u_j}
        std::vector<double> rhs(m);
        for (int j = 0; j < m; ++j) rhs[j] = pseudo_dot(dlg, frame.tangent_u[j]);
        Matrix gcopy = frame.g;
        if (!lu_solve(gcopy, rhs)) throw NumericalError("weingarten_residuals: singular g");
        MinkVec proj(ws.dim());
        for (int j = 0; j < m; ++j) proj += rhs[j] * frame.tangent_u[j];
        const MinkVec res_b = proj + correction;

        out.formula_a = std::max(out.formula_a, res_a.sup_norm());
        out.formula_b = std::max(out.formula_b, res_b.sup_norm());
        out.scale = std::max({out.scale, dlg.sup_norm(), correction.sup_norm()});
    }
    return out;
}

EvoluteCloud evolute_points(const WorldSheet& ws) {
    if (ws.n() != 2)
        throw ValidationError("evolute_points: only defined for surfaces (dim 3)");
    const Scene& sc = ws.scene();
    EvoluteCloud cloud;
    const int dirs_arr[2] = {0, 1};
    const std::span<const int> dirs(dirs_arr, 2);

    for (double t : sc.t_samples()) {
        for (double s : sc.u_samples(0)) {
            const double uu[1] = {s};
            const MomentaryFrame frame = ws.frame_at(std::span<const double>(uu, 1), t);
            if (!frame.ok()) continue;
            const auto jets = ws.component_jets(std::span<const double>(uu, 1), t, 2, dirs);

            // Lorentzian first fundamental form of W over (u, t) and the
            // second fundamental form against nS.
            auto dvec = [&](int a, int b) {
                MinkVec v(ws.dim());
                const int alpha[2] = {a, b};
                for (int c = 0; c < ws.dim(); ++c) v[c] = jets[c].deriv(alpha);
                return v;
            };
            const MinkVec xu = dvec(1, 0), xt = dvec(0, 1);
            const MinkVec xuu = dvec(2, 0), xut = dvec(1, 1), xtt = dvec(0, 2);

            const double i11 = pseudo_dot(xu, xu), i12 = pseudo_dot(xu, xt),
                         i22 = pseudo_dot(xt, xt);
            const double ii11 = pseudo_dot(xuu, frame.nS), ii12 = pseudo_dot(xut, frame.nS),
                         ii22 = pseudo_dot(xtt, frame.nS);

            const double det_i = i11 * i22 - i12 * i12;
            if (std::abs(det_i) < 1e-14) {
                ++cloud.skipped_flat;
                continue;
            }
            // weingarten = I^{-1} II
            const double w11 = (i22 * ii11 - i12 * ii12) / det_i;
            const double w12 = (i22 * ii12 - i12 * ii22) / det_i;
            const double w21 = (-i12 * ii11 + i11 * ii12) / det_i;
            const double w22 = (-i12 * ii12 + i11 * ii22) / det_i;

            const double tr = w11 + w22;
            const double dt = w11 * w22 - w12 * w21;
            const double disc = tr * tr - 4.0 * dt;
            if (disc < 0.0) {
                ++cloud.skipped_complex;
                continue;
            }
            const double root = std::sqrt(std::max(0.0, disc));
            const double kappa[2] = {0.5 * (tr - root), 0.5 * (tr + root)};
            for (int b = 0; b < 2; ++b) {
                if (std::abs(kappa[b]) <= sc.tol.kappa_zero) {
                    ++cloud.skipped_flat;
                    continue;
                }
                EvolutePoint ep;
                ep.point = frame.point + (1.0 / kappa[b]) * frame.nS;
                ep.u = s;
                ep.t = t;
                ep.branch = b;
                ep.kappa = kappa[b];
                cloud.points.push_back(std::move(ep));
            }
        }
    }
    return cloud;
}

}  // namespace brc
