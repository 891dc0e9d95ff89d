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

#include "brc/distance.hpp"

#include <algorithm>
#include <cmath>

#include "brc/lightcone.hpp"

namespace brc {

std::string to_string(CriticalVerdict v) {
    switch (v) {
        case CriticalVerdict::NonCritical: return "NonCritical";
        case CriticalVerdict::Critical: return "Critical";
        case CriticalVerdict::DegenerateCritical: return "DegenerateCritical";
    }
    return "?";
}

double G_eval(const WorldSheet& ws, std::span<const double> u, double t, const MinkVec& lambda) {
    const MinkVec d = ws.embed(u, t) - lambda;
    return pseudo_dot(d, d);
}

namespace {

struct GDerivs {
    MinkVec diff;  // X - lambda
    double g = 0.0;
    std::vector<double> grad;
    Matrix hess;
    double dG_dt = 0.0;
    double scale_g = 1.0, scale_grad = 1.0, scale_det = 1.0;
};

GDerivs g_derivatives(const WorldSheet& ws, std::span<const double> u, double t,
                      const MinkVec& lambda) {
    const int n = ws.n();
    const int m = n - 1;
    std::vector<int> dirs(n);
    for (int i = 0; i < n; ++i) dirs[i] = i;
    const auto jets = ws.component_jets(u, t, 2, dirs);

    GDerivs d;
    MinkVec x(ws.dim());
    for (int c = 0; c < ws.dim(); ++c) x[c] = jets[c].value();
    d.diff = x - lambda;
    d.g = pseudo_dot(d.diff, d.diff);

    std::vector<int> alpha(n, 0);
    auto dvec = [&](std::span<const int> a) {
        MinkVec v(ws.dim());
        for (int c = 0; c < ws.dim(); ++c) v[c] = jets[c].deriv(a);
        return v;
    };

    double tangent_sup = 0.0;
    d.grad.resize(m);
    std::vector<MinkVec> xu(m);
    for (int i = 0; i < m; ++i) {
        std::fill(alpha.begin(), alpha.end(), 0);
        alpha[i] = 1;
        xu[i] = dvec(alpha);
        d.grad[i] = 2.0 * pseudo_dot(xu[i], d.diff);
        tangent_sup = std::max(tangent_sup, xu[i].sup_norm());
    }

    d.hess = Matrix(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            std::fill(alpha.begin(), alpha.end(), 0);
            alpha[i] += 1;
            alpha[j] += 1;
            const MinkVec xuu = dvec(alpha);
            d.hess(i, j) =
                2.0 * (pseudo_dot(xuu, d.diff) + pseudo_dot(xu[i], xu[j]));
            d.hess(j, i) = d.hess(i, j);
        }

    std::fill(alpha.begin(), alpha.end(), 0);
    alpha[n - 1] = 1;
    d.dG_dt = 2.0 * pseudo_dot(dvec(alpha), d.diff);

    const double diff_sup = d.diff.sup_norm();
    d.scale_g = std::max(1.0, diff_sup * diff_sup);
    d.scale_grad = std::max(1.0, tangent_sup * diff_sup);
    d.scale_det = std::max(1.0, std::pow(d.hess.sup_norm(), m));
    return d;
}

}  // namespace

CriticalityReport criticality_check(const WorldSheet& ws, std::span<const double> u, double t,
                                    const MinkVec& lambda, double tol) {
    const MinkVec x = ws.embed(u, t);
    if ((x - lambda).sup_norm() <= 1e-14 * std::max(1.0, x.sup_norm()))
        throw ValidationError("criticality_check: lambda coincides with the surface point");

    const GDerivs d = g_derivatives(ws, u, t, lambda);
    CriticalityReport rep;
    rep.g_value = d.g;
    rep.grad_u = d.grad;
    rep.hessian_u = d.hess;
    rep.det_hessian = det(d.hess);
    rep.dG_dt = d.dG_dt;

    rep.g_rel = std::abs(d.g) / d.scale_g;
    rep.grad_rel = 0.0;
    for (double gi : d.grad) rep.grad_rel = std::max(rep.grad_rel, std::abs(gi) / d.scale_grad);
    rep.det_rel = std::abs(rep.det_hessian) / d.scale_det;

    if (rep.g_rel <= tol && rep.grad_rel <= tol)
        rep.verdict = rep.det_rel <= tol ? CriticalVerdict::DegenerateCritical
                                         : CriticalVerdict::Critical;
    else
        rep.verdict = CriticalVerdict::NonCritical;
    return rep;
}

std::vector<double> focal_mu_roots(const WorldSheet& ws, std::span<const double> u, double t,
                                   int sign, std::array<double, 2> mu_range) {
    const MomentaryFrame frame = ws.frame_at(u, t);
    frame.require_ok();
    const MinkVec lg = lightcone_gauss(frame, sign);
    const int m = ws.n() - 1;

    // Hessian along the ray: H_ij(mu) = 2 (<X_{u_i u_j}, X - lambda(mu)> + g_ij)
    // with X - lambda(mu) = -mu * LG. Everything from embedding jets.
    std::vector<int> dirs(m);
    for (int i = 0; i < m; ++i) dirs[i] = i;
    const auto jets = ws.component_jets(u, t, 2, dirs);
    Matrix a(m, m);  // <X_{u_i u_j}, LG>
    std::vector<int> alpha(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            std::fill(alpha.begin(), alpha.end(), 0);
            alpha[i] += 1;
            alpha[j] += 1;
            MinkVec xuu(ws.dim());
            for (int c = 0; c < ws.dim(); ++c) xuu[c] = jets[c].deriv(alpha);
            a(i, j) = a(j, i) = pseudo_dot(xuu, lg);
        }

    auto det_h = [&](double mu) {
        Matrix hmat(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) hmat(i, j) = 2.0 * (frame.g(i, j) - mu * a(i, j));
        return det(hmat);
    };

    constexpr int kSamples = 512;
    const double lo = mu_range[0], hi = mu_range[1];
    const double step = (hi - lo) / kSamples;
    const double width_tol = std::max(ws.scene().tol.root, 1e-15 * std::max(std::abs(lo), hi));

    std::vector<double> roots;
    double prev = det_h(lo);
    for (int k = 1; k <= kSamples; ++k) {
        const double mu = lo + k * step;
        const double cur = det_h(mu);
        if (prev == 0.0) {
            roots.push_back(mu - step);
        } else if (prev * cur < 0.0) {
            double a0 = mu - step, b0 = mu, fa = prev;
            while (b0 - a0 > width_tol) {
                const double mid = 0.5 * (a0 + b0);
                const double fm = det_h(mid);
                if (fm == 0.0) {
                    a0 = b0 = mid;
                    break;
                }
                if (fa * fm < 0.0)
                    b0 = mid;
                else {
                    a0 = mid;
                    fa = fm;
                }
            }
            roots.push_back(0.5 * (a0 + b0));
        }
        prev = cur;
    }
    if (prev == 0.0) roots.push_back(hi);

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [&](double x, double y) { return std::abs(x - y) <= 2 * width_tol; }),
                roots.end());
    return roots;
}

MorseFamilyReport verify_morse_family(const WorldSheet& ws, std::span<const double> u, double t,
                                      const MinkVec& lambda, int sign) {
    (void)sign;
    const auto crit = criticality_check(ws, u, t, lambda, ws.scene().tol.criticality);
    if (crit.verdict == CriticalVerdict::NonCritical)
        throw ValidationError("verify_morse_family: configuration is not critical");

    const int n = ws.n();
    const int m = n - 1;
    std::vector<int> dirs(n);
    for (int i = 0; i < n; ++i) dirs[i] = i;
    const auto jets = ws.component_jets(u, t, 1, dirs);

    MinkVec x(ws.dim());
    for (int c = 0; c < ws.dim(); ++c) x[c] = jets[c].value();
    const MinkVec diff = x - lambda;

    // rows: d(G)/dlambda, d(dG/du_i)/dlambda -- signs from the metric
    Matrix jac(n, ws.dim());
    for (int c = 0; c < ws.dim(); ++c)
        jac(0, c) = (c == 0 ? 2.0 : -2.0) * diff[c];
    std::vector<int> alpha(n, 0);
    for (int i = 0; i < m; ++i) {
        std::fill(alpha.begin(), alpha.end(), 0);
        alpha[i] = 1;
        for (int c = 0; c < ws.dim(); ++c)
            jac(i + 1, c) = (c == 0 ? 2.0 : -2.0) * jets[c].deriv(alpha);
    }

    MorseFamilyReport rep;
    const auto sv = singular_values(jac);
    rep.sv_max = sv.front();
    rep.sv_min = sv.back();
    rep.rank_ok = rep.sv_min > ws.scene().tol.rank * std::max(rep.sv_max, 1e-300);

    rep.dG_dt = crit.dG_dt;
    std::fill(alpha.begin(), alpha.end(), 0);
    alpha[n - 1] = 1;
    MinkVec xt(ws.dim());
    for (int c = 0; c < ws.dim(); ++c) xt[c] = jets[c].deriv(alpha);
    const double scale = std::max(1.0, xt.sup_norm() * diff.sup_norm());
    rep.dt_ok = std::abs(rep.dG_dt) > ws.scene().tol.criticality * scale;
    return rep;
}

LegendrianPoint legendrian_lift(const WorldSheet& ws, std::span<const double> u, double t,
                                double mu, int sign) {
    if (mu == 0.0) throw ValidationError("legendrian_lift: mu must be non-zero");
    const MomentaryFrame frame = ws.frame_at(u, t);
    frame.require_ok();
    const MinkVec lg = lightcone_gauss(frame, sign);
    const double denom = pseudo_dot(frame.tangent_t, frame.nT);
    if (std::abs(denom) < 1e-14)
        throw NumericalError("legendrian_lift: <X_t, nT> vanished on a valid frame");

    LegendrianPoint out;
    out.lambda = frame.point + mu * lg;
    out.t = t;
    out.p = time_conjugate(lg) * (1.0 / denom);
    return out;
}

bool tangent_lightcone_contact(const WorldSheet& ws, std::span<const double> u, double t,
                               const MinkVec& lambda, double tol) {
    const MinkVec x = ws.embed(u, t);
    if ((x - lambda).sup_norm() <= 1e-14 * std::max(1.0, x.sup_norm()))
        throw ValidationError("tangent_lightcone_contact: lambda coincides with the point");
    const GDerivs d = g_derivatives(ws, u, t, lambda);
    if (std::abs(d.g) > tol * d.scale_g) return false;
    for (double gi : d.grad)
        if (std::abs(gi) > tol * d.scale_grad) return false;
    return true;
}

}  // namespace brc
