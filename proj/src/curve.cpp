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

#include "brc/curve.hpp"

#include <algorithm>
#include <cmath>

#include "brc/lightcone.hpp"
#include "brc/lightsheets.hpp"

namespace brc {

std::string to_string(SingularityTag tag) {
    switch (tag) {
        case SingularityTag::Regular: return "Regular";
        case SingularityTag::CuspidalEdge: return "CuspidalEdge";
        case SingularityTag::Swallowtail: return "Swallowtail";
        case SingularityTag::ConicalDegenerate: return "ConicalDegenerate";
        case SingularityTag::Unresolved: return "Unresolved";
    }
    return "?";
}

namespace {

using JetVec = std::vector<Jet>;

JetVec jet_sub(const JetVec& a, const JetVec& b) {
    JetVec r;
    r.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
    return r;
}

JetVec jet_scale(const JetVec& a, const Jet& c) {
    JetVec r;
    r.reserve(a.size());
    for (const auto& ai : a) r.push_back(ai * c);
    return r;
}

Jet jet_pdot(const JetVec& a, const JetVec& b) {
    Jet s = a[0] * b[0] * (-1.0);
    for (std::size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// d/du of a univariate jet, one order lower
Jet jet_du(const Jet& f) {
    const int ord = f.order() - 1;
    Jet out(1, ord);
    for (int k = 0; k <= ord; ++k) {
        const int src[1] = {k + 1};
        const int dst[1] = {k};
        out.set_coeff(dst, f.coeff(src) * (k + 1));
    }
    return out;
}

Jet truncate_to(const Jet& f, int ord) {
    Jet out(1, ord);
    for (int k = 0; k <= ord; ++k) {
        const int e[1] = {k};
        out.set_coeff(e, f.coeff(e));
    }
    return out;
}

JetVec truncate_to(const JetVec& f, int ord) {
    JetVec r;
    r.reserve(f.size());
    for (const auto& c : f) r.push_back(truncate_to(c, ord));
    return r;
}

// Everything the sigma machinery needs, as univariate jets in the curve
// parameter. `order` is the jet order of the frame fields.
struct CurveJets {
    double speed = 0.0;
    int orientation = +1;
    JetVec t_or;   // oriented unit tangent
    JetVec n_vec;  // nS
    JetVec b_or;   // oriented binormal (future directed at the base point)
    Jet v;         // |Gamma_u|
    Jet kg, kn, tg;

    // oriented-arclength derivative of a jet field
    Jet arc(const Jet& f) const {
        return jet_du(f) * static_cast<double>(orientation) / truncate_to(v, f.order() - 1);
    }
    JetVec arc(const JetVec& f) const {
        JetVec r;
        r.reserve(f.size());
        for (const auto& c : f) r.push_back(arc(c));
        return r;
    }
};

CurveJets curve_jets(const WorldSheet& ws, double s, double t, int order) {
    if (ws.n() != 2) throw ValidationError("curve geometry: only defined for dim 3 scenes");
    const double uu[1] = {s};
    const JetFrame jf = ws.frame_jets_along(std::span<const double>(uu, 1), t, 0, order);
    if (!jf.ok()) throw NumericalError("curve geometry: invalid frame at the sample");

    CurveJets cj;
    const JetVec& gu = jf.tangent_u[0];
    cj.v = sqrt(jet_pdot(gu, gu));
    cj.speed = cj.v.value();
    if (cj.speed <= ws.scene().tol.immersion)
        throw NumericalError("curve geometry: momentary curve not regular at the sample");

    JetVec t_hat;
    t_hat.reserve(gu.size());
    for (const auto& c : gu) t_hat.push_back(c / cj.v);
    cj.n_vec = jf.nS;

    // b = n ^ t; flip the curve orientation if that lands past directed
    std::vector<JetVec> rows = {cj.n_vec, t_hat};
    JetVec b_hat = wedge_t<Jet>(rows);
    cj.orientation = b_hat[0].value() > 0.0 ? +1 : -1;
    cj.b_or.reserve(b_hat.size());
    for (const auto& c : b_hat) cj.b_or.push_back(c * static_cast<double>(cj.orientation));
    cj.t_or.reserve(t_hat.size());
    for (const auto& c : t_hat) cj.t_or.push_back(c * static_cast<double>(cj.orientation));

    // curvatures: kg = <t', b>, kn = <t', n>, tg = <b', n>
    const JetVec t_prime = cj.arc(cj.t_or);
    const JetVec b_prime = cj.arc(cj.b_or);
    const JetVec n_cut = truncate_to(cj.n_vec, t_prime[0].order());
    const JetVec b_cut = truncate_to(cj.b_or, t_prime[0].order());
    cj.kg = jet_pdot(t_prime, b_cut);
    cj.kn = jet_pdot(t_prime, n_cut);
    cj.tg = jet_pdot(b_prime, n_cut);
    return cj;
}

MinkVec jet_values(const JetVec& v) {
    MinkVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].value();
    return out;
}

double sigma_scale(const CurveJets& cj, const Jet& knp, const Jet& kgp) {
    return std::max({1.0, std::abs(cj.kn.value() * cj.tg.value()),
                     std::abs(cj.kg.value() * cj.tg.value()), std::abs(knp.value()),
                     std::abs(kgp.value())});
}

}  // namespace

CurveFrame frenet_frame(const WorldSheet& ws, double s, double t) {
    const CurveJets cj = curve_jets(ws, s, t, 2);
    CurveFrame f;
    f.t_vec = jet_values(cj.t_or);
    f.n_vec = jet_values(cj.n_vec);
    f.b_vec = jet_values(cj.b_or);
    f.kappa_g = cj.kg.value();
    f.kappa_n = cj.kn.value();
    f.tau_g = cj.tg.value();
    f.speed = cj.speed;
    f.orientation = cj.orientation;
    return f;
}

FrenetResiduals frenet_residuals(const WorldSheet& ws, double s, double t) {
    const CurveJets cj = curve_jets(ws, s, t, 3);

    const JetVec tp = cj.arc(cj.t_or);
    const JetVec np = cj.arc(cj.n_vec);
    const JetVec bp = cj.arc(cj.b_or);
    const int ord = tp[0].order();
    const JetVec tt = truncate_to(cj.t_or, ord);
    const JetVec nn = truncate_to(cj.n_vec, ord);
    const JetVec bb = truncate_to(cj.b_or, ord);
    const Jet kg = truncate_to(cj.kg, ord), kn = truncate_to(cj.kn, ord),
              tg = truncate_to(cj.tg, ord);

    FrenetResiduals r;
    const MinkVec rb = jet_values(jet_sub(bp, jet_sub(jet_scale(nn, tg), jet_scale(tt, kg))));
    const MinkVec rn = jet_values(jet_sub(np, jet_sub(jet_scale(bb, tg), jet_scale(tt, kn))));
    const MinkVec rt =
        jet_values(jet_sub(tp, jet_sub(jet_scale(nn, kn), jet_scale(bb, kg))));
    r.b_res = rb.sup_norm();
    r.n_res = rn.sup_norm();
    r.t_res = rt.sup_norm();
    r.scale = std::max({1.0, std::abs(cj.kg.value()), std::abs(cj.kn.value()),
                        std::abs(cj.tg.value())});
    return r;
}

std::pair<double, double> lightcone_curvatures(const WorldSheet& ws, double s, double t) {
    const CurveJets cj = curve_jets(ws, s, t, 1);
    const double plus = cj.kg.value() + cj.kn.value();
    const double minus = cj.kg.value() - cj.kn.value();

    const double uu[1] = {s};
    const double tol = 1e-6 * std::max({1.0, std::abs(plus), std::abs(minus)});
    for (int sign : {+1, -1}) {
        const auto cd = curvature_data(ws, std::span<const double>(uu, 1), t, sign);
        const double frenet = sign > 0 ? plus : minus;
        if (std::abs(cd.kappas[0] - frenet) > tol)
            throw NumericalError("lightcone_curvatures: eigenvalue path disagrees with the "
                                 "frame path beyond tolerance");
    }
    return {plus, minus};
}

SigmaValue sigma_invariant(const WorldSheet& ws, double s, double t, int sign) {
    const CurveJets cj = curve_jets(ws, s, t, 3);

    const Jet knp = cj.arc(cj.kn);
    const Jet kgp = cj.arc(cj.kg);
    const int ord = knp.order();
    const Jet kn = truncate_to(cj.kn, ord), kg = truncate_to(cj.kg, ord),
              tg = truncate_to(cj.tg, ord);

    const double sg = sign > 0 ? 1.0 : -1.0;
    const Jet sigma = (kn + kg * sg) * tg - (knp + kgp * sg) * sg;

    SigmaValue out;
    out.sigma = sigma.value();
    out.dsigma_ds = cj.arc(sigma).value();
    out.scale = sigma_scale(cj, knp, kgp);
    return out;
}

SingularityClass classify_lightsheet_point(const WorldSheet& ws, double s, double t, int sign) {
    const auto [kp, km] = lightcone_curvatures(ws, s, t);
    const double kappa = sign > 0 ? kp : km;
    if (std::abs(kappa) <= ws.scene().tol.kappa_zero)
        throw ValidationError("classify_lightsheet_point: no focal point here (kappa = 0)");

    const SigmaValue sv = sigma_invariant(ws, s, t, sign);
    const double tol = ws.scene().tol.sigma * sv.scale;

    SingularityClass cls;
    cls.sigma = sv.sigma;
    cls.dsigma_ds = sv.dsigma_ds;
    if (std::abs(sv.sigma) > tol) {
        cls.tag = SingularityTag::CuspidalEdge;
    } else if (std::abs(sv.dsigma_ds) > tol) {
        cls.tag = SingularityTag::Swallowtail;
    } else if (detect_conical_momentary_curve(ws, t, sign)) {
        cls.tag = SingularityTag::ConicalDegenerate;
    } else {
        cls.tag = SingularityTag::Unresolved;
    }
    return cls;
}

std::optional<MinkVec> detect_conical_momentary_curve(const WorldSheet& ws, double t0,
                                                      int sign) {
    if (ws.n() != 2) throw ValidationError("conical detection: only defined for dim 3 scenes");
    const Scene& sc = ws.scene();
    const auto svals = sc.u_samples(0);

    // sigma must vanish along the whole slice
    for (double s : svals) {
        const SigmaValue sv = sigma_invariant(ws, s, t0, sign);
        if (std::abs(sv.sigma) > sc.tol.sigma * sv.scale) return std::nullopt;
    }

    // collect the focal points; all of them must coincide
    std::vector<MinkVec> focal;
    for (double s : svals) {
        const double uu[1] = {s};
        const auto pts = lightlike_focal_points(ws, std::span<const double>(uu, 1), t0, sign);
        if (pts.size() != 1) return std::nullopt;
        focal.push_back(pts[0].lambda);
    }

    MinkVec vertex(ws.dim());
    for (const auto& p : focal) vertex += p;
    vertex = vertex * (1.0 / static_cast<double>(focal.size()));

    double spread = 0.0;  // max pairwise sup-distance = bbox diameter
    for (int c = 0; c < ws.dim(); ++c) {
        double lo = focal[0][c], hi = focal[0][c];
        for (const auto& p : focal) {
            lo = std::min(lo, p[c]);
            hi = std::max(hi, p[c]);
        }
        spread = std::max(spread, hi - lo);
    }
    const double scale = std::max(1.0, vertex.sup_norm());
    if (spread > sc.tol.spread * scale * 10.0) return std::nullopt;

    // the momentary curve must lie on the lightcone with this vertex
    for (double s : svals) {
        const double uu[1] = {s};
        const MinkVec x = ws.embed(std::span<const double>(uu, 1), t0);
        if (!on_lightcone(x, vertex, sc.tol.spread * 10.0)) return std::nullopt;
    }
    return vertex;
}

std::vector<SigmaRoot> find_sigma_roots(const WorldSheet& ws, double t0, int sign) {
    if (ws.n() != 2) throw ValidationError("find_sigma_roots: only defined for dim 3 scenes");
    const Scene& sc = ws.scene();
    const auto svals = sc.u_samples(0);
    const bool periodic = sc.u_periodic[0];
    const double period = sc.u_domain[0][1] - sc.u_domain[0][0];

    auto sigma_at = [&](double s) { return sigma_invariant(ws, s, t0, sign).sigma; };

    std::vector<SigmaRoot> roots;
    const std::size_t count = svals.size();
    const std::size_t segments = periodic ? count : count - 1;
    const double width_tol = std::max(sc.tol.root, 1e-14 * period);

    double fa = sigma_at(svals[0]);
    double sa = svals[0];
    for (std::size_t k = 0; k < segments; ++k) {
        double sb = (k + 1 < count) ? svals[k + 1] : svals[0] + period;
        double fb = sigma_at(k + 1 < count ? svals[k + 1] : svals[0]);
        double root = std::numeric_limits<double>::quiet_NaN();
        if (fa == 0.0) {
            root = sa;
        } else if (fa * fb < 0.0) {
            double a = sa, b = sb, fa0 = fa;
            while (b - a > width_tol) {
                const double mid = 0.5 * (a + b);
                const double fm = sigma_at(mid);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if (fa0 * fm < 0.0)
                    b = mid;
                else {
                    a = mid;
                    fa0 = fm;
                }
            }
            root = 0.5 * (a + b);
        }
        if (std::isfinite(root)) {
            if (periodic) {
                const double lo = sc.u_domain[0][0];
                root = lo + std::fmod(std::fmod(root - lo, period) + period, period);
            }
            SigmaRoot r;
            r.s = root;
            r.cls = classify_lightsheet_point(ws, root, t0, sign);
            roots.push_back(std::move(r));
        }
        sa = sb;
        fa = fb;
    }

    // merge duplicates (periodic wrap can report the same zero twice)
    std::sort(roots.begin(), roots.end(),
              [](const SigmaRoot& a, const SigmaRoot& b) { return a.s < b.s; });
    const double merge_tol = 16.0 * width_tol;
    std::vector<SigmaRoot> unique_roots;
    for (auto& r : roots) {
        bool dup = false;
        for (const auto& q : unique_roots) {
            double d = std::abs(r.s - q.s);
            if (periodic) d = std::min(d, period - d);
            if (d <= merge_tol) {
                dup = true;
                break;
            }
        }
        if (!dup) unique_roots.push_back(std::move(r));
    }
    return unique_roots;
}

SliceClassification classify_slice(const WorldSheet& ws, double t0, int sign) {
    if (ws.n() != 2) throw ValidationError("classify_slice: only defined for dim 3 scenes");
    const Scene& sc = ws.scene();
    SliceClassification out;
    out.s = sc.u_samples(0);
    const bool periodic = sc.u_periodic[0];
    const double period = sc.u_domain[0][1] - sc.u_domain[0][0];
    const double spacing = period / (periodic ? out.s.size() : out.s.size() - 1);

    std::vector<SigmaValue> sigmas;
    sigmas.reserve(out.s.size());
    bool all_small = true;
    for (double s : out.s) {
        sigmas.push_back(sigma_invariant(ws, s, t0, sign));
        if (std::abs(sigmas.back().sigma) > sc.tol.sigma * sigmas.back().scale)
            all_small = false;
    }

    if (all_small) out.conical_vertex = detect_conical_momentary_curve(ws, t0, sign);
    if (!out.conical_vertex) out.roots = find_sigma_roots(ws, t0, sign);

    for (std::size_t i = 0; i < out.s.size(); ++i) {
        SingularityClass cls;
        cls.sigma = sigmas[i].sigma;
        cls.dsigma_ds = sigmas[i].dsigma_ds;
        const auto [kp, km] = lightcone_curvatures(ws, out.s[i], t0);
        const double kappa = sign > 0 ? kp : km;
        if (std::abs(kappa) <= sc.tol.kappa_zero) {
            cls.tag = SingularityTag::Regular;  // no focal point on this ray
        } else if (out.conical_vertex) {
            cls.tag = SingularityTag::ConicalDegenerate;
        } else if (std::abs(sigmas[i].sigma) > sc.tol.sigma * sigmas[i].scale) {
            cls.tag = SingularityTag::CuspidalEdge;
        } else {
            // the sample sits inside a refined zero's neighborhood
            cls.tag = SingularityTag::Unresolved;
            for (const auto& r : out.roots) {
                double d = std::abs(out.s[i] - r.s);
                if (periodic) d = std::min(d, period - d);
                if (d <= spacing) {
                    cls.tag = r.cls.tag;
                    break;
                }
            }
        }
        out.samples.push_back(cls);
    }
    return out;
}

}  // namespace brc
