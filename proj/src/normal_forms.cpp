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

#include "brc/normal_forms.hpp"

#include <algorithm>
#include <cmath>

#include "brc/errors.hpp"

namespace brc {

namespace {

std::vector<double> axis(int n, double extent) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = 0.0;
        return v;
    }
    for (int i = 0; i < n; ++i) v[i] = -extent + 2.0 * extent * i / (n - 1);
    return v;
}

}  // namespace

SurfaceKind surface_kind_from_name(const std::string& name) {
    if (name == "ce") return SurfaceKind::CE;
    if (name == "sw") return SurfaceKind::SW;
    if (name == "py") return SurfaceKind::PY;
    if (name == "pu") return SurfaceKind::PU;
    if (name == "thm94-1") return SurfaceKind::Thm94_1;
    if (name == "thm94-2") return SurfaceKind::Thm94_2;
    if (name == "thm94-3") return SurfaceKind::Thm94_3;
    if (name == "thm94-4") return SurfaceKind::Thm94_4;
    throw ValidationError("unknown normal-form surface '" + name + "'");
}

NormalSurface normal_form_surface(SurfaceKind kind, int nu, int nv, double extent) {
    if (nu < 1 || nv < 1) throw ValidationError("normal_form_surface: empty grid");
    NormalSurface out;
    out.kind = kind;
    const auto us = axis(nu, extent);
    const auto vs = axis(nv, extent);

    auto emit3 = [&](double a, double b, double c) {
        out.points.push_back({a, b, c, 0.0});
    };
    auto emit4 = [&](double a, double b, double c, double d) {
        out.points.push_back({a, b, c, d});
    };

    switch (kind) {
        case SurfaceKind::CE:
            for (double u : us)
                for (double v : vs) emit3(u, v * v, v * v * v);
            return out;
        case SurfaceKind::SW:
            for (double u : us)
                for (double v : vs)
                    emit3(3 * u * u * u * u + u * u * v, 4 * u * u * u + 2 * u * v, v);
            return out;
        case SurfaceKind::PY:
            for (double u : us)
                for (double v : vs)
                    for (double w : {-std::hypot(u, v), std::hypot(u, v)})
                        emit3(u * u - v * v + 2 * u * v, -2 * u * v + 2 * u * w, w);
            return out;
        case SurfaceKind::PU:
            for (double u : us)
                for (double v : vs) {
                    if (u * v < 0.0) continue;  // w^2 = 36uv needs uv >= 0
                    const double r = 6.0 * std::sqrt(u * v);
                    for (double w : {-r, r})
                        emit3(3 * u * u + w * v, 3 * v * v + w * u, w);
                }
            return out;
        default: break;
    }

    // graph-like front germs over (u, v, w)
    out.point_dim = 4;
    const auto ws = axis(nv, extent);
    for (double u : us)
        for (double v : vs)
            for (double w : ws) {
                switch (kind) {
                    case SurfaceKind::Thm94_1: emit4(u, v, w, 0.0); break;
                    case SurfaceKind::Thm94_2:
                        for (double sgn : {-1.0, 1.0})
                            emit4(-u * u, v, w, sgn * 2 * u * u * u);
                        break;
                    case SurfaceKind::Thm94_3:
                        for (double sgn : {-1.0, 1.0})
                            emit4(-sgn * 4 * u * u * u - 2 * v * u, v, w,
                                  3 * u * u * u + sgn * v * u * u);
                        break;
                    case SurfaceKind::Thm94_4:
                        for (double sgn : {-1.0, 1.0})
                            emit4(5 * u * u * u * u + 2 * v * u + 3 * w * u * u, v, w,
                                  sgn * (4 * u * u * u * u + v * u * u + 2 * w * u * u * u));
                        break;
                    default: break;
                }
            }
    return out;
}

double GeneratingFamily::eval(double q, const std::array<double, 3>& x, double t) const {
    const double st = sign_t, sq = sign_q;
    switch (form_id) {
        case 1: return q;
        case 2: return st * t + sq * q * q;
        case 3: return st * t + q * q * q + x[0] * q;
        case 4: return st * t + sq * q * q * q * q + x[0] * q + x[1] * q * q;
        case 5:
            return st * t + q * q * q * q * q + x[0] * q + x[1] * q * q + x[2] * q * q * q;
    }
    throw ValidationError("GeneratingFamily: form_id must be 1..5");
}

double GeneratingFamily::dq(double q, const std::array<double, 3>& x) const {
    const double sq = sign_q;
    switch (form_id) {
        case 1: return 1.0;
        case 2: return 2.0 * sq * q;
        case 3: return 3.0 * q * q + x[0];
        case 4: return 4.0 * sq * q * q * q + x[0] + 2.0 * x[1] * q;
        case 5: return 5.0 * q * q * q * q + x[0] + 2.0 * x[1] * q + 3.0 * x[2] * q * q;
    }
    throw ValidationError("GeneratingFamily: form_id must be 1..5");
}

double GeneratingFamily::x0_branch(double q, double v, double w) const {
    const double sq = sign_q;
    switch (form_id) {
        case 3: return -3.0 * q * q;
        case 4: return -4.0 * sq * q * q * q - 2.0 * v * q;
        case 5: return -(5.0 * q * q * q * q + 2.0 * v * q + 3.0 * w * q * q);
    }
    throw ValidationError("x0_branch: defined for forms 3..5");
}

double GeneratingFamily::t_branch(double q, double v, double w) const {
    const double st = sign_t, sq = sign_q;
    switch (form_id) {
        case 3: return st * 2.0 * q * q * q;
        case 4: return st * (3.0 * sq * q * q * q * q + v * q * q);
        case 5: return st * (4.0 * std::pow(q, 5) + v * q * q + 2.0 * w * q * q * q);
    }
    throw ValidationError("t_branch: defined for forms 3..5");
}

double GeneratingFamily::caustic_v(double u, double w) const {
    const double sq = sign_q;
    switch (form_id) {
        case 3: return 0.0;  // rank drop at u = 0 only; v is free there
        case 4: return -6.0 * sq * u * u;
        case 5: return -(10.0 * u * u * u + 3.0 * w * u);
    }
    throw ValidationError("caustic_v: defined for forms 3..5");
}

std::vector<std::array<double, 5>> family_critical_set(const GeneratingFamily& fam, int nq,
                                                       int nv, int nw, double extent) {
    std::vector<std::array<double, 5>> rows;
    const auto qs = axis(nq, extent);
    const auto vs = axis(nv, extent);
    const auto wsamples = axis(nw, extent);

    switch (fam.form_id) {
        case 1:
            return rows;  // dF/dq never vanishes
        case 2:
            for (double a : qs)
                for (double b : vs)
                    for (double c : wsamples) rows.push_back({0.0, a, b, c, 0.0});
            return rows;
        default:
            for (double q : qs)
                for (double v : vs)
                    for (double w : wsamples)
                        rows.push_back(
                            {q, fam.x0_branch(q, v, w), v, w, fam.t_branch(q, v, w)});
            return rows;
    }
}

std::vector<std::array<double, 4>> family_front(const GeneratingFamily& fam, int nq, int nv,
                                                int nw, double extent) {
    std::vector<std::array<double, 4>> rows;
    for (const auto& r : family_critical_set(fam, nq, nv, nw, extent))
        rows.push_back({r[1], r[2], r[3], r[4]});
    return rows;
}

std::vector<std::array<double, 3>> family_caustic(const GeneratingFamily& fam, int nu, int nw,
                                                  double extent) {
    std::vector<std::array<double, 3>> rows;
    if (fam.form_id <= 2) return rows;  // the base projection is regular

    const auto us = axis(nu, extent);
    const auto wsamples = axis(nw, extent);
    for (double u : us)
        for (double w : wsamples) {
            if (fam.form_id == 3) {
                // rank deficiency only at u = 0; critical values sweep the plane x0 = 0
                rows.push_back({0.0, u, w});
                continue;
            }
            const double v = fam.caustic_v(u, w);
            double x0 = fam.x0_branch(u, v, w);
            // Normalize form 5 to the orientation whose psi-image is the
            // reference SW parametrization (the two orientations differ by
            // the reflection x0 -> -x0, which is immaterial to the
            // singularity class).
            if (fam.form_id == 5) x0 = -x0;
            rows.push_back({x0, v, w});
        }
    return rows;
}

std::array<double, 3> swallowtail_normalizer(const std::array<double, 3>& x) {
    return {-x[0] / 5.0, -2.0 * x[1] / 5.0, 3.0 * x[2] / 5.0};
}

std::string to_string(GermType g) {
    switch (g) {
        case GermType::Regular: return "Regular";
        case GermType::A1: return "A1";
        case GermType::A2: return "A2";
        case GermType::A3: return "A3";
        case GermType::A4: return "A4";
        case GermType::Unresolved: return "Unresolved";
    }
    return "?";
}

GermType germ_type(std::span<const double> derivs, double tol) {
    if (derivs.size() < 2) throw ValidationError("germ_type: need at least (f', f'')");
    double scale = 0.0;
    for (double d : derivs) scale = std::max(scale, std::abs(d));
    if (scale == 0.0) return GermType::Unresolved;
    if (std::abs(derivs[0]) > tol * scale) return GermType::Regular;
    static constexpr GermType kTypes[] = {GermType::A1, GermType::A2, GermType::A3,
                                          GermType::A4};
    for (std::size_t j = 1; j < derivs.size(); ++j) {
        if (std::abs(derivs[j]) > tol * scale)
            return j - 1 < 4 ? kTypes[j - 1] : GermType::Unresolved;
    }
    return GermType::Unresolved;
}

}  // namespace brc
