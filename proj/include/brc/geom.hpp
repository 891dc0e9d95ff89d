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

#ifndef BRC_GEOM_HPP
#define BRC_GEOM_HPP

#include <cmath>
#include <vector>

#include "brc/errors.hpp"
#include "brc/jet.hpp"

namespace brc {

// Frame construction over a generic scalar. The same code path produces
// plain frames (T = double) and frame *fields* differentiated along a
// parameter (T = Jet), which is how Gauss-map derivatives stay exact.

inline double value_of(double x) { return x; }
inline double value_of(const Jet& x) { return x.value(); }

inline double zero_like(double) { return 0.0; }
inline Jet zero_like(const Jet& x) { return Jet(x.nvars(), x.order()); }

inline double sqrt_of(double x) { return std::sqrt(x); }
inline Jet sqrt_of(const Jet& x) { return sqrt(x); }

template <class T>
using VecT = std::vector<T>;  // one Minkowski vector, dim components

template <class T>
T pseudo_dot_t(const VecT<T>& a, const VecT<T>& b) {
    T s = zero_like(a[0]) - a[0] * b[0];
    for (std::size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Laplace-expansion determinant; the matrices here never exceed 4x4.
template <class T>
T det_t(const std::vector<VecT<T>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    T acc = zero_like(m[0][0]);
    std::vector<VecT<T>> minor(n - 1, VecT<T>(n - 1, zero_like(m[0][0])));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) minor[r - 1][cc++] = m[r][c];
        }
        const T term = m[0][j] * det_t(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Generalized wedge over T: n vectors of dimension n+1, first row
/// (-e0, e1, ..., en).
template <class T>
VecT<T> wedge_t(const std::vector<VecT<T>>& vectors) {
    const std::size_t n = vectors.size();
    const std::size_t dim = n + 1;
    VecT<T> out(dim, zero_like(vectors[0][0]));
    std::vector<VecT<T>> minor(n, VecT<T>(n, zero_like(vectors[0][0])));
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t r = 0; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < dim; ++c)
                if (c != j) minor[r][cc++] = vectors[r][c];
        }
        const double sign = ((j % 2 == 0) ? 1.0 : -1.0) * (j == 0 ? -1.0 : 1.0);
        out[j] = det_t(minor) * sign;
    }
    return out;
}

/// Gaussian elimination with pivoting on |value|; solves A x = b in place.
/// Returns false when a pivot value vanishes.
template <class T>
bool solve_t(std::vector<VecT<T>> a, VecT<T>& b) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(value_of(a[i][k])) > std::abs(value_of(a[piv][k]))) piv = i;
        if (value_of(a[piv][k]) == 0.0) return false;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            std::swap(b[piv], b[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const T f = a[i][k] / a[k][k];
            b[i] -= f * b[k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    for (std::size_t ii = n; ii-- > 0;) {
        T s = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= a[ii][j] * b[j];
        b[ii] = s / a[ii][ii];
    }
    return true;
}

enum class FrameStatus { Ok, NotImmersed, NotSpacelike, NotTimelike };

std::string to_string(FrameStatus s);

template <class T>
struct FrameT {
    std::vector<VecT<T>> tangent_u;  // X_{u_i}
    VecT<T> tangent_t;               // X_t
    std::vector<VecT<T>> g;          // first fundamental form of the momentary space
    VecT<T> nS;                      // unit spacelike normal of W
    VecT<T> nT;                      // future-directed unit timelike normal of S_t in TW
    FrameStatus status = FrameStatus::Ok;

    // raw diagnostics for validation margins (values at the base point)
    double wedge_scale = 0.0;   // product of tangent sup-norms
    double wedge_sup = 0.0;     // sup-norm of the wedge
    double normal_sq = 0.0;     // <w,w> / wedge_sup^2
    double proj_t_sq = 0.0;     // <v,v> / sup(v)^2 for the projected X_t
};

/// Builds the momentary frame from the tangent vectors:
///   nS = wedge(X_{u_1}, ..., X_{u_{n-1}}, X_t) normalized,
///   nT = metric projection of X_t away from span{X_{u_i}}, normalized to
///        <nT,nT> = -1 and flipped future-directed.
/// Checks run on the scalar values so the same code serves jet fields.
template <class T>
FrameT<T> build_frame(std::vector<VecT<T>> tangent_u, VecT<T> tangent_t, double immersion_tol) {
    FrameT<T> f;
    f.tangent_u = std::move(tangent_u);
    f.tangent_t = std::move(tangent_t);
    const std::size_t m = f.tangent_u.size();  // n-1

    std::vector<VecT<T>> rows = f.tangent_u;
    rows.push_back(f.tangent_t);
    const VecT<T> w = wedge_t(rows);

    double scale = 1.0;
    for (const auto& row : rows) {
        double sup = 0.0;
        for (const T& c : row) sup = std::max(sup, std::abs(value_of(c)));
        scale *= sup;
    }
    f.wedge_scale = scale;
    double wsup = 0.0;
    for (const T& c : w) wsup = std::max(wsup, std::abs(value_of(c)));
    f.wedge_sup = wsup;
    if (wsup <= immersion_tol * std::max(scale, 1e-300)) {
        f.status = FrameStatus::NotImmersed;
        return f;
    }

    const T wsq = pseudo_dot_t(w, w);
    f.normal_sq = value_of(wsq) / (wsup * wsup);
    if (!(value_of(wsq) > 0.0)) {  // normal not spacelike: tangent plane not timelike
        f.status = FrameStatus::NotTimelike;
        return f;
    }
    const T wnorm = sqrt_of(wsq);
    f.nS.reserve(w.size());
    for (const T& c : w) f.nS.push_back(c / wnorm);

    f.g.assign(m, VecT<T>(m, zero_like(w[0])));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            f.g[i][j] = pseudo_dot_t(f.tangent_u[i], f.tangent_u[j]);
            f.g[j][i] = f.g[i][j];
        }

    // positive definiteness of g (value level), by Cholesky pivots
    {
        std::vector<std::vector<double>> gl(m, std::vector<double>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) gl[i][j] = value_of(f.g[i][j]);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                double s = gl[i][j];
                for (std::size_t k = 0; k < j; ++k) s -= gl[i][k] * gl[j][k];
                if (i == j) {
                    if (s <= 0.0) {
                        f.status = FrameStatus::NotSpacelike;
                        return f;
                    }
                    gl[i][i] = std::sqrt(s);
                } else {
                    gl[i][j] = s / gl[j][j];
                }
            }
        }
    }

    // nT: project X_t off the momentary tangent space with the g-metric
    VecT<T> rhs;
    rhs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) rhs.push_back(pseudo_dot_t(f.tangent_t, f.tangent_u[i]));
    if (m > 0 && !solve_t(f.g, rhs)) {
        f.status = FrameStatus::NotSpacelike;
        return f;
    }
    VecT<T> v = f.tangent_t;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < v.size(); ++c) v[c] -= rhs[i] * f.tangent_u[i][c];

    const T vsq = pseudo_dot_t(v, v);
    double vsup = 0.0;
    for (const T& c : v) vsup = std::max(vsup, std::abs(value_of(c)));
    f.proj_t_sq = vsup > 0.0 ? value_of(vsq) / (vsup * vsup) : 0.0;
    if (!(value_of(vsq) < 0.0)) {
        f.status = FrameStatus::NotTimelike;
        return f;
    }
    const T vnorm = sqrt_of(zero_like(vsq) - vsq);
    const double flip = value_of(v[0]) > 0.0 ? 1.0 : -1.0;
    f.nT.reserve(v.size());
    for (const T& c : v) f.nT.push_back(c / vnorm * flip);

    f.status = FrameStatus::Ok;
    return f;
}

}  // namespace brc

#endif
