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

#include "brc/minkowski.hpp"

#include <algorithm>
#include <cmath>

#include "brc/errors.hpp"
#include "brc/linalg.hpp"

namespace brc {

MinkVec MinkVec::basis(std::size_t dim, std::size_t i) {
    MinkVec v(dim);
    v[i] = 1.0;
    return v;
}

MinkVec MinkVec::operator+(const MinkVec& rhs) const {
    MinkVec r = *this;
    r += rhs;
    return r;
}

MinkVec MinkVec::operator-(const MinkVec& rhs) const {
    MinkVec r = *this;
    r -= rhs;
    return r;
}

MinkVec MinkVec::operator-() const {
    MinkVec r = *this;
    for (double& v : r.x_) v = -v;
    return r;
}

MinkVec MinkVec::operator*(double c) const {
    MinkVec r = *this;
    for (double& v : r.x_) v *= c;
    return r;
}

MinkVec& MinkVec::operator+=(const MinkVec& rhs) {
    if (dim() != rhs.dim()) throw ValidationError("MinkVec: dimension mismatch");
    for (std::size_t i = 0; i < x_.size(); ++i) x_[i] += rhs.x_[i];
    return *this;
}

MinkVec& MinkVec::operator-=(const MinkVec& rhs) {
    if (dim() != rhs.dim()) throw ValidationError("MinkVec: dimension mismatch");
    for (std::size_t i = 0; i < x_.size(); ++i) x_[i] -= rhs.x_[i];
    return *this;
}

double MinkVec::sup_norm() const {
    double m = 0.0;
    for (double v : x_) m = std::max(m, std::abs(v));
    return m;
}

bool MinkVec::all_finite() const {
    return std::all_of(x_.begin(), x_.end(), [](double v) { return std::isfinite(v); });
}

std::string to_string(CausalCharacter c) {
    switch (c) {
        case CausalCharacter::Spacelike: return "Spacelike";
        case CausalCharacter::Lightlike: return "Lightlike";
        case CausalCharacter::Timelike: return "Timelike";
        case CausalCharacter::Zero: return "Zero";
    }
    return "?";
}

double pseudo_dot(const MinkVec& x, const MinkVec& y) {
    if (x.dim() != y.dim()) throw ValidationError("pseudo_dot: dimension mismatch");
    double s = -x[0] * y[0];
    for (std::size_t i = 1; i < x.dim(); ++i) s += x[i] * y[i];
    return s;
}

double mink_norm(const MinkVec& x) { return std::sqrt(std::abs(pseudo_dot(x, x))); }

CausalCharacter causal_character(const MinkVec& x, double tol) {
    const double m = x.sup_norm();
    if (m <= tol) return CausalCharacter::Zero;
    const double q = pseudo_dot(x, x);
    if (std::abs(q) <= tol * m * m) return CausalCharacter::Lightlike;
    return q < 0.0 ? CausalCharacter::Timelike : CausalCharacter::Spacelike;
}

MinkVec wedge(std::span<const MinkVec> vectors) {
    const std::size_t n = vectors.size();
    if (n < 2) throw ValidationError("wedge: needs at least 2 vectors");
    const std::size_t dim = n + 1;
    for (const MinkVec& v : vectors)
        if (v.dim() != dim) throw ValidationError("wedge: expected n vectors of dimension n+1");

    MinkVec out(dim);
    Matrix minor(n, n);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t r = 0; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < dim; ++c) {
                if (c == j) continue;
                minor(r, cc++) = vectors[r][c];
            }
        }
        // First-row entries are (-e0, e1, ..., en); cofactor sign (-1)^j.
        const double first = (j == 0) ? -1.0 : 1.0;
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        out[j] = first * sign * det(minor);
    }
    return out;
}

MinkVec wedge(const MinkVec& a, const MinkVec& b) {
    const MinkVec args[] = {a, b};
    return wedge(std::span<const MinkVec>(args));
}

bool on_lightcone(const MinkVec& x, const MinkVec& vertex, double tol) {
    const MinkVec d = x - vertex;
    const double m = d.sup_norm();
    return std::abs(pseudo_dot(d, d)) <= tol * std::max(1.0, m * m);
}

bool is_future_directed(const MinkVec& x) {
    if (x.sup_norm() == 0.0) throw ValidationError("is_future_directed: zero vector");
    return x[0] > 0.0;
}

MinkVec time_conjugate(const MinkVec& x) {
    MinkVec r = x;
    r[0] = -r[0];
    return r;
}

}  // namespace brc
