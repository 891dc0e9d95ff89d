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

#ifndef BRC_MINKOWSKI_HPP
#define BRC_MINKOWSKI_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace brc {

/// A point or vector of R^{n+1} with the Lorentz signature (-,+,...,+).
/// Component 0 is the time coordinate.
class MinkVec {
public:
    MinkVec() = default;
    explicit MinkVec(std::size_t dim) : x_(dim, 0.0) {}
    MinkVec(std::initializer_list<double> xs) : x_(xs) {}
    explicit MinkVec(std::vector<double> xs) : x_(std::move(xs)) {}

    static MinkVec basis(std::size_t dim, std::size_t i);

    std::size_t dim() const { return x_.size(); }
    double& operator[](std::size_t i) { return x_[i]; }
    double operator[](std::size_t i) const { return x_[i]; }
    const std::vector<double>& components() const { return x_; }

    MinkVec operator+(const MinkVec& rhs) const;
    MinkVec operator-(const MinkVec& rhs) const;
    MinkVec operator-() const;
    MinkVec operator*(double c) const;
    MinkVec& operator+=(const MinkVec& rhs);
    MinkVec& operator-=(const MinkVec& rhs);

    double sup_norm() const;
    bool all_finite() const;

private:
    std::vector<double> x_;
};

inline MinkVec operator*(double c, const MinkVec& v) { return v * c; }

enum class CausalCharacter { Spacelike, Lightlike, Timelike, Zero };

std::string to_string(CausalCharacter c);

/// <x,y> = -x0*y0 + sum_{i>=1} xi*yi. Throws ValidationError on a
/// dimension mismatch.
double pseudo_dot(const MinkVec& x, const MinkVec& y);

/// ||x|| = sqrt(|<x,x>|).
double mink_norm(const MinkVec& x);

/// Classification by the sign of <x,x>. The tolerance is relative to the
/// squared sup-norm, so the answer is scale-invariant; a vector with
/// sup-norm <= tol is reported as Zero rather than Lightlike.
CausalCharacter causal_character(const MinkVec& x, double tol = 1e-9);

/// Generalized wedge of n vectors in R^{n+1}: the formal cofactor
/// expansion of the determinant whose first row is (-e0, e1, ..., en).
/// Satisfies <x, wedge(x1..xn)> = det(x, x1, ..., xn) for every x, hence
/// pseudo-orthogonality to every argument.
MinkVec wedge(std::span<const MinkVec> vectors);
MinkVec wedge(const MinkVec& a, const MinkVec& b);  // n = 2 convenience

/// True iff <x - vertex, x - vertex> vanishes within
/// tol * max(1, sup_norm(x - vertex)^2).
bool on_lightcone(const MinkVec& x, const MinkVec& vertex, double tol = 1e-9);

/// True iff <x, e0> < 0, i.e. x0 > 0. Rejects the zero vector.
bool is_future_directed(const MinkVec& x);

/// (x0, x1, ..., xn) -> (-x0, x1, ..., xn); the conjugation used by the
/// jet-space lift of the distance-squared family.
MinkVec time_conjugate(const MinkVec& x);

}  // namespace brc

#endif
