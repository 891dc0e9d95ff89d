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

#ifndef BRC_JET_HPP
#define BRC_JET_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace brc {

/// Truncated multivariate Taylor polynomial: value plus all Taylor
/// coefficients of total degree <= order in up to kMaxVars directions.
/// Arithmetic propagates derivatives exactly (forward mode); this is the
/// jet engine behind every derivative of an embedding used here.
///
/// Coefficients are stored densely against a shared per-(nvars, order)
/// monomial table, so jets of the same shape combine without lookups.
class Jet {
public:
    static constexpr int kMaxVars = 4;
    static constexpr int kMaxOrder = 6;

    Jet() : Jet(1, 0) {}
    Jet(int nvars, int order);  // zero jet

    static Jet constant(int nvars, int order, double value);
    /// Seed jet of a coordinate variable: value + 1 * (that direction).
    static Jet variable(int nvars, int order, int var, double value);

    int nvars() const { return nvars_; }
    int order() const { return order_; }

    double value() const { return c_[0]; }
    /// Taylor coefficient of the monomial with the given exponents
    /// (size = nvars). Zero if the total degree exceeds the order.
    double coeff(std::span<const int> exponents) const;
    /// Partial derivative = coefficient * prod(exponents!).
    double deriv(std::span<const int> exponents) const;

    std::span<const double> raw() const { return c_; }
    double& raw_at(std::size_t i) { return c_[i]; }

    /// Sets one Taylor coefficient (used by the finite-difference provider).
    void set_coeff(std::span<const int> exponents, double value);

    /// The monomial exponent tuples of a (nvars, order) jet, in storage order.
    static std::vector<std::array<int, kMaxVars>> exponents(int nvars, int order);

    Jet operator+(const Jet& rhs) const;
    Jet operator-(const Jet& rhs) const;
    Jet operator-() const;
    Jet operator*(const Jet& rhs) const;
    Jet operator/(const Jet& rhs) const;

    Jet operator+(double rhs) const;
    Jet operator-(double rhs) const;
    Jet operator*(double rhs) const;
    Jet operator/(double rhs) const;

    Jet& operator+=(const Jet& rhs);
    Jet& operator-=(const Jet& rhs);

    friend Jet operator+(double lhs, const Jet& rhs) { return rhs + lhs; }
    friend Jet operator-(double lhs, const Jet& rhs) { return -(rhs - lhs); }
    friend Jet operator*(double lhs, const Jet& rhs) { return rhs * lhs; }
    friend Jet operator/(double lhs, const Jet& rhs);

    /// Composition with a univariate series a0 + a1*h + ... + aK*h^K where
    /// h = *this - value(). Backbone of the elementary functions.
    Jet compose_series(std::span<const double> series) const;

private:
    struct Table;
    const Table* table_;
    int nvars_, order_;
    std::vector<double> c_;

    explicit Jet(const Table* t);
    void check_same_shape(const Jet& rhs) const;
};

Jet sin(const Jet& g);
Jet cos(const Jet& g);
Jet sinh(const Jet& g);
Jet cosh(const Jet& g);
Jet exp(const Jet& g);
Jet log(const Jet& g);    // requires value() > 0
Jet sqrt(const Jet& g);   // requires value() > 0
Jet recip(const Jet& g);  // requires value() != 0
Jet pow_int(const Jet& g, long long p);

}  // namespace brc

#endif
