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

#include "brc/jet.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "brc/errors.hpp"

namespace brc {

// Shared per-shape monomial bookkeeping: the exponent list (graded, then
// lexicographic) and a dense product map exps[i]+exps[j] -> k (or -1 when
// the product overflows the order).
struct Jet::Table {
    int nvars, order;
    std::vector<std::array<int, kMaxVars>> exps;
    std::vector<int> prod;       // exps.size()^2 entries
    std::vector<double> factor;  // prod of factorials per monomial

    std::size_t count() const { return exps.size(); }

    static const Table& get(int nvars, int order);
};

namespace {

void enumerate_exponents(int nvars, int order, std::vector<std::array<int, Jet::kMaxVars>>& out) {
    std::array<int, Jet::kMaxVars> e{};
    for (int total = 0; total <= order; ++total) {
        // lexicographic enumeration of compositions of `total` into nvars parts
        std::vector<int> idx(nvars, 0);
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == nvars - 1) {
                e.fill(0);
                for (int k = 0; k < nvars - 1; ++k) e[k] = idx[k];
                e[nvars - 1] = left;
                out.push_back(e);
                return;
            }
            for (int v = left; v >= 0; --v) {
                idx[pos] = v;
                rec(pos + 1, left - v);
            }
        };
        if (nvars == 0) {
            if (total == 0) {
                e.fill(0);
                out.push_back(e);
            }
        } else {
            rec(0, total);
        }
    }
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

const Jet::Table& Jet::Table::get(int nvars, int order) {
    static std::map<std::pair<int, int>, Table> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(nvars, order);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    Table t;
    t.nvars = nvars;
    t.order = order;
    enumerate_exponents(nvars, order, t.exps);

    std::map<std::array<int, kMaxVars>, int> lookup;
    for (std::size_t i = 0; i < t.exps.size(); ++i) lookup[t.exps[i]] = static_cast<int>(i);

    const std::size_t m = t.exps.size();
    t.prod.assign(m * m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            std::array<int, kMaxVars> s{};
            int total = 0;
            for (int k = 0; k < nvars; ++k) {
                s[k] = t.exps[i][k] + t.exps[j][k];
                total += s[k];
            }
            if (total <= order) t.prod[i * m + j] = lookup[s];
        }
    }

    t.factor.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        double f = 1.0;
        for (int k = 0; k < nvars; ++k) f *= factorial(t.exps[i][k]);
        t.factor[i] = f;
    }

    return cache.emplace(key, std::move(t)).first->second;
}

Jet::Jet(const Table* t)
    : table_(t), nvars_(t->nvars), order_(t->order), c_(t->count(), 0.0) {}

Jet::Jet(int nvars, int order) : Jet(&Table::get(nvars, order)) {
    if (nvars < 1 || nvars > kMaxVars || order < 0 || order > kMaxOrder)
        throw ValidationError("Jet: unsupported shape");
}

Jet Jet::constant(int nvars, int order, double value) {
    Jet j(nvars, order);
    j.c_[0] = value;
    return j;
}

Jet Jet::variable(int nvars, int order, int var, double value) {
    if (var < 0 || var >= nvars) throw ValidationError("Jet::variable: index out of range");
    Jet j(nvars, order);
    j.c_[0] = value;
    if (order >= 1) j.c_[1 + var] = 1.0;  // degree-1 block follows the constant
    return j;
}

double Jet::coeff(std::span<const int> exponents) const {
    std::array<int, kMaxVars> key{};
    int total = 0;
    for (std::size_t k = 0; k < exponents.size() && k < kMaxVars; ++k) {
        key[k] = exponents[k];
        total += exponents[k];
    }
    if (total > order_) return 0.0;
    for (std::size_t i = 0; i < table_->count(); ++i)
        if (table_->exps[i] == key) return c_[i];
    throw ValidationError("Jet::coeff: bad exponent tuple");
}

double Jet::deriv(std::span<const int> exponents) const {
    double f = 1.0;
    for (int e : exponents) f *= factorial(e);
    return coeff(exponents) * f;
}

void Jet::set_coeff(std::span<const int> exponents, double value) {
    std::array<int, kMaxVars> key{};
    for (std::size_t k = 0; k < exponents.size() && k < kMaxVars; ++k) key[k] = exponents[k];
    for (std::size_t i = 0; i < table_->count(); ++i) {
        if (table_->exps[i] == key) {
            c_[i] = value;
            return;
        }
    }
    throw ValidationError("Jet::set_coeff: bad exponent tuple");
}

std::vector<std::array<int, Jet::kMaxVars>> Jet::exponents(int nvars, int order) {
    return Table::get(nvars, order).exps;
}

void Jet::check_same_shape(const Jet& rhs) const {
    if (table_ != rhs.table_) throw ValidationError("Jet: shape mismatch");
}

Jet Jet::operator+(const Jet& rhs) const {
    Jet r = *this;
    r += rhs;
    return r;
}

Jet Jet::operator-(const Jet& rhs) const {
    Jet r = *this;
    r -= rhs;
    return r;
}

Jet& Jet::operator+=(const Jet& rhs) {
    check_same_shape(rhs);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
    check_same_shape(rhs);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (double& v : r.c_) v = -v;
    return r;
}

Jet Jet::operator*(const Jet& rhs) const {
    check_same_shape(rhs);
    Jet r(table_);
    const std::size_t m = c_.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (c_[i] == 0.0) continue;
        const int* row = table_->prod.data() + i * m;
        for (std::size_t j = 0; j < m; ++j) {
            const int k = row[j];
            if (k >= 0) r.c_[k] += c_[i] * rhs.c_[j];
        }
    }
    return r;
}

Jet Jet::operator/(const Jet& rhs) const { return *this * recip(rhs); }

Jet Jet::operator+(double rhs) const {
    Jet r = *this;
    r.c_[0] += rhs;
    return r;
}

Jet Jet::operator-(double rhs) const {
    Jet r = *this;
    r.c_[0] -= rhs;
    return r;
}

Jet Jet::operator*(double rhs) const {
    Jet r = *this;
    for (double& v : r.c_) v *= rhs;
    return r;
}

Jet Jet::operator/(double rhs) const {
    if (rhs == 0.0) throw NumericalError("Jet: division by zero");
    return *this * (1.0 / rhs);
}

Jet operator/(double lhs, const Jet& rhs) { return recip(rhs) * lhs; }

Jet Jet::compose_series(std::span<const double> series) const {
    if (series.empty()) return Jet(nvars_, order_);
    Jet h = *this;
    h.c_[0] = 0.0;
    Jet r = Jet::constant(nvars_, order_, series[series.size() - 1]);
    for (std::size_t k = series.size() - 1; k-- > 0;) r = r * h + series[k];
    return r;
}

namespace {

// Taylor coefficients f^{(k)}(x0)/k! for the elementary functions.
std::vector<double> series_sin(double x0, int K) {
    std::vector<double> a(K + 1);
    const double tab[4] = {std::sin(x0), std::cos(x0), -std::sin(x0), -std::cos(x0)};
    for (int k = 0; k <= K; ++k) a[k] = tab[k % 4] / factorial(k);
    return a;
}

std::vector<double> series_cos(double x0, int K) {
    std::vector<double> a(K + 1);
    const double tab[4] = {std::cos(x0), -std::sin(x0), -std::cos(x0), std::sin(x0)};
    for (int k = 0; k <= K; ++k) a[k] = tab[k % 4] / factorial(k);
    return a;
}

std::vector<double> series_sinh(double x0, int K) {
    std::vector<double> a(K + 1);
    const double tab[2] = {std::sinh(x0), std::cosh(x0)};
    for (int k = 0; k <= K; ++k) a[k] = tab[k % 2] / factorial(k);
    return a;
}

std::vector<double> series_cosh(double x0, int K) {
    std::vector<double> a(K + 1);
    const double tab[2] = {std::cosh(x0), std::sinh(x0)};
    for (int k = 0; k <= K; ++k) a[k] = tab[k % 2] / factorial(k);
    return a;
}

std::vector<double> series_exp(double x0, int K) {
    std::vector<double> a(K + 1);
    const double e = std::exp(x0);
    for (int k = 0; k <= K; ++k) a[k] = e / factorial(k);
    return a;
}

std::vector<double> series_log(double x0, int K) {
    std::vector<double> a(K + 1);
    a[0] = std::log(x0);
    double p = 1.0;
    for (int k = 1; k <= K; ++k) {
        p *= x0;
        a[k] = ((k % 2 == 1) ? 1.0 : -1.0) / (k * p);
    }
    return a;
}

std::vector<double> series_sqrt(double x0, int K) {
    // binomial series for x^(1/2) around x0: C(1/2,k) * x0^(1/2-k)
    std::vector<double> a(K + 1);
    const double r = std::sqrt(x0);
    a[0] = r;
    double coef = 1.0, px = 1.0;
    for (int k = 1; k <= K; ++k) {
        coef *= (0.5 - (k - 1)) / k;
        px *= x0;
        a[k] = coef * r / px;
    }
    return a;
}

std::vector<double> series_recip(double x0, int K) {
    std::vector<double> a(K + 1);
    double p = 1.0 / x0;
    for (int k = 0; k <= K; ++k) {
        a[k] = ((k % 2 == 0) ? 1.0 : -1.0) * p;
        p /= x0;
    }
    return a;
}

}  // namespace

Jet sin(const Jet& g) { return g.compose_series(series_sin(g.value(), g.order())); }
Jet cos(const Jet& g) { return g.compose_series(series_cos(g.value(), g.order())); }
Jet sinh(const Jet& g) { return g.compose_series(series_sinh(g.value(), g.order())); }
Jet cosh(const Jet& g) { return g.compose_series(series_cosh(g.value(), g.order())); }
Jet exp(const Jet& g) { return g.compose_series(series_exp(g.value(), g.order())); }

Jet log(const Jet& g) {
    if (!(g.value() > 0.0)) throw NumericalError("jet: log of non-positive value");
    return g.compose_series(series_log(g.value(), g.order()));
}

Jet sqrt(const Jet& g) {
    if (!(g.value() > 0.0)) throw NumericalError("jet: sqrt of non-positive value");
    return g.compose_series(series_sqrt(g.value(), g.order()));
}

Jet recip(const Jet& g) {
    if (g.value() == 0.0) throw NumericalError("jet: division by zero");
    return g.compose_series(series_recip(g.value(), g.order()));
}

Jet pow_int(const Jet& g, long long p) {
    if (p < 0) return recip(pow_int(g, -p));
    Jet acc = Jet::constant(g.nvars(), g.order(), 1.0);
    Jet base = g;
    long long e = p;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

}  // namespace brc
