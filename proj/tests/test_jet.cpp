#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "brc/errors.hpp"
#include "brc/jet.hpp"

using namespace brc;

namespace {

double d(const Jet& j, std::initializer_list<int> exps) {
    return j.deriv(std::vector<int>(exps));
}

}  // namespace

TEST_CASE("monomial jet u^3 at u = 2") {
    const Jet u = Jet::variable(1, 3, 0, 2.0);
    const Jet j = pow_int(u, 3);
    CHECK(d(j, {0}) == doctest::Approx(8.0));
    CHECK(d(j, {1}) == doctest::Approx(12.0));
    CHECK(d(j, {2}) == doctest::Approx(12.0));
    CHECK(d(j, {3}) == doctest::Approx(6.0));
}

TEST_CASE("cos jet at 0") {
    const Jet u = Jet::variable(1, 2, 0, 0.0);
    const Jet j = cos(u);
    CHECK(j.value() == doctest::Approx(1.0));
    CHECK(d(j, {1}) == doctest::Approx(0.0));
    CHECK(d(j, {2}) == doctest::Approx(-1.0));
}

namespace {

// Faa di Bruno through order 4, with analytic derivative tables for the
// outer function: an oracle fully independent of the jet propagation.
struct Compose {
    std::function<double(double, int)> f;  // k-th derivative of f at x
    double g1, g2, g3, g4, g0;

    double deriv(int order) const {
        const double f1 = f(g0, 1), f2 = f(g0, 2), f3 = f(g0, 3), f4 = f(g0, 4);
        switch (order) {
            case 0: return f(g0, 0);
            case 1: return f1 * g1;
            case 2: return f2 * g1 * g1 + f1 * g2;
            case 3: return f3 * g1 * g1 * g1 + 3 * f2 * g1 * g2 + f1 * g3;
            case 4:
                return f4 * g1 * g1 * g1 * g1 + 6 * f3 * g1 * g1 * g2 +
                       f2 * (3 * g2 * g2 + 4 * g1 * g3) + f1 * g4;
        }
        return 0.0;
    }
};

double table_sin(double x, int k) {
    const double t[4] = {std::sin(x), std::cos(x), -std::sin(x), -std::cos(x)};
    return t[k % 4];
}
double table_cos(double x, int k) { return table_sin(x, k + 1); }
double table_sinh(double x, int k) { return k % 2 ? std::cosh(x) : std::sinh(x); }
double table_cosh(double x, int k) { return k % 2 ? std::sinh(x) : std::cosh(x); }
double table_exp(double x, int) { return std::exp(x); }
double table_log(double x, int k) {
    if (k == 0) return std::log(x);
    double r = std::pow(x, -k);
    for (int i = 1; i < k; ++i) r *= -i;
    return r;
}
double table_sqrt(double x, int k) {
    double c = 1.0;
    for (int i = 0; i < k; ++i) c *= 0.5 - i;
    return c * std::pow(x, 0.5 - k);
}

}  // namespace

TEST_CASE("unary propagation matches the analytic chain-rule oracle to order 4") {
    // inner polynomial g(u) = 0.7 + 0.4 u - 0.3 u^2 + 0.2 u^3 + 0.1 u^4 at u = 0.5
    const double u0 = 0.5;
    auto make_g = [&]() {
        const Jet u = Jet::variable(1, 4, 0, u0);
        return Jet::constant(1, 4, 0.7) + u * 0.4 - pow_int(u, 2) * 0.3 + pow_int(u, 3) * 0.2 +
               pow_int(u, 4) * 0.1;
    };
    const Jet g = make_g();
    const double g0 = g.value();
    const Compose base{nullptr,
                       d(g, {1}), d(g, {2}), d(g, {3}), d(g, {4}), g0};

    struct Case {
        const char* name;
        Jet jet;
        std::function<double(double, int)> table;
    };
    const Case cases[] = {
        {"sin", sin(g), table_sin},   {"cos", cos(g), table_cos},
        {"sinh", sinh(g), table_sinh}, {"cosh", cosh(g), table_cosh},
        {"exp", exp(g), table_exp},   {"log", log(g), table_log},
        {"sqrt", sqrt(g), table_sqrt},
    };
    for (const auto& c : cases) {
        CAPTURE(c.name);
        Compose cmp = base;
        cmp.f = c.table;
        for (int k = 0; k <= 4; ++k) {
            const int e[1] = {k};
            CHECK(c.jet.deriv(e) ==
                  doctest::Approx(cmp.deriv(k)).epsilon(1e-12).scale(1.0));
        }
    }
}

TEST_CASE("random polynomial jets agree with central finite differences") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const double h = 1e-3;
    for (int trial = 0; trial < 20; ++trial) {
        double coef[5];
        for (double& c : coef) c = dist(rng);
        auto p = [&](double x) {
            return coef[0] + x * (coef[1] + x * (coef[2] + x * (coef[3] + x * coef[4])));
        };
        const double x0 = dist(rng);
        const Jet x = Jet::variable(1, 4, 0, x0);
        const Jet j = Jet::constant(1, 4, coef[0]) + x * coef[1] + pow_int(x, 2) * coef[2] +
                      pow_int(x, 3) * coef[3] + pow_int(x, 4) * coef[4];

        const double fd1 = (p(x0 + h) - p(x0 - h)) / (2 * h);
        const double fd2 = (p(x0 + h) - 2 * p(x0) + p(x0 - h)) / (h * h);
        const double fd3 =
            (p(x0 + 2 * h) - 2 * p(x0 + h) + 2 * p(x0 - h) - p(x0 - 2 * h)) / (2 * h * h * h);
        // the quartic stencil is exact on quartics; a wider step keeps the
        // h^4 divisor clear of round-off
        const double h4 = 1e-2;
        const double fd4 = (p(x0 + 2 * h4) - 4 * p(x0 + h4) + 6 * p(x0) - 4 * p(x0 - h4) +
                            p(x0 - 2 * h4)) /
                           (h4 * h4 * h4 * h4);
        CHECK(d(j, {1}) == doctest::Approx(fd1).epsilon(1e-5).scale(1.0));
        CHECK(d(j, {2}) == doctest::Approx(fd2).epsilon(1e-5).scale(1.0));
        CHECK(d(j, {3}) == doctest::Approx(fd3).epsilon(1e-5).scale(1.0));
        CHECK(d(j, {4}) == doctest::Approx(fd4).epsilon(1e-5).scale(1.0));
    }
}

TEST_CASE("division, reciprocal and negative powers") {
    const Jet x = Jet::variable(1, 4, 0, 1.3);
    const Jet y = sin(x) + 2.0;
    const Jet q = (y / y);
    CHECK(q.value() == doctest::Approx(1.0));
    for (int k = 1; k <= 4; ++k) {
        const int e[1] = {k};
        CHECK(q.deriv(e) == doctest::Approx(0.0).scale(1.0));
    }
    const Jet inv2 = pow_int(x, -2);
    const Jet inv2b = recip(x * x);
    for (int k = 0; k <= 4; ++k) {
        const int e[1] = {k};
        CHECK(inv2.deriv(e) == doctest::Approx(inv2b.deriv(e)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(recip(Jet::constant(1, 2, 0.0)), NumericalError);
    CHECK_THROWS_AS(log(Jet::constant(1, 2, -1.0)), NumericalError);
    CHECK_THROWS_AS(sqrt(Jet::constant(1, 2, -1.0)), NumericalError);
}

TEST_CASE("multivariate mixed partials of x^2 y and sin(xy)") {
    const Jet x = Jet::variable(2, 3, 0, 0.7);
    const Jet y = Jet::variable(2, 3, 1, -0.4);
    const Jet p = pow_int(x, 2) * y;
    CHECK(d(p, {2, 1}) == doctest::Approx(2.0));
    CHECK(d(p, {1, 1}) == doctest::Approx(2 * 0.7));
    CHECK(d(p, {2, 0}) == doctest::Approx(2 * -0.4));

    const Jet s = sin(x * y);
    const double a = 0.7, b = -0.4;
    // d^2/dxdy sin(xy) = cos(xy) - xy sin(xy)
    CHECK(d(s, {1, 1}) ==
          doctest::Approx(std::cos(a * b) - a * b * std::sin(a * b)).epsilon(1e-12));
}
