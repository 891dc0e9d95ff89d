#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "brc/errors.hpp"
#include "brc/expression.hpp"

using namespace brc;

namespace {

const std::vector<std::string> kParams = {"u1", "t"};

Expression parse(const std::string& s) { return Expression::parse(s, kParams); }

}  // namespace

TEST_CASE("basic parses evaluate correctly") {
    CHECK(parse("cos(u1)").eval(std::vector<double>{0.0, 0.0}) == doctest::Approx(1.0));
    const Expression e = parse("t + 2*u1^3");
    CHECK(e.eval(std::vector<double>{2.0, 1.0}) == doctest::Approx(17.0));
    CHECK(e.str() == "t + 2*u1^3");

    // precedence: pow binds tighter than unary minus, which beats mul
    CHECK(parse("-u1^2").eval(std::vector<double>{3.0, 0.0}) == doctest::Approx(-9.0));
    CHECK(parse("-u1*t").eval(std::vector<double>{3.0, 2.0}) == doctest::Approx(-6.0));
    CHECK(parse("2^3^2").eval(std::vector<double>{0.0, 0.0}) == doctest::Approx(64.0));
}

TEST_CASE("parse errors carry position and kind") {
    CHECK_THROWS_AS(parse("u2"), ParseError);
    CHECK_THROWS_AS(parse("u1^0.5"), ParseError);
    CHECK_THROWS_AS(parse("u1^t"), ParseError);
    CHECK_THROWS_AS(parse("sin(u1"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("frob(u1)"), ParseError);
    try {
        parse("u1 +\n @");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 2);
    }
}

TEST_CASE("jets through expressions match plain evaluation") {
    const Expression e = parse("cos(u1)");
    const int dirs[1] = {0};
    const Jet j = e.eval_jet(std::vector<double>{0.0, 0.0}, 2, dirs);
    CHECK(j.value() == doctest::Approx(1.0));
    const int e1[1] = {1}, e2[1] = {2};
    CHECK(j.deriv(e1) == doctest::Approx(0.0));
    CHECK(j.deriv(e2) == doctest::Approx(-1.0));

    const Expression m = parse("u1^3");
    const Jet jm = m.eval_jet(std::vector<double>{2.0, 0.0}, 3, dirs);
    const int e3[1] = {3};
    CHECK(jm.value() == doctest::Approx(8.0));
    CHECK(jm.deriv(e1) == doctest::Approx(12.0));
    CHECK(jm.deriv(e2) == doctest::Approx(12.0));
    CHECK(jm.deriv(e3) == doctest::Approx(6.0));
}

namespace {

// random expression generator for the round-trip property
std::string gen_expr(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
    std::uniform_real_distribution<double> num(0.0, 9.5);
    switch (pick(rng)) {
        case 0: {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.3g", num(rng));
            return buf;
        }
        case 1: return (rng() % 2) ? "u1" : "t";
        case 2: return gen_expr(rng, depth - 1) + " + " + gen_expr(rng, depth - 1);
        case 3: return gen_expr(rng, depth - 1) + " - " + gen_expr(rng, depth - 1);
        case 4: return "(" + gen_expr(rng, depth - 1) + ")*(" + gen_expr(rng, depth - 1) + ")";
        case 5: {
            static const char* fns[] = {"sin", "cos", "sinh", "cosh", "exp"};
            return std::string(fns[rng() % 5]) + "(" + gen_expr(rng, depth - 1) + ")";
        }
        default:
            return "(" + gen_expr(rng, depth - 1) + ")^" + std::to_string(2 + rng() % 3);
    }
}

}  // namespace

TEST_CASE("print -> parse -> print reaches a fixed point on generated expressions") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 100; ++i) {
        const std::string text = gen_expr(rng, 4);
        const Expression first = parse(text);
        const std::string printed = first.str();
        const Expression second = parse(printed);
        CHECK(second == first);
        CHECK(second.str() == printed);
    }
}
