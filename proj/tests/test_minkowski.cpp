#include <doctest.h>

#include <cmath>
#include <random>

#include "brc/errors.hpp"
#include "brc/minkowski.hpp"

using namespace brc;

TEST_CASE("pseudo scalar product on basis-like inputs") {
    CHECK(pseudo_dot({1, 0, 0}, {1, 0, 0}) == doctest::Approx(-1.0));
    CHECK(pseudo_dot({1, 1, 0}, {1, 1, 0}) == doctest::Approx(0.0));
    CHECK(pseudo_dot({0, 1, 2}, {0, 3, 4}) == doctest::Approx(11.0));
    CHECK_THROWS_AS(pseudo_dot({1, 0, 0}, {1, 0, 0, 0}), ValidationError);
}

TEST_CASE("norm and causal character") {
    CHECK(mink_norm({1, 0, 0}) == doctest::Approx(1.0));
    CHECK(mink_norm({3, 4, 0}) == doctest::Approx(std::sqrt(7.0)));
    CHECK(mink_norm({1, 1, 0}) == doctest::Approx(0.0));

    CHECK(causal_character({2, 1, 0}) == CausalCharacter::Timelike);
    CHECK(causal_character({1, 1, 0}) == CausalCharacter::Lightlike);
    CHECK(causal_character({0, 1, 0}) == CausalCharacter::Spacelike);
    CHECK(causal_character({0, 0, 0}) == CausalCharacter::Zero);
}

TEST_CASE("causal character is scale invariant") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        MinkVec x({dist(rng), dist(rng), dist(rng), dist(rng)});
        if (x.sup_norm() < 1e-6) continue;
        for (double c : {1e-8, 0.37, -2.0, 4e9}) {
            CHECK(causal_character(x * c) == causal_character(x));
        }
    }
}

TEST_CASE("wedge on basis vectors (n = 2)") {
    const MinkVec e0 = MinkVec::basis(3, 0), e1 = MinkVec::basis(3, 1),
                  e2 = MinkVec::basis(3, 2);
    const MinkVec w12 = wedge(e1, e2);
    CHECK(w12[0] == doctest::Approx(-1.0));
    CHECK(w12[1] == doctest::Approx(0.0));
    CHECK(w12[2] == doctest::Approx(0.0));
    const MinkVec w01 = wedge(e0, e1);
    CHECK(w01[0] == doctest::Approx(0.0));
    CHECK(w01[1] == doctest::Approx(0.0));
    CHECK(w01[2] == doctest::Approx(1.0));
}

namespace {

// plain Laplace-expansion determinant, independent of brc::det
double laplace_det(const std::vector<std::vector<double>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<double>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<double> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        acc += ((j % 2 == 0) ? 1.0 : -1.0) * m[0][j] * laplace_det(minor);
    }
    return acc;
}

}  // namespace

TEST_CASE("wedge pairing equals the full determinant and is orthogonal to arguments") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int dim = 3; dim <= 5; ++dim) {
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<MinkVec> xs;
            for (int i = 0; i + 1 < dim; ++i) {
                MinkVec v(dim);
                for (int c = 0; c < dim; ++c) v[c] = dist(rng);
                xs.push_back(std::move(v));
            }
            const MinkVec w = wedge(xs);

            double scale = w.sup_norm();
            for (const auto& x : xs) scale = std::max(scale, x.sup_norm());
            scale = std::max(scale, 1.0);

            for (const auto& x : xs)
                CHECK(std::abs(pseudo_dot(x, w)) <= 1e-9 * scale * scale);

            MinkVec probe(dim);
            for (int c = 0; c < dim; ++c) probe[c] = dist(rng);
            std::vector<std::vector<double>> m;
            m.push_back(probe.components());
            for (const auto& x : xs) m.push_back(x.components());
            CHECK(pseudo_dot(probe, w) ==
                  doctest::Approx(laplace_det(m)).epsilon(1e-9).scale(scale * scale));
        }
    }
}

TEST_CASE("wedge is alternating: swapping two arguments flips the sign") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);

    // dim 3: the 2x2 cofactors make the flip bit-exact
    {
        MinkVec a(3), b(3);
        for (int c = 0; c < 3; ++c) {
            a[c] = dist(rng);
            b[c] = dist(rng);
        }
        const MinkVec w = wedge(a, b);
        const MinkVec ws = wedge(b, a);
        for (int c = 0; c < 3; ++c) CHECK(ws[c] == -w[c]);
    }

    // larger minors reassociate the products; exact up to round-off
    {
        std::vector<MinkVec> xs;
        for (int i = 0; i < 3; ++i) {
            MinkVec v(4);
            for (int c = 0; c < 4; ++c) v[c] = dist(rng);
            xs.push_back(std::move(v));
        }
        const MinkVec w = wedge(xs);
        std::swap(xs[0], xs[2]);
        const MinkVec ws = wedge(xs);
        for (int c = 0; c < 4; ++c)
            CHECK(ws[c] == doctest::Approx(-w[c]).epsilon(1e-14).scale(1.0));
    }
}

TEST_CASE("wedge is multilinear in each slot") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    MinkVec a(3), b(3), c(3);
    for (int i = 0; i < 3; ++i) {
        a[i] = dist(rng);
        b[i] = dist(rng);
        c[i] = dist(rng);
    }
    const MinkVec lhs = wedge(a + b * 2.5, c);
    const MinkVec rhs = wedge(a, c) + wedge(b, c) * 2.5;
    for (int i = 0; i < 3; ++i) CHECK(lhs[i] == doctest::Approx(rhs[i]).epsilon(1e-14));
}

TEST_CASE("lightcone membership and future direction") {
    CHECK(on_lightcone({1, 1, 0}, MinkVec(3)));
    CHECK(!on_lightcone({1, 0, 0}, MinkVec(3)));
    CHECK(is_future_directed({1, 0, 0}));
    CHECK(!is_future_directed({-1, 0, 0}));
    CHECK(is_future_directed({1, 1, 0}));
    CHECK_THROWS_AS(is_future_directed(MinkVec(3)), ValidationError);
}
