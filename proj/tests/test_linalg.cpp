#include <doctest.h>

#include <cmath>
#include <random>

#include "brc/linalg.hpp"

using namespace brc;

TEST_CASE("determinants by cofactor and LU agree with hand values") {
    Matrix a(2, 2);
    a(0, 0) = 1;
    a(0, 1) = 2;
    a(1, 0) = 3;
    a(1, 1) = 4;
    CHECK(det(a) == doctest::Approx(-2.0));

    Matrix b(4, 4);  // block diagonal: det = (-2) * (5*8-6*7) = (-2)*(-2) = 4
    b(0, 0) = 1;
    b(0, 1) = 2;
    b(1, 0) = 3;
    b(1, 1) = 4;
    b(2, 2) = 5;
    b(2, 3) = 6;
    b(3, 2) = 7;
    b(3, 3) = 8;
    CHECK(det(b) == doctest::Approx(4.0));
}

TEST_CASE("lu_solve round-trips a random system") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix a(4, 4);
    std::vector<double> x(4), b(4, 0.0);
    for (int i = 0; i < 4; ++i) {
        x[i] = dist(rng);
        for (int j = 0; j < 4; ++j) a(i, j) = dist(rng) + (i == j ? 3.0 : 0.0);
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) b[i] += a(i, j) * x[j];
    REQUIRE(lu_solve(a, b));
    for (int i = 0; i < 4; ++i) CHECK(b[i] == doctest::Approx(x[i]).epsilon(1e-12));
}

TEST_CASE("cholesky accepts SPD and rejects indefinite matrices") {
    Matrix g(2, 2);
    g(0, 0) = 4;
    g(0, 1) = g(1, 0) = 1;
    g(1, 1) = 3;
    auto L = cholesky(g);
    REQUIRE(L);
    // L L^T == g
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double s = 0;
            for (int k = 0; k < 2; ++k) s += (*L)(i, k) * (*L)(j, k);
            CHECK(s == doctest::Approx(g(i, j)));
        }
    g(1, 1) = -1.0;
    CHECK(!cholesky(g));
}

namespace {

// Independent root-finding oracle for the generalized eigenproblem:
// scan det(h - kappa g) for sign changes and bisect.
std::vector<double> char_poly_roots(const Matrix& h, const Matrix& g, double lo, double hi) {
    auto f = [&](double k) {
        Matrix m(h.rows(), h.cols());
        for (std::size_t i = 0; i < h.rows(); ++i)
            for (std::size_t j = 0; j < h.cols(); ++j) m(i, j) = h(i, j) - k * g(i, j);
        return det(m);
    };
    std::vector<double> roots;
    const int samples = 20000;
    double prev = f(lo);
    for (int i = 1; i <= samples; ++i) {
        const double k = lo + (hi - lo) * i / samples;
        const double cur = f(k);
        if (prev * cur < 0.0) {
            double a = lo + (hi - lo) * (i - 1) / samples, b = k, fa = prev;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (a + b);
                const double fm = f(mid);
                if (fa * fm <= 0.0)
                    b = mid;
                else {
                    a = mid;
                    fa = fm;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        prev = cur;
    }
    return roots;
}

}  // namespace

TEST_CASE("generalized eigenvalues match the characteristic-polynomial oracle") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 2;  // 2x2 and 3x3
        Matrix h(n, n), base(n, n), g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                base(i, j) = dist(rng);
                h(i, j) = 0.0;
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                // g = base base^T + n I is SPD; h random symmetric
                double s = 0;
                for (int k = 0; k < n; ++k) s += base(i, k) * base(j, k);
                g(i, j) = s + (i == j ? n : 0.0);
                const double v = dist(rng);
                h(i, j) += v;
                h(j, i) += v;
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) h(i, j) = h(j, i);  // enforce symmetry exactly

        const auto eig = generalized_symmetric_eig(h, g);
        REQUIRE(eig);
        const auto oracle = char_poly_roots(h, g, -50.0, 50.0);
        REQUIRE(oracle.size() == eig->values.size());
        for (std::size_t i = 0; i < oracle.size(); ++i)
            CHECK(eig->values[i] == doctest::Approx(oracle[i]).epsilon(1e-8));

        // eigenvector residuals: h v = kappa g v
        for (int c = 0; c < n; ++c) {
            for (int i = 0; i < n; ++i) {
                double hv = 0, gv = 0;
                for (int j = 0; j < n; ++j) {
                    hv += h(i, j) * eig->vectors(j, c);
                    gv += g(i, j) * eig->vectors(j, c);
                }
                CHECK(hv == doctest::Approx(eig->values[c] * gv).epsilon(1e-8).scale(1.0));
            }
        }
    }
}

TEST_CASE("singular values of a diagonal-ish matrix") {
    Matrix a(2, 3);
    a(0, 0) = 3.0;
    a(1, 1) = 4.0;
    const auto sv = singular_values(a);
    REQUIRE(sv.size() == 2);
    CHECK(sv[0] == doctest::Approx(4.0));
    CHECK(sv[1] == doctest::Approx(3.0));
}
