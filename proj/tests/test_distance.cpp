#include <doctest.h>

#include <cmath>
#include <random>

#include "brc/distance.hpp"
#include "brc/lightcone.hpp"
#include "brc/lightsheets.hpp"
#include "helpers.hpp"

using namespace brc;

TEST_CASE("distance-squared values") {
    const WorldSheet ws(testing::cylinder_scene());
    const double u[1] = {0.7};
    const MinkVec x = ws.embed(u, 0.3);
    CHECK(G_eval(ws, u, 0.3, x + MinkVec{0, 1e-7, 0}) ==
          doctest::Approx(1e-14).scale(1e-14));

    // the momentary circle lies on the lightcone with the focal vertex
    const MinkVec vertex{0.3 - 1.0, 0.0, 0.0};
    for (double s : {0.0, 0.5, 1.1, 2.8, 4.0}) {
        const double us[1] = {s};
        CHECK(G_eval(ws, us, 0.3, vertex) == doctest::Approx(0.0).scale(1.0));
    }

    const WorldSheet flat(testing::flat_scene());
    const double uf[1] = {0.2};
    const MinkVec offset = flat.embed(uf, 0.0) + MinkVec{0, 1, 0};
    CHECK(G_eval(flat, uf, 0.0, offset) == doctest::Approx(1.0));
}

TEST_CASE("criticality verdicts on the cylinder") {
    const WorldSheet ws(testing::cylinder_scene());
    const double u[1] = {1.2};
    const double t = 0.0;
    const MomentaryFrame f = ws.frame_at(u, t);

    for (int sign : {+1, -1}) {
        // focal configuration: mu = 1/kappa = -sign
        const MinkVec focal = f.point + (-sign * 1.0) * lightcone_gauss(f, sign);
        const auto rep = criticality_check(ws, u, t, focal, 1e-6);
        CHECK(rep.verdict == CriticalVerdict::DegenerateCritical);

        // halfway along the ray: critical but not degenerate,
        // H = 2 (1 + sign * mu) with mu = -sign * 0.5
        const MinkVec halfway = f.point + (-sign * 0.5) * lightcone_gauss(f, sign);
        const auto rep2 = criticality_check(ws, u, t, halfway, 1e-6);
        CHECK(rep2.verdict == CriticalVerdict::Critical);
        CHECK(rep2.hessian_u(0, 0) == doctest::Approx(1.0).epsilon(1e-9));
    }

    // off the normal lightcone: generically non-critical
    const MinkVec off = f.point + MinkVec{0.3, 0.9, -0.2};
    CHECK(criticality_check(ws, u, t, off, 1e-6).verdict == CriticalVerdict::NonCritical);

    CHECK_THROWS_AS(criticality_check(ws, u, t, f.point, 1e-6), ValidationError);
}

TEST_CASE("focal mu roots: cylinder and flat sheet") {
    const WorldSheet ws(testing::cylinder_scene());
    const double u[1] = {0.4};
    const auto roots_plus = focal_mu_roots(ws, u, 0.0, +1, {-2.0, 2.0});
    REQUIRE(roots_plus.size() == 1);
    CHECK(roots_plus[0] == doctest::Approx(-1.0).epsilon(1e-9));
    const auto roots_minus = focal_mu_roots(ws, u, 0.0, -1, {-2.0, 2.0});
    REQUIRE(roots_minus.size() == 1);
    CHECK(roots_minus[0] == doctest::Approx(1.0).epsilon(1e-9));

    const WorldSheet flat(testing::flat_scene());
    const double uf[1] = {0.0};
    CHECK(focal_mu_roots(flat, uf, 0.0, +1, {-2.0, 2.0}).empty());
}

TEST_CASE("ellipse: scan roots match 1/kappa from the eigen path at random samples") {
    const WorldSheet ws(testing::ellipse_scene());
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> us(0.0, 2 * M_PI), ut(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double u[1] = {us(rng)};
        const double t = ut(rng);
        for (int sign : {+1, -1}) {
            const auto cd = curvature_data(ws, u, t, sign);
            const double mu_expect = 1.0 / cd.kappas[0];
            const auto roots = focal_mu_roots(ws, u, t, sign, {-4.5, 4.5});
            REQUIRE(!roots.empty());
            double best = 1e300;
            for (double r : roots) best = std::min(best, std::abs(r - mu_expect));
            CHECK(best <= 1e-7);
            // and conversely, every root is an eigenvalue reciprocal
            for (double r : roots)
                CHECK(std::abs(1.0 / r - cd.kappas[0]) <= 1e-7 * std::abs(cd.kappas[0]));
        }
    }
}

TEST_CASE("morse-family non-degeneracy holds along focal configurations") {
    const WorldSheet cyl(testing::cylinder_scene());
    const double u[1] = {2.1};
    const auto focal = lightlike_focal_points(cyl, u, 0.0, +1);
    REQUIRE(focal.size() == 1);
    const auto rep = verify_morse_family(cyl, u, 0.0, focal[0].lambda, +1);
    CHECK(rep.pass());
    // for the cylinder dG/dt = -2 mu <X_t, nT> = -2 * (-1) * (-1) = -2
    CHECK(rep.dG_dt == doctest::Approx(-2.0).epsilon(1e-9));

    const WorldSheet ell(testing::ellipse_scene());
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> us(0.0, 2 * M_PI);
    for (int trial = 0; trial < 10; ++trial) {
        const double ue[1] = {us(rng)};
        for (int sign : {+1, -1}) {
            const auto pts = lightlike_focal_points(ell, ue, 0.2, sign);
            for (const auto& fp : pts)
                CHECK(verify_morse_family(ell, ue, 0.2, fp.lambda, sign).pass());
        }
    }

    // a non-critical configuration is rejected as a precondition violation
    const MinkVec somewhere{3.0, 5.0, 7.0};
    CHECK_THROWS_AS(verify_morse_family(cyl, u, 0.0, somewhere, +1), ValidationError);
}

TEST_CASE("legendrian lift on the cylinder and its contact property") {
    const WorldSheet ws(testing::cylinder_scene());
    const double s = 0.9;
    const double u[1] = {s};
    for (int sign : {+1, -1}) {
        const auto lp = legendrian_lift(ws, u, 0.0, 0.5, sign);
        // <X_t, nT> = -1, so p = -conj(LG) = (1, -sign cos s, -sign sin s)
        CHECK(lp.p[0] == doctest::Approx(1.0));
        CHECK(lp.p[1] == doctest::Approx(-sign * std::cos(s)).epsilon(1e-10));
        CHECK(lp.p[2] == doctest::Approx(-sign * std::sin(s)).epsilon(1e-10));
    }
    CHECK_THROWS_AS(legendrian_lift(ws, u, 0.0, 0.0, +1), ValidationError);

    // contact residual along a parameter path through the configuration
    const double h = 1e-5;
    const double du = 0.13, dt = 0.21, dmu = -0.17;
    const auto lp = legendrian_lift(ws, u, 0.0, 0.5, +1);
    auto lambda_at = [&](double r) {
        const double ur[1] = {s + r * du};
        return light_sheet_point(ws, ur, r * dt, 0.5 + r * dmu, +1);
    };
    const MinkVec fwd = lambda_at(h), bwd = lambda_at(-h);
    double sum = 0.0;
    for (int c = 0; c < 3; ++c) sum += lp.p[c] * (fwd[c] - bwd[c]) / (2 * h);
    CHECK(std::abs(dt - sum) <= 1e-5 * std::max(1.0, std::abs(dt)));
}

TEST_CASE("tangent lightcone contact") {
    const WorldSheet ws(testing::cylinder_scene());
    const double u[1] = {0.3};
    const MomentaryFrame f = ws.frame_at(u, 0.0);

    // any point of the light sheet through (u, t) gives a tangent lightcone
    const MinkVec on_sheet = f.point + 0.8 * lightcone_gauss(f, +1);
    CHECK(tangent_lightcone_contact(ws, u, 0.0, on_sheet, 1e-9));

    const MinkVec off = f.point + MinkVec{0.0, 0.5, 0.0};
    CHECK(!tangent_lightcone_contact(ws, u, 0.0, off, 1e-9));

    // antipodal points share the focal vertex and both report tangency
    const MinkVec vertex{-1.0, 0.0, 0.0};
    const double u1[1] = {1.0}, u2[1] = {1.0 + M_PI};
    CHECK(tangent_lightcone_contact(ws, u1, 0.0, vertex, 1e-9));
    CHECK(tangent_lightcone_contact(ws, u2, 0.0, vertex, 1e-9));
}
