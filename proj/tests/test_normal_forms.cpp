#include <doctest.h>

#include <cmath>

#include "brc/curve.hpp"
#include "brc/jet.hpp"
#include "brc/lightsheets.hpp"
#include "brc/normal_forms.hpp"
#include "helpers.hpp"

using namespace brc;

TEST_CASE("reference surfaces evaluate the published parametrizations") {
    const auto sw = normal_form_surface(SurfaceKind::SW, 3, 3, 1.0);
    // grid {-1,0,1}^2: (u,v) = (1,0) is the 8th point (u slow, v fast)
    bool found = false;
    for (const auto& p : sw.points)
        found = found || (p[0] == 3.0 && p[1] == 4.0 && p[2] == 0.0);
    CHECK(found);

    const auto ce = normal_form_surface(SurfaceKind::CE, 3, 3, 1.0);
    bool origin = false;
    for (const auto& p : ce.points)
        origin = origin || (p[0] == 0.0 && p[1] == 0.0 && p[2] == 0.0);
    CHECK(origin);

    const auto pu = normal_form_surface(SurfaceKind::PU, 3, 3, 1.0);
    bool pu_pt = false;
    for (const auto& p : pu.points) pu_pt = pu_pt || (p[0] == 3.0 && p[1] == 0.0 && p[2] == 0.0);
    CHECK(pu_pt);

    // pyramid points satisfy the constraint identically
    const auto py = normal_form_surface(SurfaceKind::PY, 5, 5, 1.0);
    CHECK(!py.points.empty());
}

TEST_CASE("critical branches of the generating families") {
    GeneratingFamily f3{3, +1, +1};
    for (double q : {-0.7, 0.2, 1.1}) {
        CHECK(f3.x0_branch(q, 0, 0) == doctest::Approx(-3 * q * q));
        CHECK(f3.t_branch(q, 0, 0) == doctest::Approx(2 * q * q * q));
        // the branch really solves F = dF/dq = 0
        const std::array<double, 3> x{f3.x0_branch(q, 0, 0), 0, 0};
        CHECK(f3.eval(q, x, f3.t_branch(q, 0, 0)) == doctest::Approx(0.0).scale(1.0));
        CHECK(f3.dq(q, x) == doctest::Approx(0.0).scale(1.0));
    }
    GeneratingFamily f3m{3, -1, +1};
    CHECK(f3m.t_branch(0.5, 0, 0) == doctest::Approx(-2 * 0.125));

    GeneratingFamily f5{5, +1, +1};
    for (double q : {-0.9, 0.3, 0.8}) {
        for (double v : {-0.5, 0.4}) {
            for (double w : {-0.3, 0.6}) {
                CHECK(f5.x0_branch(q, v, w) ==
                      doctest::Approx(-(5 * std::pow(q, 4) + 2 * v * q + 3 * w * q * q)));
                CHECK(f5.t_branch(q, v, w) ==
                      doctest::Approx(4 * std::pow(q, 5) + v * q * q + 2 * w * q * q * q));
                const std::array<double, 3> x{f5.x0_branch(q, v, w), v, w};
                CHECK(f5.eval(q, x, f5.t_branch(q, v, w)) == doctest::Approx(0.0).scale(1.0));
                CHECK(f5.dq(q, x) == doctest::Approx(0.0).scale(1.0));
            }
        }
    }

    CHECK(family_critical_set(GeneratingFamily{1, +1, +1}, 5, 5, 5, 1.0).empty());

    // form 2: the branch is q = 0, t = 0 with the base free
    const auto c2 = family_critical_set(GeneratingFamily{2, +1, -1}, 3, 3, 3, 1.0);
    REQUIRE(!c2.empty());
    for (const auto& row : c2) {
        CHECK(row[0] == 0.0);
        CHECK(row[4] == 0.0);
    }
}

TEST_CASE("family fronts") {
    // form 5 at (u, v, w) = (1, 0, 0): ((-5, 0, 0), +-4)
    for (int st : {+1, -1}) {
        GeneratingFamily f5{5, st, +1};
        CHECK(f5.x0_branch(1, 0, 0) == doctest::Approx(-5.0));
        CHECK(f5.t_branch(1, 0, 0) == doctest::Approx(st * 4.0));
    }

    // form 2's front is the regular graph {(x, 0)}
    const auto front2 = family_front(GeneratingFamily{2, +1, +1}, 3, 3, 3, 1.0);
    for (const auto& r : front2) CHECK(r[3] == 0.0);

    // form 3's front equals the thm94-2 model after scaling x0 by 1/3
    GeneratingFamily f3{3, +1, +1};
    for (double u : {-0.8, 0.1, 0.9}) {
        CHECK(f3.x0_branch(u, 0, 0) / 3.0 == doctest::Approx(-u * u).epsilon(1e-12));
        CHECK(f3.t_branch(u, 0, 0) == doctest::Approx(2 * u * u * u).epsilon(1e-12));
    }
}

TEST_CASE("form 4 front: cuspidal edge along the caustic locus by germ type") {
    GeneratingFamily f4{4, +1, +1};
    // on the caustic locus (v = -6u^2) the fiber germ has an A2 point;
    // off it, only A1
    const double u = 0.4;
    const double v_caustic = f4.caustic_v(u, 0.0);
    const std::array<double, 3> x_on{f4.x0_branch(u, v_caustic, 0.0), v_caustic, 0.0};
    // derivatives of q -> F(q, x, t) at q = u (t only shifts the value)
    auto derivs_at = [&](const std::array<double, 3>& x, double q) {
        const double d1 = 4 * q * q * q + x[0] + 2 * x[1] * q;
        const double d2 = 12 * q * q + 2 * x[1];
        const double d3 = 24 * q;
        const double d4 = 24;
        return std::vector<double>{d1, d2, d3, d4, 0.0};
    };
    CHECK(germ_type(derivs_at(x_on, u), 1e-9) == GermType::A2);

    const double v_off = v_caustic + 0.5;
    const std::array<double, 3> x_off{f4.x0_branch(u, v_off, 0.0), v_off, 0.0};
    CHECK(germ_type(derivs_at(x_off, u), 1e-9) == GermType::A1);
}

TEST_CASE("form 5 caustic matches the closed form and its psi-image is the swallowtail") {
    GeneratingFamily f5{5, +1, +1};
    const int n = 21;
    const double extent = 1.0;
    const auto caustic = family_caustic(f5, n, n, extent);
    REQUIRE(caustic.size() == static_cast<std::size_t>(n) * n);

    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) {
        const double u = -extent + 2.0 * extent * i / (n - 1);
        for (int j = 0; j < n; ++j, ++idx) {
            const double w = -extent + 2.0 * extent * j / (n - 1);
            const auto& p = caustic[idx];
            CHECK(std::abs(p[0] - (-(15 * std::pow(u, 4) + 3 * w * u * u))) <= 1e-12);
            CHECK(std::abs(p[1] - (-10 * u * u * u - 3 * w * u)) <= 1e-12);
            CHECK(std::abs(p[2] - w) <= 1e-12);

            const auto img = swallowtail_normalizer(p);
            const double U = u, V = 3.0 * w / 5.0;
            CHECK(std::abs(img[0] - (3 * std::pow(U, 4) + V * U * U)) <= 1e-12);
            CHECK(std::abs(img[1] - (4 * U * U * U + 2 * V * U)) <= 1e-12);
            CHECK(std::abs(img[2] - V) <= 1e-12);

            // relationship to the raw projection values: the emitted set is
            // the x0-reflection of the branch values on the rank-drop locus
            const double v = f5.caustic_v(u, w);
            CHECK(std::abs(f5.x0_branch(u, v, w) + p[0]) <= 1e-12);
            CHECK(std::abs(v - p[1]) <= 1e-12);
        }
    }

    // the rank-deficiency locus really is where d(x0_branch)/du vanishes
    for (double u : {-0.6, 0.2, 0.9}) {
        for (double w : {-0.7, 0.4}) {
            const double v = f5.caustic_v(u, w);
            const double h = 1e-6;
            const double d = (f5.x0_branch(u + h, v, w) - f5.x0_branch(u - h, v, w)) / (2 * h);
            CHECK(std::abs(d) <= 1e-6);
        }
    }
}

TEST_CASE("form 3 and 4 caustics have the expected shapes") {
    const auto c3 = family_caustic(GeneratingFamily{3, +1, +1}, 9, 9, 1.0);
    for (const auto& p : c3) CHECK(p[0] == 0.0);  // a regular plane

    GeneratingFamily f4{4, +1, +1};
    const auto c4 = family_caustic(f4, 9, 9, 1.0);
    for (const auto& p : c4) {
        // cusp curve (8u^3, -6u^2) swept along w: x1 <= 0 and 27 x0^2 + 8 x1^3 = 0
        CHECK(p[1] <= 1e-15);
        CHECK(std::abs(27 * p[0] * p[0] + 8 * p[1] * p[1] * p[1]) <= 1e-9);
    }

    CHECK(family_caustic(GeneratingFamily{1, +1, +1}, 5, 5, 1.0).empty());
    CHECK(family_caustic(GeneratingFamily{2, +1, +1}, 5, 5, 1.0).empty());
}

TEST_CASE("germ recognition from derivative lists") {
    CHECK(germ_type(std::vector<double>{0, 2, 0, 0, 0}, 1e-9) == GermType::A1);
    CHECK(germ_type(std::vector<double>{0, 0, 6, 0, 0}, 1e-9) == GermType::A2);
    CHECK(germ_type(std::vector<double>{1, 0, 0, 0, 0}, 1e-9) == GermType::Regular);
    CHECK(germ_type(std::vector<double>{0, 0, 0, 0, 0}, 1e-9) == GermType::Unresolved);
    CHECK(germ_type(std::vector<double>{0, 1e-12, 2, 0, 0}, 1e-9) == GermType::A2);
}

TEST_CASE("distance-squared germs along the ellipse match the sigma classification") {
    const WorldSheet ws(testing::ellipse_scene());
    const double t0 = 0.0;

    auto g_derivs = [&](double s, const MinkVec& lambda) {
        const double u[1] = {s};
        const int dirs[1] = {0};
        const auto jets = ws.component_jets(u, t0, 5, dirs);
        Jet g(1, 5);
        for (int c = 0; c < 3; ++c) {
            const Jet d = jets[c] - lambda[c];
            g += (c == 0 ? -1.0 : 1.0) * d * d;
        }
        std::vector<double> out;
        for (int k = 1; k <= 5; ++k) {
            const int e[1] = {k};
            out.push_back(g.deriv(e));
        }
        return out;
    };

    // A2 germs exactly at cuspidal edges, A3 at the swallowtail vertices,
    // across a grid that hits the four vertices
    for (int k = 0; k < 16; ++k) {
        const double s = 2 * M_PI * k / 16;
        for (int sign : {+1, -1}) {
            const double u[1] = {s};
            const auto pts = lightlike_focal_points(ws, u, t0, sign);
            REQUIRE(pts.size() == 1);
            const auto germ = germ_type(g_derivs(s, pts[0].lambda), 1e-7);
            const auto cls = classify_lightsheet_point(ws, s, t0, sign).tag;
            if (cls == SingularityTag::Swallowtail) {
                CHECK(germ == GermType::A3);
                CHECK(k % 4 == 0);  // the vertices sit at multiples of pi/2
            } else {
                CHECK(cls == SingularityTag::CuspidalEdge);
                CHECK(germ == GermType::A2);
            }
        }
    }
}

TEST_CASE("graph-like front models evaluate their published parametrizations") {
    const auto t2 = normal_form_surface(SurfaceKind::Thm94_2, 3, 3, 1.0);
    bool hit2 = false;
    for (const auto& p : t2.points)
        hit2 = hit2 || (p[0] == -1.0 && p[3] == 2.0);  // u = 1: (-1, v, w, +-2)
    CHECK(hit2);
    CHECK(t2.point_dim == 4);

    const auto t4 = normal_form_surface(SurfaceKind::Thm94_4, 3, 3, 1.0);
    bool hit4 = false;
    for (const auto& p : t4.points)
        hit4 = hit4 || (p[0] == 5.0 && p[1] == 0.0 && p[2] == 0.0 && p[3] == 4.0);
    CHECK(hit4);
}
