#include <doctest.h>

#include <cmath>
#include <map>

#include "brc/distance.hpp"
#include "brc/lightsheets.hpp"
#include "helpers.hpp"

using namespace brc;

TEST_CASE("light sheet points ride the lightcone of the base point") {
    const WorldSheet ws(testing::cylinder_scene());
    const double u[1] = {0.6};
    const MinkVec base = ws.embed(u, 0.2);
    CHECK((light_sheet_point(ws, u, 0.2, 0.0, +1) - base).sup_norm() <= 1e-14);

    for (double mu : {0.3, -1.2, 1.7}) {
        for (int sign : {+1, -1}) {
            const MinkVec p = light_sheet_point(ws, u, 0.2, mu, sign);
            CHECK(on_lightcone(p, base, 1e-12));
        }
    }

    // focal collapse: mu = -sign lands on the axis
    for (int sign : {+1, -1}) {
        const MinkVec p = light_sheet_point(ws, u, 0.2, -sign * 1.0, sign);
        CHECK(p[0] == doctest::Approx(0.2 - sign).epsilon(1e-12));
        CHECK(std::abs(p[1]) <= 1e-12);
        CHECK(std::abs(p[2]) <= 1e-12);
    }
}

TEST_CASE("cylinder focal points and the flat sheet") {
    const WorldSheet ws(testing::cylinder_scene());
    const double u[1] = {2.2};
    const auto plus = lightlike_focal_points(ws, u, 0.4, +1);
    REQUIRE(plus.size() == 1);
    CHECK(plus[0].kappa == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(plus[0].lambda[0] == doctest::Approx(-0.6).epsilon(1e-10));
    CHECK(std::abs(plus[0].lambda[1]) <= 1e-10);
    CHECK(std::abs(plus[0].lambda[2]) <= 1e-10);

    const WorldSheet flat(testing::flat_scene());
    const double uf[1] = {0.1};
    CHECK(lightlike_focal_points(flat, uf, 0.0, +1).empty());
}

TEST_CASE("ellipse focal point agrees with the mu-scan oracle at s = 0") {
    const WorldSheet ws(testing::ellipse_scene());
    const double u[1] = {0.0};
    for (int sign : {+1, -1}) {
        const auto pts = lightlike_focal_points(ws, u, 0.0, sign);
        REQUIRE(pts.size() == 1);
        const auto roots = focal_mu_roots(ws, u, 0.0, sign, {-4.5, 4.5});
        REQUIRE(!roots.empty());
        double best = 1e300;
        for (double r : roots) best = std::min(best, std::abs(r - pts[0].mu));
        CHECK(best <= 1e-8);
        // kappa = -+2 at the major vertex, focal point on the x1-axis offset
        CHECK(pts[0].kappa == doctest::Approx(-2.0 * sign).epsilon(1e-9));
        CHECK(pts[0].lambda[2] == doctest::Approx(0.0).scale(1.0));
        CHECK(pts[0].lambda[1] == doctest::Approx(1.5).epsilon(1e-9));
    }
}

TEST_CASE("br_caustic of the cylinder lies on the two axis lines") {
    const WorldSheet ws(testing::cylinder_scene(24, 5));
    const auto cloud = br_caustic(ws);
    CHECK(cloud.skipped == 0);
    REQUIRE(!cloud.points.empty());
    CHECK(cloud.points.size() == 24u * 5u * 2u);
    for (const auto& fp : cloud.points) {
        CHECK(std::abs(fp.lambda[1]) <= 1e-9);
        CHECK(std::abs(fp.lambda[2]) <= 1e-9);
        CHECK(fp.lambda[0] == doctest::Approx(fp.t - fp.sign).epsilon(1e-9));
    }
}

TEST_CASE("empty sign set gives an empty caustic") {
    Scene sc = testing::cylinder_scene(8, 3);
    sc.sign_plus = sc.sign_minus = false;
    CHECK(br_caustic(WorldSheet(sc)).points.empty());
}

TEST_CASE("unfolded focal set projects exactly onto the caustic") {
    const WorldSheet ws(testing::ellipse_scene(16, 4));
    const auto caustic = br_caustic(ws);
    const auto unfolded = unfolded_focal(ws);
    REQUIRE(caustic.points.size() == unfolded.points.size());
    for (std::size_t i = 0; i < caustic.points.size(); ++i) {
        CHECK((caustic.points[i].lambda - unfolded.points[i].lambda).sup_norm() == 0.0);
        CHECK(caustic.points[i].t == unfolded.points[i].t);
        // slices of the unfolded set are momentary focal sets
        const double u[1] = {unfolded.points[i].u[0]};
        const auto momentary =
            lightlike_focal_points(ws, u, unfolded.points[i].t, unfolded.points[i].sign);
        bool found = false;
        for (const auto& fp : momentary)
            found = found || (fp.lambda - unfolded.points[i].lambda).sup_norm() <= 1e-12;
        CHECK(found);
    }
}

TEST_CASE("light-sheet map drops rank exactly at focal parameters") {
    const WorldSheet ws(testing::ellipse_scene(16, 3));
    for (double s : ws.scene().u_samples(0)) {
        const double u[1] = {s};
        for (int sign : {+1, -1}) {
            const auto pts = lightlike_focal_points(ws, u, 0.1, sign);
            REQUIRE(pts.size() == 1);
            const double sv_focal = lightsheet_jacobian_min_sv(ws, u, 0.1, pts[0].mu, sign);
            CHECK(sv_focal <= 1e-5 * std::max(1.0, std::abs(pts[0].mu)));
            const double sv_away =
                lightsheet_jacobian_min_sv(ws, u, 0.1, pts[0].mu + 0.4, sign);
            CHECK(sv_away > 1e-2);
        }
    }
}

TEST_CASE("caustic clouds converge under grid refinement") {
    const WorldSheet coarse(testing::ellipse_scene(40, 4));
    const WorldSheet fine(testing::ellipse_scene(80, 4));
    const auto a = br_caustic(coarse);
    const auto b = br_caustic(fine);

    // the coarse cloud's own sample spacing bounds how far refinement can
    // move the set
    double cloud_spacing = 0.0;
    std::map<std::pair<int, double>, std::vector<MinkVec>> groups;
    for (const auto& p : a.points) groups[{p.sign, p.t}].push_back(p.lambda);
    for (const auto& [key, pts] : groups)
        for (std::size_t i = 1; i < pts.size(); ++i)
            cloud_spacing = std::max(cloud_spacing, (pts[i] - pts[i - 1]).sup_norm());
    REQUIRE(cloud_spacing > 0.0);

    double worst = 0.0;  // directed Hausdorff fine -> coarse
    for (std::size_t i = 0; i < b.points.size(); i += 3) {
        const auto& p = b.points[i];
        double best = 1e300;
        for (const auto& q : a.points) {
            if (q.sign != p.sign || std::abs(q.t - p.t) > 1e-12) continue;
            best = std::min(best, (p.lambda - q.lambda).sup_norm());
        }
        worst = std::max(worst, best);
    }
    CHECK(worst <= cloud_spacing);
}

TEST_CASE("maxwell set of the cylinder sits on the axis with the degenerate caustic") {
    Scene sc = testing::cylinder_scene(48, 3);
    const WorldSheet ws(sc);
    const auto result = maxwell_set(ws);
    REQUIRE(!result.points.empty());
    for (const auto& p : result.points) {
        CHECK(std::abs(p.lambda[1]) <= 1e-7);
        CHECK(std::abs(p.lambda[2]) <= 1e-7);
        // antipodal generators at the common focal radius
        CHECK(std::abs(std::abs(p.mu1) - 1.0) <= 1e-7);
    }
}

TEST_CASE("maxwell set of the flat sheet is empty") {
    const WorldSheet ws(testing::flat_scene());
    CHECK(maxwell_set(ws).points.empty());
}

TEST_CASE("a dim-4 sheet runs the general-n pipeline end to end") {
    // tube S^1 x R swept in time: momentary surfaces are cylinders in the
    // spatial R^3, whose nonzero principal curvature focuses each ray
    // family onto the axis plane
    const Scene sc = scene_from_json_text(
        "{\"dim\": 4,"
        " \"embedding\": [\"t\", \"cos(u1)\", \"sin(u1)\", \"u2\"],"
        " \"u_domain\": [[0.0, 6.283185307179586], [-1.0, 1.0]],"
        " \"t_domain\": [-1.0, 1.0],"
        " \"grid\": [12, 5, 3],"
        " \"mu_range\": [-2.0, 2.0],"
        " \"u_periodic\": [true, false]}");
    const WorldSheet ws(sc);
    CHECK(ws.validate().pass());

    const double u[2] = {0.8, 0.25};
    const MomentaryFrame f = ws.frame_at(u, 0.1);
    REQUIRE(f.ok());
    CHECK(std::abs(pseudo_dot(f.nS, f.nS) - 1.0) <= 1e-12);
    CHECK(std::abs(pseudo_dot(f.nT, f.nT) + 1.0) <= 1e-12);

    for (int sign : {+1, -1}) {
        const auto cd = curvature_data(ws, u, 0.1, sign);
        REQUIRE(cd.kappas.size() == 2);
        // one flat direction along the tube, one curved around it
        const double curved = std::abs(cd.kappas[0]) > std::abs(cd.kappas[1]) ? cd.kappas[0]
                                                                              : cd.kappas[1];
        const double flat = std::abs(cd.kappas[0]) > std::abs(cd.kappas[1]) ? cd.kappas[1]
                                                                            : cd.kappas[0];
        CHECK(std::abs(flat) <= 1e-10);
        CHECK(std::abs(std::abs(curved) - 1.0) <= 1e-10);

        const auto pts = lightlike_focal_points(ws, u, 0.1, sign);
        REQUIRE(pts.size() == 1);  // the flat branch focuses at infinity
        CHECK(std::abs(pts[0].lambda[1]) <= 1e-10);
        CHECK(std::abs(pts[0].lambda[2]) <= 1e-10);
        CHECK(pts[0].lambda[3] == doctest::Approx(0.25).epsilon(1e-12));

        const auto roots = focal_mu_roots(ws, u, 0.1, sign, sc.mu_range);
        REQUIRE(roots.size() == 1);
        CHECK(roots[0] == doctest::Approx(pts[0].mu).epsilon(1e-8));

        CHECK(verify_morse_family(ws, u, 0.1, pts[0].lambda, sign).pass());
    }
}
