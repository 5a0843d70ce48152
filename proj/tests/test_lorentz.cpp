#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"

using namespace h24;
using h24::test::A;
using h24::test::named;
using h24::test::pt;
using h24::test::thrown_code;

TEST_CASE("bilinear form on named points") {
    const ProjectivePoint origin = pt(1, 0, 0, 0, 0);
    CHECK(bilinear_form(origin, origin) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(bilinear_form(A(1), A(1)) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(bilinear_form(A(1), A(3)) == doctest::Approx(-0.5).epsilon(1e-15));

    std::mt19937_64 rng(11);
    for (int it = 0; it < 50; ++it) {
        const auto x = h24::test::random_interior(rng);
        const auto y = h24::test::random_interior(rng);
        CHECK(bilinear_form(x, y) == doctest::Approx(bilinear_form(y, x)).epsilon(1e-15));
    }
}

TEST_CASE("point classification") {
    CHECK(classify_point(pt(1, 0, 0, 0, 0)) == PointClass::Interior);
    CHECK(classify_point(A(7)) == PointClass::Ideal);
    CHECK(classify_point(pt(1, 2, 0, 0, 0)) == PointClass::Outer);
    CHECK(thrown_code([] { return ProjectivePoint(Vec5{0, 0, 0, 0, 0}); }) == Err::ZeroVector);
}

TEST_CASE("distance on named points") {
    const auto& sp = named();
    CHECK(distance(sp.T1, sp.T3) == doctest::Approx(std::acosh(std::sqrt(2.0))).epsilon(1e-14));
    CHECK(distance(sp.T4, sp.T4) == 0.0);
    const double rho4 = std::acosh(7.0 * std::sqrt(2.0) / (4.0 * std::sqrt(5.0)));
    CHECK(distance(sp.Q, sp.H) == doctest::Approx(rho4).epsilon(1e-14));
    CHECK(thrown_code([&] { return distance(A(1), sp.T4); }) == Err::NotProperPoint);
}

TEST_CASE("distance is projectively scale invariant and symmetric") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> sc(-3.0, 3.0);
    for (int it = 0; it < 100; ++it) {
        const auto x = h24::test::random_interior(rng);
        const auto y = h24::test::random_interior(rng);
        double lambda = sc(rng);
        double mu = sc(rng);
        if (std::fabs(lambda) < 0.1) lambda = 0.5;
        if (std::fabs(mu) < 0.1) mu = -0.5;
        const ProjectivePoint xs(scale(x.coords(), lambda));
        const ProjectivePoint ys(scale(y.coords(), mu));
        CHECK(distance(xs, ys) == doctest::Approx(distance(x, y)).epsilon(1e-12));
        CHECK(distance(y, x) == doctest::Approx(distance(x, y)).epsilon(1e-15));
    }
}

TEST_CASE("triangle inequality on random interior triples") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 200; ++it) {
        const auto x = h24::test::random_interior(rng);
        const auto y = h24::test::random_interior(rng);
        const auto z = h24::test::random_interior(rng);
        CHECK(distance(x, z) <= distance(x, y) + distance(y, z) + 1e-12);
    }
}

TEST_CASE("polar hyperplane") {
    const HyperplaneForm h = polar_hyperplane(pt(0, 1, 0, 0, 0));
    CHECK(h.evaluate(pt(1, 0, 0.3, -0.2, 0.1)) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(std::fabs(h.evaluate(pt(1, 0.5, 0, 0, 0))) > 0.1);

    // polar of the model center is the hyperplane at infinity {x0 = 0}
    const HyperplaneForm inf = polar_hyperplane(pt(1, 0, 0, 0, 0));
    CHECK(inf.self_product() == -1.0);
    CHECK(inf.evaluate(pt(0, 1, 0.4, 0, -0.2)) == doctest::Approx(0.0).epsilon(1e-15));

    CHECK(thrown_code([] { return polar_hyperplane(A(1)); }) == Err::IdealPole);

    // pole/polar round trip
    const ProjectivePoint p = pt(1, 0.9, 0.8, 0, 0.4);
    CHECK(approx_equal(pole_point(polar_hyperplane(p)), p, 1e-12));
}

TEST_CASE("facet hyperplane pole is conjugate to all six vertices") {
    const std::array<int, 6> oct{3, 4, 7, 8, 11, 24};
    const HyperplaneForm plane = facet_hyperplane(h24::test::cell(), oct);
    for (int i : oct)
        CHECK(plane.evaluate(A(i)) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(plane.evaluate(pt(1, 0, 0, 0, 0)) > 0.0);  // oriented toward the interior
}

TEST_CASE("foot on hyperplane") {
    const HyperplaneForm x4zero = polar_hyperplane(pt(0, 0, 0, 0, 1));
    const auto& sp = named();
    CHECK(approx_equal(foot_on_hyperplane(sp.T4, x4zero), sp.T4, 1e-14));

    // point already on the plane stays put
    const ProjectivePoint on = pt(1, 0.2, -0.1, 0.4, 0);
    CHECK(approx_equal(foot_on_hyperplane(on, x4zero), on, 1e-14));

    // projection of A1 onto its adjacent octahedral facet is T
    const HyperplaneForm oct = facet_hyperplane(h24::test::cell(), {3, 4, 7, 8, 11, 24});
    CHECK(approx_equal(foot_on_hyperplane(A(1), oct), sp.T, 1e-12));

    CHECK(thrown_code([&] { return foot_on_hyperplane(sp.T4, polar_hyperplane(sp.T4)); }) ==
          Err::DegeneratePole);
    // a null pole is rejected at construction
    CHECK(thrown_code([] { return HyperplaneForm(Vec5{1, 1, 0, 0, 0}); }) == Err::DegeneratePole);
}

TEST_CASE("foot on hyperplane: incidence and orthogonality") {
    std::mt19937_64 rng(14);
    int tested = 0;
    for (int it = 0; it < 200 && tested < 50; ++it) {
        const auto x = h24::test::random_interior(rng);
        const auto raw = add(h24::test::random_interior(rng).coords(), Vec5{0.5, 1.2, 0, 0, 0});
        const ProjectivePoint pole(raw);
        if (pole.classify() != PointClass::Outer) continue;
        ++tested;
        const HyperplaneForm plane = polar_hyperplane(pole);
        const ProjectivePoint y = foot_on_hyperplane(x, plane);
        CHECK(std::fabs(plane.evaluate(y)) < 1e-12);

        // displacement direction at the foot, Lorentz-orthogonalized against y
        const double yy = y.norm2();
        const Vec5 w = sub(x.coords(), scale(y.coords(), bilinear_form(x, y) / yy));
        double wn = 0.0;
        for (double cmp : w) wn += cmp * cmp;
        wn = std::sqrt(wn);
        // tangent directions at y: Lorentz-orthogonal to both the pole and y
        const Vec5& u = plane.pole();
        int found = 0;
        for (int seed = 0; seed < 5 && found < 3; ++seed) {
            Vec5 t{0, 0, 0, 0, 0};
            t[static_cast<std::size_t>(seed)] = 1.0;
            t = sub(t, scale(u, lorentz_dot(t, u) / lorentz_dot(u, u)));
            t = sub(t, scale(y.coords(), lorentz_dot(t, y.coords()) / yy));
            double n = 0;
            for (double cmp : t) n += cmp * cmp;
            if (n < 1e-8) continue;
            ++found;
            CHECK(std::fabs(lorentz_dot(w, t)) < 1e-10 * std::max(1.0, wn) * std::sqrt(n));
        }
        CHECK(found == 3);
    }
    CHECK(tested == 50);
}

TEST_CASE("foot on line hits the named points") {
    const auto& sp = named();
    CHECK(approx_equal(foot_on_line(sp.T3, A(1), A(3)), sp.T1, 1e-12));
    CHECK(approx_equal(foot_on_line(sp.T, A(1), A(11)), sp.T3, 1e-12));
    CHECK(approx_equal(foot_on_line(sp.T, A(1), A(10)), sp.Q, 1e-12));

    CHECK(thrown_code([&] { return foot_on_line(sp.T4, A(1), A(1)); }) == Err::DegenerateLine);
    CHECK(thrown_code([&] {
        return foot_on_line(sp.T4, pt(0, 1, 0, 0, 0), pt(0, 0, 1, 0, 0));
    }) == Err::LineOutsideModel);
}

TEST_CASE("foot on line is the distance minimizer") {
    std::mt19937_64 rng(15);
    for (int it = 0; it < 40; ++it) {
        const auto x = h24::test::random_interior(rng);
        const auto a = h24::test::random_interior(rng);
        const auto b = h24::test::random_interior(rng);
        if (approx_equal(a, b, 1e-6)) continue;
        const ProjectivePoint y = foot_on_line(x, a, b);
        if (approx_equal(x, y, 1e-9)) continue;  // x on the line

        // unit-speed geodesic through y inside span{a,b}
        const double yy = y.norm2();
        Vec5 d = sub(b.coords(), scale(y.coords(), bilinear_form(b, y) / yy));
        const double dn = lorentz_dot(d, d);
        REQUIRE(dn > 0.0);
        d = scale(d, 1.0 / std::sqrt(dn));
        const Vec5 yn = scale(y.coords(), 1.0 / std::sqrt(-yy));
        const double d0 = distance(x, y);
        for (double eps : {1e-4, 1e-3}) {
            for (double sgn : {1.0, -1.0}) {
                const ProjectivePoint p(
                    add(scale(yn, std::cosh(sgn * eps)), scale(d, std::sinh(sgn * eps))));
                CHECK(distance(x, p) > d0);
            }
        }
    }
}

TEST_CASE("pair relation branches") {
    const HyperplaneForm u = polar_hyperplane(pt(0, 1, 0, 0, 0));

    SUBCASE("coincident forms report intersect at angle 0") {
        const auto rel = pair_relation(u, u);
        CHECK(rel.kind == PairRelation::Kind::Intersect);
        CHECK(rel.angle == 0.0);
        CHECK(rel.coincident);
    }

    SUBCASE("adjacent facet planes meet at the {3,4,3,4} dihedral angle") {
        const auto& c = h24::test::cell();
        std::vector<std::array<int, 6>> carriers;
        for (const auto& facet : c.facets) {
            bool has = true;
            for (int v : {1, 3, 7})
                if (std::find(facet.begin(), facet.end(), v) == facet.end()) has = false;
            if (has) carriers.push_back(facet);
        }
        REQUIRE(carriers.size() == 2);
        const auto rel =
            pair_relation(facet_hyperplane(c, carriers[0]), facet_hyperplane(c, carriers[1]));
        CHECK(rel.kind == PairRelation::Kind::Perpendicular);
        CHECK(rel.angle == doctest::Approx(std::acos(0.0)).epsilon(1e-15));
    }

    SUBCASE("ultraparallel planes report the common perpendicular length") {
        const double t = 1.0;
        const HyperplaneForm v(Vec5{std::sinh(t), -std::cosh(t), 0, 0, 0});
        CHECK(lorentz_dot(u.pole(), v.pole()) == doctest::Approx(-std::cosh(1.0)).epsilon(1e-15));
        const auto rel = pair_relation(u, v);
        CHECK(rel.kind == PairRelation::Kind::Ultraparallel);
        CHECK(rel.length == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("parallel planes at |g| = 1 never produce NaN") {
        const HyperplaneForm w1(Vec5{0, 0, 1, 0, 0});
        const HyperplaneForm w2(Vec5{1, 1, 1, 0, 0});  // shares the ideal point (1,1,0,0,0)
        CHECK(lorentz_dot(w1.pole(), w2.pole()) == doctest::Approx(1.0).epsilon(1e-15));
        const auto rel = pair_relation(w1, w2);
        CHECK(rel.kind == PairRelation::Kind::Parallel);
        CHECK(std::isfinite(rel.angle));
        CHECK(std::isfinite(rel.length));
    }

    SUBCASE("intersecting coordinate planes are perpendicular") {
        const HyperplaneForm v = polar_hyperplane(pt(0, 0, 1, 0, 0));
        const auto rel = pair_relation(u, v);
        CHECK(rel.kind == PairRelation::Kind::Perpendicular);
    }
}

TEST_CASE("hyperplane through four points matches the facet construction") {
    const auto& c = h24::test::cell();
    const std::array<ProjectivePoint, 4> pts{A(1), A(3), A(5), A(7)};
    const HyperplaneForm h = hyperplane_through(pts, named().T4);
    const HyperplaneForm ref = facet_hyperplane(c, {1, 3, 5, 7, 9, 11});
    CHECK(approx_equal(pole_point(h), pole_point(ref), 1e-12));
}
