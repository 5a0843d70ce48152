#include <doctest.h>

#include <cmath>
#include <random>

#include "h24/oracle.hpp"
#include "helpers.hpp"

using namespace h24;
using h24::test::A;
using h24::test::named;
using h24::test::pt;
using h24::test::thrown_code;

namespace {
const double kLogSqrt2 = std::log(std::sqrt(2.0));

Horoball base_ball(int vertex) {
    const auto& c = h24::test::cell();
    return horosphere_through(c.vertex(vertex),
                              edge_midpoint(c, vertex, c.edges_at(vertex).front()));
}

std::array<ProjectivePoint, 4> simplex_cone() {
    const auto& sp = named();
    return {sp.T1, sp.T2, sp.T3, sp.T4};
}
}  // namespace

TEST_CASE("chart basics at A1") {
    const HalfspaceChart chart = build_chart(A(1));
    const auto& sp = named();
    CHECK(chart.forward(sp.T4).z == doctest::Approx(1.0).epsilon(1e-14));
    const auto t1 = chart.forward(sp.T1);
    CHECK(t1.z > 0.0);
    CHECK(t1.z == doctest::Approx(2.0).epsilon(1e-13));  // base ball height is 1/sqrt(1/4)
    CHECK(chart.horosphere_height(base_ball(1)) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(thrown_code([&] { return build_chart(sp.T4); }) == Err::CenterNotIdeal);
}

TEST_CASE("chart construction is deterministic") {
    std::mt19937_64 rng(30);
    for (int it = 0; it < 10; ++it) {
        const ProjectivePoint center = h24::test::random_ideal(rng);
        const HalfspaceChart a = build_chart(center);
        const HalfspaceChart b = build_chart(center);
        for (int jt = 0; jt < 5; ++jt) {
            const auto x = h24::test::random_interior(rng);
            const auto ua = a.forward(x);
            const auto ub = b.forward(x);
            CHECK(ua.z == ub.z);
            for (int k = 0; k < 3; ++k)
                CHECK(ua.u[static_cast<std::size_t>(k)] == ub.u[static_cast<std::size_t>(k)]);
        }
    }
}

TEST_CASE("chart is an isometry") {
    std::mt19937_64 rng(31);
    const HalfspaceChart chart = build_chart(A(1));
    for (int it = 0; it < 100; ++it) {
        const auto x = h24::test::random_interior(rng);
        const auto y = h24::test::random_interior(rng);
        const double direct = distance(x, y);
        const double via_chart = HalfspaceChart::distance_uh(chart.forward(x), chart.forward(y));
        CHECK(std::fabs(direct - via_chart) < 1e-10);
    }
}

TEST_CASE("chart round trip") {
    std::mt19937_64 rng(32);
    const HalfspaceChart chart = build_chart(A(7));
    for (int it = 0; it < 1000; ++it) {
        const auto x = h24::test::random_interior(rng);
        CHECK(approx_equal(chart.backward(chart.forward(x)), x, 1e-12));
    }
}

TEST_CASE("horospheres centered at the chart point map to horizontal planes") {
    std::mt19937_64 rng(33);
    const HalfspaceChart chart = build_chart(A(1));
    const Horoball ball = horosphere_through(A(1), named().T1);
    const double h = chart.horosphere_height(ball);
    for (int it = 0; it < 20; ++it) {
        const auto target = h24::test::random_interior(rng);
        const ProjectivePoint on = boundary_point_toward(ball, target);
        CHECK(std::fabs(chart.forward(on).z - h) < 1e-9);
    }
}

TEST_CASE("horocyclic arc ratio across two horospheres equals e^rho2") {
    // The segments A1->T and A1->T3 are vertical lines in the chart; the
    // intrinsic distance between them on { z = h } scales as 1/h.
    const HalfspaceChart chart = build_chart(A(1));
    const auto& sp = named();
    const double h2 = chart.horosphere_height(horosphere_through(A(1), sp.T3));
    const double h3 = chart.horosphere_height(horosphere_through(A(1), sp.T));
    const auto ut = chart.forward(sp.T).u;
    const auto ut3 = chart.forward(sp.T3).u;
    double du = 0.0;
    for (int k = 0; k < 3; ++k)
        du += (ut[static_cast<std::size_t>(k)] - ut3[static_cast<std::size_t>(k)]) *
              (ut[static_cast<std::size_t>(k)] - ut3[static_cast<std::size_t>(k)]);
    du = std::sqrt(du);
    const double arc_inner = du / h2;
    const double arc_outer = du / h3;
    CHECK(arc_outer / arc_inner == doctest::Approx(std::exp(kLogSqrt2)).epsilon(1e-13));
}

TEST_CASE("exact sector volume of the characteristic cone") {
    const double value = sector_volume_exact(simplex_cone(), base_ball(1));
    CHECK(value == doctest::Approx(1.0 / 144.0).epsilon(1e-13));
    CHECK(value / cell_volume_constants().vol_F24 == doctest::Approx(0.60793).epsilon(1e-4));

    // the horospheric cross-section feeding the piece-volume formula
    const HalfspaceChart chart = build_chart(A(1));
    const ConeSection section = cone_section(chart, simplex_cone(), base_ball(1));
    CHECK(section.height == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(section.intrinsic_volume() == doctest::Approx(1.0 / 48.0).epsilon(1e-13));
    CHECK(horoball_piece_volume(section.intrinsic_volume(), 4) ==
          doctest::Approx(0.006944).epsilon(1e-4));

    // collapsed generators
    const auto& sp = named();
    const std::array<ProjectivePoint, 4> degenerate{sp.T1, sp.T2, sp.T2, sp.T4};
    CHECK(thrown_code([&] { return sector_volume_exact(degenerate, base_ball(1)); }) ==
          Err::ConeDegenerate);
}

TEST_CASE("sector volume scales as e^{3x} under blow-up") {
    const Horoball base = base_ball(1);
    const auto cone = simplex_cone();
    const double at0 = sector_volume_exact(cone, base);
    for (double x : {0.1, 0.25, kLogSqrt2, -0.1, -kLogSqrt2}) {
        const double got = sector_volume_exact(cone, base.offset(x));
        CHECK(std::fabs(got / (at0 * std::exp(3.0 * x)) - 1.0) < 1e-9);
    }
}

TEST_CASE("all 48 sectors at a vertex are congruent and fill the cube cross-section") {
    const GeometryOracle& oracle = canonical_oracle();
    for (int vertex : {1, 10, 24}) {
        const Horoball ball = base_ball(vertex);
        const double single = oracle.sector_volume(vertex, 0, ball);
        double total = 0.0;
        for (int fl = 0; fl < 48; ++fl) {
            const double v = oracle.sector_volume(vertex, fl, ball);
            CHECK(v == doctest::Approx(single).epsilon(1e-12));
            total += v;
        }
        CHECK(total == doctest::Approx(48.0 * single).epsilon(1e-12));
        // vertex figure of {3,4,3,4} is a cube: base volume 48 * (1/6) = 8,
        // so the full piece is 8 / (3 h^3) = 1/3 at the balanced gauge
        CHECK(total == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        CHECK(oracle.cell_piece_volume(vertex, ball) == doctest::Approx(total).epsilon(1e-13));
    }
}

TEST_CASE("monte carlo sector volume") {
    const auto cone = simplex_cone();
    const Horoball base = base_ball(1);
    const double exact = sector_volume_exact(cone, base);

    SUBCASE("agrees with the exact value within three standard errors") {
        struct Config {
            int vertex;
            double offset;
            std::uint64_t seed;
        };
        const std::array<Config, 5> configs{
            {{1, 0.0, 24}, {1, 0.2, 7}, {5, kLogSqrt2, 123}, {10, -0.15, 5150}, {17, 0.3, 99}}};
        for (const auto& cf : configs) {
            const auto flags = flags_at_vertex(h24::test::cell(), cf.vertex);
            const auto gens = flag_cone_generators(h24::test::cell(), flags[5]);
            const Horoball ball = base_ball(cf.vertex).offset(cf.offset);
            const double ex = sector_volume_exact(gens, ball);
            const auto mc = sector_volume_mc(gens, ball, 100000, cf.seed);
            CHECK(mc.std_error > 0.0);
            CHECK(std::fabs(mc.estimate - ex) <= 3.0 * mc.std_error);
        }
    }

    SUBCASE("deterministic for a fixed seed") {
        const auto a = sector_volume_mc(cone, base, 50000, 42);
        const auto b = sector_volume_mc(cone, base, 50000, 42);
        CHECK(a.estimate == b.estimate);
        CHECK(a.std_error == b.std_error);
    }

    SUBCASE("standard error contracts like 1/sqrt(n)") {
        const auto small = sector_volume_mc(cone, base, 50000, 24);
        const auto big = sector_volume_mc(cone, base, 200000, 24);
        CHECK(small.std_error / big.std_error == doctest::Approx(2.0).epsilon(0.15));
        CHECK(std::fabs(small.estimate - exact) <= 4.0 * small.std_error);
    }

    SUBCASE("zero-measure cone estimates zero") {
        const auto& sp = named();
        const std::array<ProjectivePoint, 4> collapsed{sp.T1, sp.T1, sp.T1, sp.T1};
        const auto mc = sector_volume_mc(collapsed, base, 10000, 1);
        CHECK(mc.estimate == 0.0);
        CHECK(mc.std_error == 0.0);
    }
}

TEST_CASE("numeric re-derivation of the rho constants") {
    CHECK(std::fabs(derive_rho_numeric(RhoTarget::Rho1) - kLogSqrt2) < 1e-9);
    CHECK(std::fabs(derive_rho_numeric(RhoTarget::Rho2) - kLogSqrt2) < 1e-9);
    CHECK(derive_rho_numeric(RhoTarget::Rho3) == doctest::Approx(0.60199).epsilon(1e-4));
    CHECK(derive_rho_numeric(RhoTarget::Rho3) ==
          doctest::Approx(0.5 * std::log(10.0 / 3.0)).epsilon(1e-9));
}

TEST_CASE("density from scratch matches the closed forms") {
    const auto& rho = rho_constants();
    CHECK(density_from_scratch(family(FamilyName::B01), 0.0) ==
          doctest::Approx(0.60793).epsilon(1e-4));
    CHECK(density_from_scratch(family(FamilyName::B01), rho.rho1) ==
          doctest::Approx(0.71645).epsilon(1e-4));
    for (int k = 0; k <= 4; ++k) {
        const double x = rho.rho2 * static_cast<double>(k) / 4.0;
        CHECK(std::fabs(density_from_scratch(family(FamilyName::B12), x) - density_b12(x)) < 1e-5);
    }
}

TEST_CASE("overlap audit of the main arrangements") {
    const auto& c = h24::test::cell();
    const auto& rho = rho_constants();

    SUBCASE("balanced arrangement") {
        const auto balls = arrangement_geometry(family(FamilyName::B01), 0.0);
        const auto audit = overlap_audit(c, balls);
        CHECK(audit.pair_gaps.size() == 276);
        CHECK(audit.min_pair_gap >= -1e-12);
        CHECK(audit.min_pair_gap <= 1e-12);  // edges are tangent
        CHECK(audit.min_facet_clearance > 0.1);

        int tangent = 0;
        for (double g : audit.pair_gaps)
            if (std::fabs(g) < 1e-10) ++tangent;
        CHECK(tangent == 96);

        // orbit symmetry: every vertex sees the same sorted clearance profile
        auto ref = audit.facet_clearances.front();
        std::sort(ref.begin(), ref.end());
        for (const auto& row_in : audit.facet_clearances) {
            auto row = row_in;
            REQUIRE(row.size() == 18);
            std::sort(row.begin(), row.end());
            for (std::size_t k = 0; k < 18; ++k)
                CHECK(std::fabs(row[k] - ref[k]) < 1e-10);
        }
    }

    SUBCASE("arrangement B2 is facet-tight for the grown balls") {
        const auto balls = arrangement_geometry(family(FamilyName::B12), rho.rho2);
        const auto audit = overlap_audit(c, balls);
        CHECK(audit.min_pair_gap >= -1e-12);
        CHECK(audit.min_facet_clearance == doctest::Approx(0.0).epsilon(1e-12));
        // the ball at A1 is exactly tangent to the facet through T
        double b1_min = 1e9;
        for (double d : audit.facet_clearances[0]) b1_min = std::min(b1_min, d);
        CHECK(b1_min == doctest::Approx(0.0).epsilon(1e-12));
    }

    SUBCASE("over-blown ball is reported as a violation") {
        auto balls = arrangement_geometry(family(FamilyName::B12), rho.rho2);
        balls[0] = balls[0].offset(0.01);
        const auto audit = overlap_audit(c, balls);
        CHECK(audit.min_facet_clearance < -0.009);
        CHECK(audit.min_pair_gap < -0.009);
    }

    SUBCASE("21-point sweeps of every family stay valid") {
        for (FamilyName fn :
             {FamilyName::B01, FamilyName::B12, FamilyName::B13, FamilyName::B04}) {
            const PackingFamily& f = family(fn);
            for (int k = 0; k < 21; ++k) {
                const double x = f.x_max * static_cast<double>(k) / 20.0;
                const auto audit = overlap_audit(c, arrangement_geometry(f, x));
                CHECK(audit.min_pair_gap >= -1e-9);
                CHECK(audit.min_facet_clearance >= -1e-9);
            }
        }
    }
}

TEST_CASE("tangent pair volumes reconstruct from single sectors") {
    const auto& c = h24::test::cell();
    const GeometryOracle& oracle = canonical_oracle();
    const auto& rho = rho_constants();
    const double sector0 = v0();
    for (double x : {0.0, 0.21, rho.rho1}) {
        const PackingFamily& f = family(FamilyName::B01);
        const auto balls = arrangement_geometry(f, x);
        for (const auto& e : c.edges) {
            const Horoball& bi = balls[static_cast<std::size_t>(e[0] - 1)];
            const Horoball& bj = balls[static_cast<std::size_t>(e[1] - 1)];
            if (std::fabs(tangency_offset(bi, bj)) > 1e-9) continue;
            const double u = f.offset_of(e[0], x);
            const double pair =
                oracle.sector_volume(e[0], 0, bi) + oracle.sector_volume(e[1], 0, bj);
            CHECK(pair == doctest::Approx(sector_pair_volume(2.0 * sector0, u, 4)).epsilon(1e-9));
        }
    }
}
