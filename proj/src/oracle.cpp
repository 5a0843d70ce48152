#include "h24/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace h24 {

namespace {

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double dot4(const std::array<double, 4>& a, const std::array<double, 4>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

// Euclidean 3-volume of the tetrahedron spanned by four u-points.
double tet_volume(const std::array<std::array<double, 3>, 4>& p) {
    std::array<std::array<double, 3>, 3> m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                p[static_cast<std::size_t>(r + 1)][static_cast<std::size_t>(c)] - p[0][static_cast<std::size_t>(c)];
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return std::fabs(det) / 6.0;
}

}  // namespace

HalfspaceChart::HalfspaceChart(const ProjectivePoint& ideal_center) : center_(ideal_center) {
    if (!center_.is_ideal()) fail(Err::CenterNotIdeal, "chart: center must be ideal");
    // center = (1, v) with |v| = 1; frame f0 = model center, f4 = (0, v),
    // f1..f3 span v-perp, chosen by largest-residual pivoting.
    std::array<double, 4> v{center_[1], center_[2], center_[3], center_[4]};
    const double vn = std::sqrt(dot4(v, v));
    for (auto& c : v) c /= vn;

    frame_[0] = {1, 0, 0, 0, 0};
    frame_[4] = {0, v[0], v[1], v[2], v[3]};

    std::array<std::array<double, 4>, 3> span{};
    int got = 0;
    std::array<bool, 4> used{};
    while (got < 3) {
        int pick = -1;
        double best = -1.0;
        std::array<std::array<double, 4>, 4> residuals{};
        for (int i = 0; i < 4; ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            std::array<double, 4> r{};
            r[static_cast<std::size_t>(i)] = 1.0;
            double rv = dot4(r, v);
            for (int k = 0; k < 4; ++k) r[static_cast<std::size_t>(k)] -= rv * v[static_cast<std::size_t>(k)];
            for (int s = 0; s < got; ++s) {
                const double rs = dot4(r, span[static_cast<std::size_t>(s)]);
                for (int k = 0; k < 4; ++k)
                    r[static_cast<std::size_t>(k)] -= rs * span[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)];
            }
            const double nn = std::sqrt(dot4(r, r));
            residuals[static_cast<std::size_t>(i)] = r;
            if (nn > best + 1e-15) {
                best = nn;
                pick = i;
            }
        }
        if (pick < 0 || best < 1e-12) fail(Err::BadConfig, "chart: frame construction failed");
        auto r = residuals[static_cast<std::size_t>(pick)];
        const double nn = std::sqrt(dot4(r, r));
        for (auto& c : r) c /= nn;
        span[static_cast<std::size_t>(got)] = r;
        used[static_cast<std::size_t>(pick)] = true;
        ++got;
    }
    for (int s = 0; s < 3; ++s)
        frame_[static_cast<std::size_t>(s + 1)] = {0, span[static_cast<std::size_t>(s)][0],
                                                   span[static_cast<std::size_t>(s)][1],
                                                   span[static_cast<std::size_t>(s)][2],
                                                   span[static_cast<std::size_t>(s)][3]};
}

HalfspaceChart::UH HalfspaceChart::forward(const ProjectivePoint& p) const {
    const PointClass cls = p.classify();
    if (cls == PointClass::Outer) fail(Err::NotProperPoint, "chart: cannot map an outer point");
    std::array<double, 5> hat{};
    hat[0] = -lorentz_dot(p.coords(), frame_[0]);
    for (int k = 1; k < 5; ++k)
        hat[static_cast<std::size_t>(k)] = lorentz_dot(p.coords(), frame_[static_cast<std::size_t>(k)]);
    const double denom = hat[0] - hat[4];  // = -<p, center>
    if (denom < 1e-13)
        fail(Err::BadConfig, "chart: point coincides with the center at infinity");
    UH out;
    for (int k = 0; k < 3; ++k) out.u[static_cast<std::size_t>(k)] = hat[static_cast<std::size_t>(k + 1)] / denom;
    out.z = cls == PointClass::Ideal ? 0.0 : std::sqrt(-p.norm2()) / denom;
    return out;
}

ProjectivePoint HalfspaceChart::backward(const UH& q) const {
    if (!(q.z > 0.0)) fail(Err::BadConfig, "chart: backward needs z > 0");
    const double uu = dot3(q.u, q.u);
    const double qq = 1.0 / q.z;
    const double pp = q.z + uu / q.z;
    std::array<double, 5> hat{0.5 * (pp + qq), q.u[0] / q.z, q.u[1] / q.z, q.u[2] / q.z, 0.5 * (pp - qq)};
    Vec5 x{0, 0, 0, 0, 0};
    for (int k = 0; k < 5; ++k)
        x = add(x, scale(frame_[static_cast<std::size_t>(k)], hat[static_cast<std::size_t>(k)]));
    return ProjectivePoint(x);
}

double HalfspaceChart::horosphere_height(const Horoball& b) const {
    if (!approx_equal(b.center(), center_))
        fail(Err::BadConfig, "chart: horoball is not centered at the chart center");
    return 1.0 / std::sqrt(b.k_param());
}

double HalfspaceChart::distance_uh(const UH& a, const UH& b) {
    const double du2 = (a.u[0] - b.u[0]) * (a.u[0] - b.u[0]) + (a.u[1] - b.u[1]) * (a.u[1] - b.u[1]) +
                       (a.u[2] - b.u[2]) * (a.u[2] - b.u[2]);
    const double dz = a.z - b.z;
    return std::acosh(1.0 + (du2 + dz * dz) / (2.0 * a.z * b.z));
}

HalfspaceChart build_chart(const ProjectivePoint& center) { return HalfspaceChart(center); }

namespace {

std::array<std::array<double, 3>, 4> base_simplex(const HalfspaceChart& chart,
                                                  std::span<const ProjectivePoint> gens) {
    if (gens.size() != 4) fail(Err::ConeDegenerate, "sector: need exactly 4 cone generators");
    std::array<std::array<double, 3>, 4> base;
    for (std::size_t i = 0; i < 4; ++i) base[i] = chart.forward(gens[i]).u;
    return base;
}

}  // namespace

double ConeSection::intrinsic_volume() const {
    return tet_volume(corners) / (height * height * height);
}

ConeSection cone_section(const HalfspaceChart& chart,
                         std::span<const ProjectivePoint> cone_generators, const Horoball& b) {
    return ConeSection{base_simplex(chart, cone_generators), chart.horosphere_height(b)};
}

double sector_volume_exact(std::span<const ProjectivePoint> cone_generators, const Horoball& b) {
    const HalfspaceChart chart(b.center());
    const ConeSection section = cone_section(chart, cone_generators, b);
    if (tet_volume(section.corners) < 1e-15)
        fail(Err::ConeDegenerate, "sector: cone generators are coplanar with the apex");
    return horoball_piece_volume(section.intrinsic_volume(), 4);
}

double sector_volume_exact(const HoroballSector& sector) {
    return sector_volume_exact(sector.apex_region, sector.ball);
}

McResult sector_volume_mc(std::span<const ProjectivePoint> cone_generators, const Horoball& b,
                          long long samples, std::uint64_t seed) {
    if (samples < 1) fail(Err::BadConfig, "sector_volume_mc: need at least one sample");
    const HalfspaceChart chart(b.center());
    const auto base = base_simplex(chart, cone_generators);

    std::array<double, 3> lo{base[0]}, hi{base[0]};
    for (const auto& p : base)
        for (int k = 0; k < 3; ++k) {
            lo[static_cast<std::size_t>(k)] = std::min(lo[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(k)]);
            hi[static_cast<std::size_t>(k)] = std::max(hi[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(k)]);
        }
    double box_vol = 1.0;
    for (int k = 0; k < 3; ++k) box_vol *= hi[static_cast<std::size_t>(k)] - lo[static_cast<std::size_t>(k)];
    if (box_vol < 1e-30) return McResult{0.0, 0.0};

    // Wall hyperplanes of the simplicial cone in the Lorentz model, oriented
    // toward the omitted generator.
    std::array<HyperplaneForm, 4> walls = [&] {
        std::vector<HyperplaneForm> w;
        for (std::size_t skip = 0; skip < 4; ++skip) {
            std::array<Vec5, 4> rows;
            const Vec5& c = b.center().coords();
            rows[0] = {-c[0], c[1], c[2], c[3], c[4]};
            std::size_t r = 1;
            for (std::size_t i = 0; i < 4; ++i) {
                if (i == skip) continue;
                const Vec5& p = cone_generators[i].coords();
                rows[r++] = {-p[0], p[1], p[2], p[3], p[4]};
            }
            auto pole = nullspace_vector(rows);
            if (!pole) fail(Err::ConeDegenerate, "sector_volume_mc: degenerate cone wall");
            w.push_back(HyperplaneForm(*pole).oriented_toward(cone_generators[skip]));
        }
        return std::array<HyperplaneForm, 4>{w[0], w[1], w[2], w[3]};
    }();

    const double h = chart.horosphere_height(b);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    long long hits = 0;
    for (long long s = 0; s < samples; ++s) {
        HalfspaceChart::UH q;
        for (int k = 0; k < 3; ++k)
            q.u[static_cast<std::size_t>(k)] =
                lo[static_cast<std::size_t>(k)] +
                (hi[static_cast<std::size_t>(k)] - lo[static_cast<std::size_t>(k)]) * unit(rng);
        // z-marginal of dz/z^4 on [h, inf) by inverse transform
        q.z = h * std::pow(1.0 - unit(rng), -1.0 / 3.0);
        const ProjectivePoint x = chart.backward(q);
        bool in = horosphere_contains(b, x) != BallSide::Outside;
        for (const auto& wall : walls) {
            if (!in) break;
            in = wall.evaluate(x) >= -1e-12;
        }
        if (in) ++hits;
    }

    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(hits) / n;
    const double weight = box_vol / (3.0 * h * h * h);
    return McResult{weight * p, weight * std::sqrt(std::max(0.0, p * (1.0 - p)) / n)};
}

double derive_rho_numeric(RhoTarget target) {
    const Cell24& c = canonical_cell24();
    const ProjectivePoint& a1 = c.vertex(1);
    const ProjectivePoint t1 = edge_midpoint(c, 1, 3);
    const ProjectivePoint t3 = facet_center(c, {1, 3, 5, 7, 9, 11});
    const ProjectivePoint t = edge_midpoint(c, 3, 7);

    switch (target) {
        case RhoTarget::Rho1: {
            // Tangency with B11 moves the contact on edge A1A3 from I0 = T1
            // to the trace point of the horosphere through T3.
            const Horoball base = Horoball::through(a1, t1);
            const Horoball grown = Horoball::through(a1, t3);
            const ProjectivePoint i0 = boundary_point_toward(base, c.vertex(3));
            const ProjectivePoint i1 = boundary_point_toward(grown, c.vertex(3));
            return distance(i0, i1);
        }
        case RhoTarget::Rho2: {
            // Facet contact at T, measured from the arrangement-B1 trace
            // point on the segment A1T.
            const Horoball grown = Horoball::through(a1, t3);
            const ProjectivePoint i2 = boundary_point_toward(grown, t);
            return distance(i2, t);
        }
        case RhoTarget::Rho3: {
            // Horosphere through T with center A1, traced on the line A1A10;
            // distance from the perpendicular foot Q of T.
            const Horoball facet_ball = Horoball::through(a1, t);
            const ProjectivePoint k = boundary_point_toward(facet_ball, c.vertex(10));
            const ProjectivePoint q = foot_on_line(t, a1, c.vertex(10));
            return distance(q, k);
        }
    }
    fail(Err::BadConfig, "derive_rho_numeric: bad target");
}

GeometryOracle::GeometryOracle(const Cell24& c) : cell_(&c) {
    charts_.reserve(24);
    flag_base_volume_.resize(24);
    for (int i = 1; i <= 24; ++i) {
        charts_.emplace_back(c.vertex(i));
        const HalfspaceChart& chart = charts_.back();
        const auto flags = flags_at_vertex(c, i);
        if (flags.size() != 48) fail(Err::BadConfig, "oracle: expected 48 flags per vertex");
        auto& vols = flag_base_volume_[static_cast<std::size_t>(i - 1)];
        for (const auto& fl : flags) {
            const auto gens = flag_cone_generators(c, fl);
            std::array<std::array<double, 3>, 4> base;
            for (std::size_t g = 0; g < 4; ++g) base[g] = chart.forward(gens[g]).u;
            vols.push_back(tet_volume(base));
        }
    }
}

double GeometryOracle::sector_volume(int vertex, int flag, const Horoball& b) const {
    const auto& chart = charts_[static_cast<std::size_t>(vertex - 1)];
    const double h = chart.horosphere_height(b);
    const double vol = flag_base_volume_[static_cast<std::size_t>(vertex - 1)][static_cast<std::size_t>(flag)];
    return horoball_piece_volume(vol / (h * h * h), 4);
}

double GeometryOracle::cell_piece_volume(int vertex, const Horoball& b) const {
    double total = 0.0;
    for (int fl = 0; fl < 48; ++fl) total += sector_volume(vertex, fl, b);
    return total;
}

double GeometryOracle::density_from_scratch(const PackingFamily& f, double x) const {
    const auto balls = arrangement_geometry(f, x);
    double total = 0.0;
    for (int i = 1; i <= 24; ++i) total += cell_piece_volume(i, balls[static_cast<std::size_t>(i - 1)]);
    return total / cell_volume_constants().vol_P24;
}

const GeometryOracle& canonical_oracle() {
    static const GeometryOracle oracle(canonical_cell24());
    return oracle;
}

double density_from_scratch(const PackingFamily& f, double x) {
    return canonical_oracle().density_from_scratch(f, x);
}

OverlapAudit overlap_audit(const Cell24& c, std::span<const Horoball> balls) {
    if (balls.size() != 24) fail(Err::BadConfig, "overlap_audit: expected 24 horoballs");
    OverlapAudit audit;
    audit.min_pair_gap = std::numeric_limits<double>::infinity();
    audit.min_facet_clearance = std::numeric_limits<double>::infinity();

    for (std::size_t i = 0; i < 24; ++i)
        for (std::size_t j = i + 1; j < 24; ++j) {
            const double g = tangency_offset(balls[i], balls[j]);
            audit.pair_gaps.push_back(g);
            audit.min_pair_gap = std::min(audit.min_pair_gap, g);
        }

    audit.facet_clearances.resize(24);
    for (int i = 1; i <= 24; ++i) {
        const auto incident = c.facets_at(i);
        for (std::size_t F = 0; F < c.facets.size(); ++F) {
            if (std::find(incident.begin(), incident.end(), static_cast<int>(F)) != incident.end())
                continue;
            const HyperplaneForm plane = facet_hyperplane(c, c.facets[F]);
            const ProjectivePoint foot = foot_on_hyperplane(c.vertex(i), plane);
            const Horoball& ball = balls[static_cast<std::size_t>(i - 1)];
            const ProjectivePoint crossing = boundary_point_toward(ball, foot);
            const double d = distance(crossing, foot);
            const BallSide side = horosphere_contains(ball, foot);
            const double clearance = side == BallSide::Inside ? -d : (side == BallSide::On ? 0.0 : d);
            audit.facet_clearances[static_cast<std::size_t>(i - 1)].push_back(clearance);
            audit.min_facet_clearance = std::min(audit.min_facet_clearance, clearance);
        }
    }
    return audit;
}

}  // namespace h24
