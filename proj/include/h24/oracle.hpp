#pragma once

// Independent verification path: upper half-space charts, exact horospheric
// cross-section volumes, Monte Carlo redundancy, numeric re-derivation of
// the geometric constants, and density evaluation straight from sector
// volumes with no closed-form density formula anywhere on the path.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "h24/cell24.hpp"
#include "h24/horoball.hpp"
#include "h24/packing.hpp"

namespace h24 {

// Isometry between the projective model and the upper half-space
// { (u1,u2,u3,z) : z > 0 } sending a designated ideal point to infinity and
// the model center (1,0,0,0,0) to (u=0, z=1). The spatial frame is built by
// Gram-Schmidt with deterministic pivoting, so charts are reproducible
// bit-for-bit.
//
// Horoballs centered at the designated point map to { z >= h }; geodesics
// through it map to vertical lines, and hyperbolic hyperplanes through it to
// vertical Euclidean hyperplanes. The intrinsic metric on { z = h } is the
// Euclidean u-metric divided by h.
class HalfspaceChart {
public:
    explicit HalfspaceChart(const ProjectivePoint& ideal_center);

    struct UH {
        std::array<double, 3> u;
        double z;
    };

    UH forward(const ProjectivePoint& p) const;       // interior or ideal (z = 0)
    ProjectivePoint backward(const UH& q) const;      // requires z > 0
    double horosphere_height(const Horoball& b) const;  // b centered at the chart center

    const ProjectivePoint& center() const { return center_; }

    static double distance_uh(const UH& a, const UH& b);  // hyperbolic, both z > 0

private:
    ProjectivePoint center_;
    std::array<Vec5, 5> frame_;  // f0 timelike, f1..f4 spacelike, c = f0 + f4
};

HalfspaceChart build_chart(const ProjectivePoint& center);

// Cross-section of a simplicial vertex cone with the horosphere of a ball
// centered at the apex: a Euclidean tetrahedron in the intrinsic geometry of
// the plane { z = height }. The intrinsic metric divides chart lengths by
// the height.
struct ConeSection {
    std::array<std::array<double, 3>, 4> corners;  // chart u-coordinates
    double height;                                 // z of the horosphere

    double intrinsic_volume() const;  // Euclidean 3-volume on the horosphere
};

ConeSection cone_section(const HalfspaceChart& chart,
                         std::span<const ProjectivePoint> cone_generators, const Horoball& b);

// Exact volume of horoball-sector pieces: the simplicial cone with apex at
// the ball's center spanned by the four generators, cut by the horoball.
// In the chart the cone is a vertical prism over the cross-section, so the
// piece volume is the intrinsic section volume divided by n-1 = 3.
double sector_volume_exact(std::span<const ProjectivePoint> cone_generators, const Horoball& b);
double sector_volume_exact(const HoroballSector& sector);

struct McResult {
    double estimate;
    double std_error;
};

// Monte Carlo redundancy check of the same piece volume: samples the
// hyperbolic volume element du dz / z^4 over the chart image and tests
// membership back in the Lorentz model against the cone wall hyperplanes
// and the horoball itself.
McResult sector_volume_mc(std::span<const ProjectivePoint> cone_generators, const Horoball& b,
                          long long samples, std::uint64_t seed);

enum class RhoTarget { Rho1, Rho2, Rho3 };

// Re-derives rho1/rho2/rho3 from the defining tangency and incidence
// constructions alone (horoballs through the named points, horosphere trace
// points on the named lines, hyperbolic distances between them).
double derive_rho_numeric(RhoTarget target);

// Cached per-vertex charts and the 48 characteristic-simplex cones at each
// vertex, derived from the incidence data.
class GeometryOracle {
public:
    explicit GeometryOracle(const Cell24& c);

    const Cell24& cell() const { return *cell_; }

    // Vol(ball ∩ P24) as the sum of the 48 sector pieces at the vertex.
    double cell_piece_volume(int vertex, const Horoball& b) const;

    // Def-4.1 density of the family arrangement at parameter x, from sector
    // volumes only.
    double density_from_scratch(const PackingFamily& f, double x) const;

    double sector_volume(int vertex, int flag, const Horoball& b) const;
    int flags_per_vertex() const { return 48; }

private:
    const Cell24* cell_;
    std::vector<HalfspaceChart> charts_;                 // per vertex
    std::vector<std::vector<double>> flag_base_volume_;  // u-simplex |det|/6 per flag
};

const GeometryOracle& canonical_oracle();

double density_from_scratch(const PackingFamily& f, double x);

// Non-overlap audit of a 24-ball arrangement: pairwise gaps over all 276
// pairs and, per ball, the signed clearance to each of the 18 facet
// hyperplanes not incident to its vertex. A valid packing has both minima
// >= -1e-9.
struct OverlapAudit {
    double min_pair_gap;
    double min_facet_clearance;
    std::vector<double> pair_gaps;                      // (i,j) lexicographic, 276 entries
    std::vector<std::vector<double>> facet_clearances;  // [vertex-1][18]
};

OverlapAudit overlap_audit(const Cell24& c, std::span<const Horoball> balls);

}  // namespace h24
