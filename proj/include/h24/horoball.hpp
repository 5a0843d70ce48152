#pragma once

// Horospheres and horoballs: construction, membership, geodesic
// intersection, tangency gaps, and the classical horospheric arc-length /
// horoball-piece volume formulas.

#include <vector>

#include "h24/lorentz.hpp"

namespace h24 {

// A horoball is stored as its ideal center c (canonical x0 = 1
// representative) together with the shape parameter K > 0 of the invariant
// boundary equation <x,c>^2 = K * (-<x,x>).
//
// K is the pullback of the model-position horosphere equation: in the gauge
// that fixes the model center (1,0,0,0,0) and sends c to (1,0,0,0,1), the
// horosphere passes through the axis point (1,0,0,0,s) with
// s = (1-K)/(1+K), and in the upper half-space chart with c at infinity it
// is the plane { z = 1/sqrt(K) }. Blowing the ball up by hyperbolic
// distance x multiplies K by e^{2x}.
class Horoball {
public:
    Horoball(const ProjectivePoint& center, double k_param);

    // The unique horoball centered at the ideal point `center` whose
    // boundary passes through the interior point p.
    static Horoball through(const ProjectivePoint& center, const ProjectivePoint& p);

    const ProjectivePoint& center() const { return center_; }
    double k_param() const { return k_; }
    double s_param() const { return (1.0 - k_) / (1.0 + k_); }  // in (-1, 1)

    // Ball blown up by hyperbolic distance x (shrunk for x < 0).
    Horoball offset(double x) const;

    // > 0 inside, = 0 on the horosphere, < 0 outside (for the canonical
    // x0 = 1 representative of q).
    double membership(const ProjectivePoint& q) const;

private:
    ProjectivePoint center_;
    double k_;
};

Horoball horosphere_through(const ProjectivePoint& center, const ProjectivePoint& p);

enum class BallSide { Inside, On, Outside };

// Trichotomy of q against the horosphere; the center itself reports Inside.
BallSide horosphere_contains(const Horoball& b, const ProjectivePoint& q, double tol = 1e-10);

// Point where the horosphere crosses the full line from the center through
// `target` (interior or ideal, distinct from the center). No containment
// precondition; the crossing is unique and interior.
ProjectivePoint boundary_point_toward(const Horoball& b, const ProjectivePoint& target);

// Crossing of the geodesic segment center -> endpoint with the horosphere.
// Requires an interior or ideal endpoint outside the ball.
ProjectivePoint geodesic_intersection(const Horoball& b, const ProjectivePoint& endpoint);

// Signed hyperbolic gap between two horoballs along the geodesic joining
// their centers: > 0 disjoint, 0 tangent, < 0 overlapping by |gap|.
double tangency_offset(const Horoball& b1, const Horoball& b2);

// Signed blow-up carrying `base` onto `other` (same center required).
double horoball_offset_between(const Horoball& base, const Horoball& other);

// Bolyai: hyperbolic length of the horospheric arc over a chord of length x.
double horocyclic_arc_length(double x);

// Bolyai: volume of the horoball piece over a horospheric polytope of
// (n-1)-volume `area` in H^n is area / (n-1).
double horoball_piece_volume(double area, int n);

// Parallel (Lobachevsky) angle phi with 1/sin(phi) = cosh s.
double parallel_angle_from_distance(double s);

// Offset rho with e^rho = 1/sin(phi), the horocyclic arc ratio of the angle.
double horocycle_offset_from_angle(double phi);

// Two congruent horoball sectors tangent on a common edge, contact point
// displaced by x from the balanced position:
// V(x) = (V0/2) (e^{(n-1)x} + e^{-(n-1)x}).
double sector_pair_volume(double v0, double x, int n);

// A pyramid-like convex region with apex at the horoball center, spanned by
// the given generator points.
struct HoroballSector {
    Horoball ball;
    std::vector<ProjectivePoint> apex_region;
};

}  // namespace h24
