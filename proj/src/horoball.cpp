#include "h24/horoball.hpp"

#include <cmath>

namespace h24 {

Horoball::Horoball(const ProjectivePoint& center, double k_param)
    : center_(center), k_(k_param) {
    if (!center_.is_ideal()) fail(Err::CenterNotIdeal, "horoball: center must be ideal");
    if (!(k_ > 0.0) || !std::isfinite(k_))
        fail(Err::BadConfig, "horoball: shape parameter must be positive and finite");
}

Horoball Horoball::through(const ProjectivePoint& center, const ProjectivePoint& p) {
    if (!center.is_ideal()) fail(Err::CenterNotIdeal, "horosphere_through: center must be ideal");
    if (!p.is_interior()) fail(Err::PointNotInterior, "horosphere_through: point must be interior");
    const double a = bilinear_form(p, center);
    return Horoball(center, a * a / (-p.norm2()));
}

Horoball horosphere_through(const ProjectivePoint& center, const ProjectivePoint& p) {
    return Horoball::through(center, p);
}

Horoball Horoball::offset(double x) const { return Horoball(center_, k_ * std::exp(2.0 * x)); }

double Horoball::membership(const ProjectivePoint& q) const {
    const double a = bilinear_form(q, center_);
    return k_ * (-q.norm2()) - a * a;
}

BallSide horosphere_contains(const Horoball& b, const ProjectivePoint& q, double tol) {
    if (approx_equal(q, b.center())) return BallSide::Inside;
    const double m = b.membership(q);
    if (m > tol) return BallSide::Inside;
    if (m < -tol) return BallSide::Outside;
    return BallSide::On;
}

ProjectivePoint boundary_point_toward(const Horoball& b, const ProjectivePoint& target) {
    if (target.classify() == PointClass::Outer)
        fail(Err::NotProperPoint, "boundary_point_toward: target must be interior or ideal");
    if (approx_equal(target, b.center()))
        fail(Err::CommonCenter, "boundary_point_toward: target coincides with the center");
    // x(t) = (1-t) c + t e; membership is linear in t after dividing out the
    // double root at the center.
    const double k = b.k_param();
    const double a = bilinear_form(b.center(), target);
    const double ee = target.norm2();
    const double denom = 2.0 * k * a - k * ee - a * a;
    const double t = 2.0 * k * a / denom;
    return combine(1.0 - t, b.center(), t, target);
}

ProjectivePoint geodesic_intersection(const Horoball& b, const ProjectivePoint& endpoint) {
    if (endpoint.classify() == PointClass::Outer)
        fail(Err::NotProperPoint, "geodesic_intersection: endpoint must be interior or ideal");
    if (approx_equal(endpoint, b.center()))
        fail(Err::EndpointInsideHoroball, "geodesic_intersection: endpoint coincides with the center");
    if (horosphere_contains(b, endpoint) == BallSide::Inside)
        fail(Err::EndpointInsideHoroball, "geodesic_intersection: endpoint lies inside the horoball");
    return boundary_point_toward(b, endpoint);
}

double tangency_offset(const Horoball& b1, const Horoball& b2) {
    if (approx_equal(b1.center(), b2.center()))
        fail(Err::CommonCenter, "tangency_offset: horoballs share their center");
    const double a = bilinear_form(b1.center(), b2.center());  // < 0
    // Crossings of each horosphere with the common axis, as parameters of
    // x(t) = (1-t) c1 + t c2; their signed distance is half the log of the
    // cross ratio against the ideal endpoints (stable through tangency,
    // where an acosh-based distance would lose half the working precision).
    const double t1 = 2.0 * b1.k_param() / (2.0 * b1.k_param() - a);
    const double t2 = -a / (2.0 * b2.k_param() - a);
    return 0.5 * std::log((t2 * (1.0 - t1)) / (t1 * (1.0 - t2)));
}

double horoball_offset_between(const Horoball& base, const Horoball& other) {
    if (!approx_equal(base.center(), other.center()))
        fail(Err::CommonCenter, "horoball_offset_between: horoballs must share their center");
    return 0.5 * std::log(other.k_param() / base.k_param());
}

double horocyclic_arc_length(double x) {
    if (x < 0.0) fail(Err::NegativeChord, "horocyclic_arc_length: chord length must be >= 0");
    return 2.0 * std::sinh(0.5 * x);
}

double horoball_piece_volume(double area, int n) {
    if (area < 0.0) fail(Err::BadConfig, "horoball_piece_volume: area must be >= 0");
    if (n < 2) fail(Err::BadDimension, "horoball_piece_volume: dimension must be >= 2");
    return area / static_cast<double>(n - 1);
}

double parallel_angle_from_distance(double s) {
    if (!(s > 0.0)) fail(Err::NonpositiveDistance, "parallel_angle_from_distance: s must be > 0");
    return std::asin(1.0 / std::cosh(s));
}

double horocycle_offset_from_angle(double phi) {
    constexpr double half_pi = 1.5707963267948966;
    if (!(phi > 0.0) || !(phi <= half_pi))
        fail(Err::AngleOutOfRange, "horocycle_offset_from_angle: phi must lie in (0, pi/2]");
    return std::log(1.0 / std::sin(phi));
}

double sector_pair_volume(double v0, double x, int n) {
    if (n < 2) fail(Err::BadDimension, "sector_pair_volume: dimension must be >= 2");
    if (!(v0 > 0.0)) fail(Err::BadConfig, "sector_pair_volume: V0 must be > 0");
    const double e = static_cast<double>(n - 1) * x;
    return 0.5 * v0 * (std::exp(e) + std::exp(-e));
}

}  // namespace h24
