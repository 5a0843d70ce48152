#pragma once

// Lorentzian linear algebra for the projective model of H^4: the
// signature-(1,4) bilinear form, point classification, distance, polarity,
// perpendicular feet and pairwise hyperplane relations.

#include <array>
#include <optional>
#include <span>

#include "h24/error.hpp"

namespace h24 {

using Vec5 = std::array<double, 5>;

// Points with |<x,x>| below this (after x0 = 1 normalization) count as ideal.
inline constexpr double kIdealTol = 1e-10;

// <x,y> = -x0*y0 + x1*y1 + x2*y2 + x3*y3 + x4*y4
double lorentz_dot(const Vec5& x, const Vec5& y);

Vec5 add(const Vec5& a, const Vec5& b);
Vec5 sub(const Vec5& a, const Vec5& b);
Vec5 scale(const Vec5& a, double t);

enum class PointClass { Interior, Ideal, Outer };

// Homogeneous coordinate 5-vector. Representatives are canonicalized at
// construction: x0 = 1 whenever x0 is significant, otherwise unit max-norm
// with the first nonzero component positive.
class ProjectivePoint {
public:
    explicit ProjectivePoint(const Vec5& coords);

    const Vec5& coords() const { return v_; }
    double operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }

    double norm2() const;  // <x,x> of the stored representative
    PointClass classify(double tol = kIdealTol) const;
    bool is_interior(double tol = kIdealTol) const { return classify(tol) == PointClass::Interior; }
    bool is_ideal(double tol = kIdealTol) const { return classify(tol) == PointClass::Ideal; }

private:
    Vec5 v_;
};

double bilinear_form(const ProjectivePoint& x, const ProjectivePoint& y);
PointClass classify_point(const ProjectivePoint& x, double tol = kIdealTol);

// Projective equality: representatives are nonzero scalar multiples.
bool approx_equal(const ProjectivePoint& a, const ProjectivePoint& b, double tol = 1e-9);

// alpha*a + beta*b as a projective point.
ProjectivePoint combine(double alpha, const ProjectivePoint& a, double beta, const ProjectivePoint& b);

// Hyperbolic distance of two interior points, Eq-style
// cosh d = -<x,y> / sqrt(<x,x><y,y>). Throws NotProperPoint otherwise.
double distance(const ProjectivePoint& x, const ProjectivePoint& y);

// A hyperplane stored through its pole vector u, normalized to |<u,u>| = 1.
// The plane is { x : <u,x> = 0 }; for planes meeting H^4 the pole is an
// outer point and <u,u> = +1 (the unit normal convention).
class HyperplaneForm {
public:
    explicit HyperplaneForm(const Vec5& pole);

    double evaluate(const ProjectivePoint& x) const;  // <u, x>
    const Vec5& pole() const { return u_; }
    double self_product() const { return self_; }  // +1 or -1 after normalization
    bool is_proper() const { return self_ > 0.0; }
    HyperplaneForm oriented_toward(const ProjectivePoint& p) const;  // flips so <u,p> > 0

private:
    Vec5 u_;
    double self_;
};

// Polarity x -> { y : <x,y> = 0 }. Throws IdealPole when <x,x> ~ 0.
HyperplaneForm polar_hyperplane(const ProjectivePoint& x);
ProjectivePoint pole_point(const HyperplaneForm& u);

// Hyperplane through four independent points, oriented so that
// evaluate(toward) > 0. Throws DegeneratePole when the points do not span a
// hyperplane or the plane is tangent to the absolute quadric.
HyperplaneForm hyperplane_through(std::span<const ProjectivePoint> pts, const ProjectivePoint& toward);

// Perpendicular foot of x dropped onto the plane with pole u:
// y = x - (<x,u>/<u,u>) u. Accepts interior or ideal x.
ProjectivePoint foot_on_hyperplane(const ProjectivePoint& x, const HyperplaneForm& u);

// Foot of the perpendicular from interior x onto the line a-b, by
// Lorentz-orthogonal projection onto span{a,b}.
ProjectivePoint foot_on_line(const ProjectivePoint& x, const ProjectivePoint& a, const ProjectivePoint& b);

// Mutual position of two hyperplanes, classified from g = <u,v>.
// Convention (normals toward a common interior): g = 0 perpendicular,
// |g| < 1 intersecting at angle arccos(-g), |g| = 1 parallel, |g| > 1
// ultraparallel at distance arcosh|g|. Projectively equal forms report as
// intersecting at angle 0 with the coincident flag set.
struct PairRelation {
    enum class Kind { Perpendicular, Intersect, Parallel, Ultraparallel };
    Kind kind;
    double angle = 0.0;   // set for Perpendicular (pi/2) and Intersect
    double length = 0.0;  // set for Ultraparallel
    bool coincident = false;
};

PairRelation pair_relation(const HyperplaneForm& u, const HyperplaneForm& v);

// One-dimensional nullspace of up to four independent rows (row . x = 0).
// Empty when the rows are rank-deficient.
std::optional<Vec5> nullspace_vector(std::span<const Vec5> rows);

}  // namespace h24
