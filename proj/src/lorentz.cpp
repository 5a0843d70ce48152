#include "h24/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace h24 {

double lorentz_dot(const Vec5& x, const Vec5& y) {
    return -x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3] + x[4] * y[4];
}

Vec5 add(const Vec5& a, const Vec5& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], a[4] + b[4]};
}

Vec5 sub(const Vec5& a, const Vec5& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3], a[4] - b[4]};
}

Vec5 scale(const Vec5& a, double t) {
    return {a[0] * t, a[1] * t, a[2] * t, a[3] * t, a[4] * t};
}

namespace {

double max_abs(const Vec5& v) {
    double m = 0.0;
    for (double c : v) m = std::max(m, std::fabs(c));
    return m;
}

}  // namespace

ProjectivePoint::ProjectivePoint(const Vec5& coords) : v_(coords) {
    const double m = max_abs(v_);
    if (m == 0.0) fail(Err::ZeroVector, "projective point: zero coordinate vector");
    if (std::fabs(v_[0]) > 1e-12 * m) {
        v_ = scale(v_, 1.0 / v_[0]);
    } else {
        // Point on the x0 = 0 chart boundary (never interior/ideal): unit
        // max-norm, first nonzero component positive.
        v_[0] = 0.0;
        double s = 1.0 / m;
        for (double c : v_) {
            if (c != 0.0) {
                if (c < 0.0) s = -s;
                break;
            }
        }
        v_ = scale(v_, s);
    }
}

double ProjectivePoint::norm2() const { return lorentz_dot(v_, v_); }

PointClass ProjectivePoint::classify(double tol) const {
    const double q = norm2();
    if (q < -tol) return PointClass::Interior;
    if (q > tol) return PointClass::Outer;
    return PointClass::Ideal;
}

double bilinear_form(const ProjectivePoint& x, const ProjectivePoint& y) {
    return lorentz_dot(x.coords(), y.coords());
}

PointClass classify_point(const ProjectivePoint& x, double tol) {
    if (tol <= 0.0) fail(Err::BadConfig, "classify_point: tol must be positive");
    return x.classify(tol);
}

bool approx_equal(const ProjectivePoint& a, const ProjectivePoint& b, double tol) {
    const Vec5& u = a.coords();
    const Vec5& v = b.coords();
    std::size_t k = 0;
    for (std::size_t i = 1; i < 5; ++i)
        if (std::fabs(u[i]) > std::fabs(u[k])) k = i;
    if (std::fabs(v[k]) < 1e-300) return false;
    const double lambda = v[k] / u[k];
    const double scale_b = std::max(max_abs(v), 1e-300);
    for (std::size_t i = 0; i < 5; ++i)
        if (std::fabs(lambda * u[i] - v[i]) > tol * scale_b) return false;
    return true;
}

ProjectivePoint combine(double alpha, const ProjectivePoint& a, double beta, const ProjectivePoint& b) {
    return ProjectivePoint(add(scale(a.coords(), alpha), scale(b.coords(), beta)));
}

double distance(const ProjectivePoint& x, const ProjectivePoint& y) {
    if (!x.is_interior() || !y.is_interior())
        fail(Err::NotProperPoint, "distance: both points must be interior");
    const double num = -bilinear_form(x, y);
    const double den = std::sqrt(x.norm2() * y.norm2());
    return std::acosh(std::max(1.0, num / den));
}

HyperplaneForm::HyperplaneForm(const Vec5& pole) : u_(pole) {
    const double q = lorentz_dot(u_, u_);
    const double m = max_abs(u_);
    if (m == 0.0 || std::fabs(q) < 1e-12 * m * m)
        fail(Err::DegeneratePole, "hyperplane: pole lies on the absolute quadric");
    u_ = scale(u_, 1.0 / std::sqrt(std::fabs(q)));
    self_ = q > 0.0 ? 1.0 : -1.0;
}

double HyperplaneForm::evaluate(const ProjectivePoint& x) const {
    return lorentz_dot(u_, x.coords());
}

HyperplaneForm HyperplaneForm::oriented_toward(const ProjectivePoint& p) const {
    HyperplaneForm out = *this;
    if (out.evaluate(p) < 0.0) out.u_ = scale(out.u_, -1.0);
    return out;
}

HyperplaneForm polar_hyperplane(const ProjectivePoint& x) {
    if (x.is_ideal()) fail(Err::IdealPole, "polar_hyperplane: pole is ideal");
    return HyperplaneForm(x.coords());
}

ProjectivePoint pole_point(const HyperplaneForm& u) { return ProjectivePoint(u.pole()); }

std::optional<Vec5> nullspace_vector(std::span<const Vec5> rows) {
    const std::size_t k = rows.size();
    if (k >= 5) return std::nullopt;
    std::vector<Vec5> m(rows.begin(), rows.end());
    std::array<int, 5> pivot_col{-1, -1, -1, -1, -1};
    std::array<bool, 5> used{};
    std::size_t rank = 0;
    for (std::size_t r = 0; r < k; ++r) {
        // pick the largest remaining entry in this row as pivot
        int pc = -1;
        double best = 0.0;
        for (int c = 0; c < 5; ++c) {
            if (!used[static_cast<std::size_t>(c)] && std::fabs(m[r][static_cast<std::size_t>(c)]) > best) {
                best = std::fabs(m[r][static_cast<std::size_t>(c)]);
                pc = c;
            }
        }
        if (pc < 0 || best < 1e-12) return std::nullopt;  // rank-deficient row
        used[static_cast<std::size_t>(pc)] = true;
        pivot_col[r] = pc;
        ++rank;
        const double inv = 1.0 / m[r][static_cast<std::size_t>(pc)];
        for (auto& c : m[r]) c *= inv;
        for (std::size_t r2 = 0; r2 < k; ++r2) {
            if (r2 == r) continue;
            const double f = m[r2][static_cast<std::size_t>(pc)];
            if (f != 0.0)
                for (int c = 0; c < 5; ++c)
                    m[r2][static_cast<std::size_t>(c)] -= f * m[r][static_cast<std::size_t>(c)];
        }
    }
    // one free column: pick the unused one with largest pivot feedback
    int free_col = -1;
    for (int c = 0; c < 5; ++c)
        if (!used[static_cast<std::size_t>(c)]) {
            free_col = c;
            break;
        }
    if (free_col < 0) return std::nullopt;
    Vec5 x{0, 0, 0, 0, 0};
    x[static_cast<std::size_t>(free_col)] = 1.0;
    for (std::size_t r = 0; r < rank; ++r)
        x[static_cast<std::size_t>(pivot_col[r])] = -m[r][static_cast<std::size_t>(free_col)];
    return x;
}

HyperplaneForm hyperplane_through(std::span<const ProjectivePoint> pts, const ProjectivePoint& toward) {
    if (pts.size() != 4) fail(Err::DegeneratePole, "hyperplane_through: need exactly 4 points");
    std::array<Vec5, 4> rows;
    for (std::size_t i = 0; i < 4; ++i) {
        const Vec5& p = pts[i].coords();
        rows[i] = {-p[0], p[1], p[2], p[3], p[4]};  // row . u = <p, u>
    }
    auto u = nullspace_vector(rows);
    if (!u) fail(Err::DegeneratePole, "hyperplane_through: points do not span a hyperplane");
    return HyperplaneForm(*u).oriented_toward(toward);
}

ProjectivePoint foot_on_hyperplane(const ProjectivePoint& x, const HyperplaneForm& u) {
    if (!u.is_proper()) fail(Err::DegeneratePole, "foot_on_hyperplane: plane does not meet H^4");
    const double t = u.evaluate(x) / u.self_product();
    return ProjectivePoint(sub(x.coords(), scale(u.pole(), t)));
}

ProjectivePoint foot_on_line(const ProjectivePoint& x, const ProjectivePoint& a, const ProjectivePoint& b) {
    if (!x.is_interior()) fail(Err::NotProperPoint, "foot_on_line: x must be interior");
    const double gaa = bilinear_form(a, a);
    const double gab = bilinear_form(a, b);
    const double gbb = bilinear_form(b, b);
    const double det = gaa * gbb - gab * gab;
    const double scale_g = std::max({std::fabs(gaa), std::fabs(gab), std::fabs(gbb), 1e-300});
    if (std::fabs(det) < 1e-12 * scale_g * scale_g)
        fail(Err::DegenerateLine, "foot_on_line: a and b do not span a line");
    const double xa = bilinear_form(x, a);
    const double xb = bilinear_form(x, b);
    const double alpha = (gbb * xa - gab * xb) / det;
    const double beta = (gaa * xb - gab * xa) / det;
    const Vec5 yv = add(scale(a.coords(), alpha), scale(b.coords(), beta));
    double m = 0.0;
    for (double c : yv) m = std::max(m, std::fabs(c));
    if (m < 1e-12)
        fail(Err::LineOutsideModel, "foot_on_line: projection vanishes, line does not meet the interior");
    ProjectivePoint y{yv};
    if (!y.is_interior()) fail(Err::LineOutsideModel, "foot_on_line: line does not meet the interior");
    return y;
}

PairRelation pair_relation(const HyperplaneForm& u, const HyperplaneForm& v) {
    if (!u.is_proper() || !v.is_proper())
        fail(Err::DegeneratePole, "pair_relation: both planes must meet H^4");
    constexpr double tol = 1e-9;
    const double g = lorentz_dot(u.pole(), v.pole());
    PairRelation rel{};
    const bool same = approx_equal(pole_point(u), pole_point(v), tol);
    if (same) {
        rel.kind = PairRelation::Kind::Intersect;
        rel.angle = 0.0;
        rel.coincident = true;
        return rel;
    }
    if (std::fabs(g) <= tol) {
        rel.kind = PairRelation::Kind::Perpendicular;
        rel.angle = std::acos(0.0);
        return rel;
    }
    if (std::fabs(g) < 1.0 - tol) {
        rel.kind = PairRelation::Kind::Intersect;
        rel.angle = std::acos(std::clamp(-g, -1.0, 1.0));
        return rel;
    }
    if (std::fabs(g) <= 1.0 + tol) {
        rel.kind = PairRelation::Kind::Parallel;
        return rel;
    }
    rel.kind = PairRelation::Kind::Ultraparallel;
    rel.length = std::acosh(std::fabs(g));
    return rel;
}

}  // namespace h24
