#include "h24/packing.hpp"

#include <algorithm>
#include <cmath>

#include "h24/oracle.hpp"

namespace h24 {

std::string family_label(FamilyName f) {
    switch (f) {
        case FamilyName::B01: return "b01";
        case FamilyName::B12: return "b12";
        case FamilyName::B13: return "b13";
        case FamilyName::B04: return "b04";
    }
    fail(Err::UnknownFamily, "family_label: bad enum value");
}

FamilyName family_from_label(const std::string& s) {
    if (s == "b01") return FamilyName::B01;
    if (s == "b12") return FamilyName::B12;
    if (s == "b13") return FamilyName::B13;
    if (s == "b04") return FamilyName::B04;
    fail(Err::UnknownFamily, "unknown family '" + s + "' (expected b01|b12|b13|b04)");
}

double PackingFamily::offset_of(int vertex, double x) const {
    for (const auto& cls : schedule)
        if (std::find(cls.members.begin(), cls.members.end(), vertex) != cls.members.end())
            return cls.base + cls.slope * x;
    fail(Err::BadIndex, "packing family: vertex not scheduled");
}

void PackingFamily::check_domain(double x) const {
    constexpr double slack = 1e-12;
    if (x < -slack || x > x_max + slack)
        fail(Err::DomainExceeded, "family parameter outside [0, x_max]");
}

namespace {

std::vector<int> class_of(const Cell24& c, int center, int k) {
    std::vector<int> out;
    for (int j = 1; j <= 24; ++j)
        if (j != center && c.neighbor_class(center, j) == k) out.push_back(j);
    return out;
}

std::vector<int> complement(const std::vector<std::vector<int>>& taken) {
    std::vector<bool> hit(25, false);
    for (const auto& v : taken)
        for (int i : v) hit[static_cast<std::size_t>(i)] = true;
    std::vector<int> out;
    for (int i = 1; i <= 24; ++i)
        if (!hit[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

}  // namespace

PackingFamily make_family(FamilyName name, const Cell24& c) {
    const auto& rho = rho_constants();
    PackingFamily f;
    f.name = name;
    switch (name) {
        case FamilyName::B01: {
            // The 8 balls that grow are A1, its six 2-neighbors, and its
            // antipode; the 16 edge-tangent partners shrink in step.
            std::vector<int> big = class_of(c, 1, 2);
            big.push_back(1);
            big.push_back(13);
            std::sort(big.begin(), big.end());
            f.schedule = {{big, 0.0, +1.0}, {complement({big}), 0.0, -1.0}};
            f.x_max = rho.rho1;
            break;
        }
        case FamilyName::B12: {
            std::vector<int> pair{1, 13};
            std::vector<int> mids = class_of(c, 1, 2);
            f.schedule = {{pair, rho.rho1, +1.0},
                          {mids, rho.rho1, -1.0},
                          {complement({pair, mids}), -rho.rho1, -1.0}};
            f.x_max = rho.rho2;
            break;
        }
        case FamilyName::B13: {
            std::vector<int> one{1};
            std::vector<int> seven = class_of(c, 1, 2);
            seven.push_back(13);
            std::sort(seven.begin(), seven.end());
            std::vector<int> ones = class_of(c, 1, 1);
            std::vector<int> threes = class_of(c, 1, 3);
            f.schedule = {{one, rho.rho1, +1.0},
                          {seven, rho.rho1, -1.0},
                          {ones, -rho.rho1, -1.0},
                          {threes, -rho.rho1, +1.0}};
            f.x_max = rho.rho2;
            break;
        }
        case FamilyName::B04: {
            std::vector<int> triple{1, 10, 17};
            f.schedule = {{triple, 0.0, +1.0}, {complement({triple}), 0.0, -1.0}};
            f.x_max = 2.0 * rho.rho1 + rho.rho4 - rho.rho3;
            break;
        }
    }
    return f;
}

const PackingFamily& family(FamilyName name) {
    static const PackingFamily b01 = make_family(FamilyName::B01, canonical_cell24());
    static const PackingFamily b12 = make_family(FamilyName::B12, canonical_cell24());
    static const PackingFamily b13 = make_family(FamilyName::B13, canonical_cell24());
    static const PackingFamily b04 = make_family(FamilyName::B04, canonical_cell24());
    switch (name) {
        case FamilyName::B01: return b01;
        case FamilyName::B12: return b12;
        case FamilyName::B13: return b13;
        case FamilyName::B04: return b04;
    }
    fail(Err::UnknownFamily, "family: bad enum value");
}

const RhoConstants& rho_constants() {
    static const RhoConstants rho = [] {
        RhoConstants r;
        r.rho1 = std::log(std::sqrt(2.0));
        r.rho2 = r.rho1;
        r.rho3 = derive_rho_numeric(RhoTarget::Rho3);
        r.rho4 = std::acosh(7.0 * std::sqrt(2.0) / (4.0 * std::sqrt(5.0)));
        return r;
    }();
    return rho;
}

double v0() {
    static const double value = [] {
        const Cell24& c = canonical_cell24();
        const auto sp = special_points(c);
        const Horoball base = Horoball::through(sp.T0, sp.T1);
        const std::array<ProjectivePoint, 4> gens{sp.T1, sp.T2, sp.T3, sp.T4};
        return sector_volume_exact(gens, base);
    }();
    return value;
}

double family_density_with_v0(const PackingFamily& f, double x, double v0_value) {
    f.check_domain(x);
    double s = 0.0;
    for (const auto& cls : f.schedule)
        s += static_cast<double>(cls.members.size()) * std::exp(3.0 * (cls.base + cls.slope * x));
    return 48.0 * v0_value * s / cell_volume_constants().vol_P24;
}

double family_density(FamilyName name, double x) {
    return family_density_with_v0(family(name), x, v0());
}

double density_b01(double x) { return family_density(FamilyName::B01, x); }
double density_b12(double x) { return family_density(FamilyName::B12, x); }
double density_b13(double x) { return family_density(FamilyName::B13, x); }
double density_b04(double x) { return family_density(FamilyName::B04, x); }

std::vector<Horoball> arrangement_geometry(const PackingFamily& f, double x) {
    f.check_domain(x);
    const Cell24& c = canonical_cell24();
    std::vector<Horoball> balls;
    balls.reserve(24);
    for (int i = 1; i <= 24; ++i) {
        const int partner = c.edges_at(i).front();
        const Horoball base = Horoball::through(c.vertex(i), edge_midpoint(c, i, partner));
        balls.push_back(base.offset(f.offset_of(i, x)));
    }
    return balls;
}

DensityReport optimize_family(const PackingFamily& f, int grid) {
    if (grid < 2) fail(Err::BadConfig, "optimize_family: grid must be >= 2");
    DensityReport rep;
    rep.family = f.name;
    rep.x_max = f.x_max;

    auto eval = [&](double x) { return family_density_with_v0(f, x, v0()); };

    int best = 0;
    for (int k = 0; k < grid; ++k) {
        const double x = f.x_max * static_cast<double>(k) / static_cast<double>(grid - 1);
        const double d = eval(x);
        rep.samples.emplace_back(x, d);
        if (d > rep.samples[static_cast<std::size_t>(best)].second) best = k;
    }

    // Golden-section refinement on the bracket around the best grid point.
    double a = rep.samples[static_cast<std::size_t>(std::max(0, best - 1))].first;
    double b = rep.samples[static_cast<std::size_t>(std::min(grid - 1, best + 1))].first;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c1 = b - gr * (b - a);
    double c2 = a + gr * (b - a);
    double f1 = eval(c1);
    double f2 = eval(c2);
    while (b - a > 1e-12) {
        if (f1 < f2) {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + gr * (b - a);
            f2 = eval(c2);
        } else {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - gr * (b - a);
            f1 = eval(c1);
        }
    }
    double xm = 0.5 * (a + b);
    // Snap to the domain boundary when the bracket collapsed onto it.
    if (xm < 1e-12) xm = 0.0;
    if (f.x_max - xm < 1e-12) xm = f.x_max;
    // The curves are not unimodal; on a coarse grid the refinement bracket
    // can span a dip, so never return less than the best sample.
    if (eval(xm) < rep.samples[static_cast<std::size_t>(best)].second)
        xm = rep.samples[static_cast<std::size_t>(best)].first;

    rep.argmax_x = xm;
    rep.max_density = eval(xm);
    rep.oracle_residual = std::fabs(rep.max_density - density_from_scratch(f, xm));
    return rep;
}

RegimeResult classify_by_max_horoball(double v_max_per_sector) {
    const double base = v0();
    const double rho1 = rho_constants().rho1;
    const double lift = std::exp(3.0 * rho1);  // 2 sqrt(2)
    if (!(v_max_per_sector > 0.0))
        fail(Err::BadConfig, "classify_by_max_horoball: volume must be positive");
    if (v_max_per_sector > base * lift * lift * (1.0 + 1e-12))
        fail(Err::MaxVolumeExceeded,
             "classify_by_max_horoball: ball would pierce a facet of the cell");
    if (v_max_per_sector <= base) return RegimeResult{1, density_b01(0.0)};
    if (v_max_per_sector <= base * lift) return RegimeResult{2, density_b01(rho1)};
    return RegimeResult{3, density_b01(0.0)};
}

}  // namespace h24
