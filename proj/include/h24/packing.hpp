#pragma once

// The four one-parameter horoball packing families of the ideal 24-cell,
// their closed-form density functions, the derived constants rho1..rho4 and
// V0, per-family optimization, and the largest-horoball regime
// classification.

#include <string>
#include <vector>

#include "h24/cell24.hpp"
#include "h24/horoball.hpp"

namespace h24 {

enum class FamilyName { B01, B12, B13, B04 };

std::string family_label(FamilyName f);
FamilyName family_from_label(const std::string& s);  // throws UnknownFamily

// One vertex class of a family: every member ball sits at hyperbolic offset
// base + slope * x from the reference gauge (ball through the nearest edge
// midpoints), slope in {+1, -1}.
struct VertexClass {
    std::vector<int> members;
    double base;
    double slope;
};

struct PackingFamily {
    FamilyName name;
    double x_max;
    std::vector<VertexClass> schedule;
    static constexpr int sectors_per_vertex = 48;

    double offset_of(int vertex, double x) const;  // throws BadIndex if unscheduled
    void check_domain(double x) const;             // throws DomainExceeded
};

PackingFamily make_family(FamilyName name, const Cell24& c);
const PackingFamily& family(FamilyName name);  // cached, canonical cell

// Derived geometric constants. rho1 = rho2 = log sqrt(2); rho4 is the
// closed-form distance of the named points Q and H; rho3 comes from the
// numeric horosphere construction on the line A1A10 (the printed value
// ~0.60199, not the inconsistent closed-form display).
struct RhoConstants {
    double rho1, rho2, rho3, rho4;
};

const RhoConstants& rho_constants();

// Horoball sector volume per characteristic simplex in the balanced
// arrangement B0, derived from the half-space cross-section oracle.
double v0();

// Closed-form polyhedral densities of the four families. All four evaluate
// through the single schedule path
//   delta(x) = 48 V0 sum_class size * e^{3 (base + slope x)} / Vol(P24).
double density_b01(double x);
double density_b12(double x);
double density_b13(double x);
double density_b04(double x);
double family_density(FamilyName name, double x);
double family_density_with_v0(const PackingFamily& f, double x, double v0_value);

// Horoballs of the family at parameter x, one per vertex, in vertex order.
std::vector<Horoball> arrangement_geometry(const PackingFamily& f, double x);

struct DensityReport {
    FamilyName family;
    double x_max;
    std::vector<std::pair<double, double>> samples;  // (x, delta)
    double argmax_x;
    double max_density;
    double oracle_residual;  // |closed form - from-scratch oracle| at argmax
};

// Grid scan plus golden-section refinement on [0, x_max]; the optimizer
// discovers the boundary maxima rather than assuming them.
DensityReport optimize_family(const PackingFamily& f, int grid);

// Largest-horoball classification: v is the per-sector volume of the
// maximal ball, legal up to V0 e^{6 rho1} = 8 V0 (facet contact).
struct RegimeResult {
    int regime;  // 1, 2 or 3
    double optimal_density;
};

RegimeResult classify_by_max_horoball(double v_max_per_sector);

}  // namespace h24
