#include "h24/cell24.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace h24 {

namespace {

constexpr double kDotTol = 1e-9;

std::vector<ProjectivePoint> standard_vertices() {
    const double w = 1.0 / std::sqrt(2.0);
    // Spatial parts of A1..A24 (x0 = 1 throughout).
    const std::array<std::array<double, 4>, 24> sp = {{
        {w, w, 0, 0},    // A1
        {w, -w, 0, 0},   // A2
        {w, 0, w, 0},    // A3
        {-w, 0, w, 0},   // A4
        {w, 0, 0, w},    // A5
        {-w, 0, 0, w},   // A6
        {0, w, w, 0},    // A7
        {0, -w, w, 0},   // A8
        {0, w, 0, w},    // A9
        {0, -w, 0, w},   // A10
        {0, 0, w, w},    // A11
        {0, 0, -w, w},   // A12
        {-w, -w, 0, 0},  // A13
        {-w, w, 0, 0},   // A14
        {-w, 0, -w, 0},  // A15
        {w, 0, -w, 0},   // A16
        {-w, 0, 0, -w},  // A17
        {w, 0, 0, -w},   // A18
        {0, -w, -w, 0},  // A19
        {0, w, -w, 0},   // A20
        {0, -w, 0, -w},  // A21
        {0, w, 0, -w},   // A22
        {0, 0, -w, -w},  // A23
        {0, 0, w, -w},   // A24
    }};
    std::vector<ProjectivePoint> out;
    out.reserve(24);
    for (const auto& s : sp) out.emplace_back(Vec5{1.0, s[0], s[1], s[2], s[3]});
    return out;
}

double spatial_dot(const ProjectivePoint& a, const ProjectivePoint& b) {
    double d = 0.0;
    for (int k = 1; k < 5; ++k) d += a[k] * b[k];
    return d;
}

int class_from_dot(double d) {
    if (std::fabs(d - 0.5) < kDotTol) return 1;
    if (std::fabs(d) < kDotTol) return 2;
    if (std::fabs(d + 0.5) < kDotTol) return 3;
    if (std::fabs(d + 1.0) < kDotTol) return 4;
    fail(Err::BadConfig, "cell24: unexpected vertex dot product");
}

}  // namespace

const ProjectivePoint& Cell24::vertex(int i) const {
    if (i < 1 || i > 24) fail(Err::BadIndex, "cell24: vertex index out of range");
    return vertices[static_cast<std::size_t>(i - 1)];
}

int Cell24::neighbor_class(int i, int j) const {
    if (i < 1 || i > 24 || j < 1 || j > 24) fail(Err::BadIndex, "neighbor_class: index out of range");
    if (i == j) fail(Err::SameIndex, "neighbor_class: i and j must differ");
    return cls_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

bool Cell24::has_edge(int i, int j) const {
    if (i < 1 || i > 24 || j < 1 || j > 24 || i == j) return false;
    return cls_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 1;
}

int Cell24::face_index(const std::array<int, 3>& face) const {
    auto key = face;
    std::sort(key.begin(), key.end());
    for (std::size_t k = 0; k < faces.size(); ++k)
        if (faces[k] == key) return static_cast<int>(k);
    return -1;
}

int Cell24::facet_index(const std::array<int, 6>& facet) const {
    auto key = facet;
    std::sort(key.begin(), key.end());
    for (std::size_t k = 0; k < facets.size(); ++k)
        if (facets[k] == key) return static_cast<int>(k);
    return -1;
}

std::vector<int> Cell24::edges_at(int i) const {
    std::vector<int> out;
    for (int j = 1; j <= 24; ++j)
        if (j != i && neighbor_class(i, j) == 1) out.push_back(j);
    return out;
}

std::vector<int> Cell24::faces_at(int i) const {
    std::vector<int> out;
    for (std::size_t k = 0; k < faces.size(); ++k)
        if (std::find(faces[k].begin(), faces[k].end(), i) != faces[k].end())
            out.push_back(static_cast<int>(k));
    return out;
}

std::vector<int> Cell24::facets_at(int i) const {
    std::vector<int> out;
    for (std::size_t k = 0; k < facets.size(); ++k)
        if (std::find(facets[k].begin(), facets[k].end(), i) != facets[k].end())
            out.push_back(static_cast<int>(k));
    return out;
}

Cell24 build_cell24() {
    Cell24 c;
    c.vertices = standard_vertices();

    for (int i = 1; i <= 24; ++i)
        for (int j = 1; j <= 24; ++j) {
            if (i == j) continue;
            const double d = spatial_dot(c.vertex(i), c.vertex(j));
            c.cls_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = class_from_dot(d);
        }

    for (int i = 1; i <= 24; ++i)
        for (int j = i + 1; j <= 24; ++j)
            if (c.neighbor_class(i, j) == 1) c.edges.push_back({i, j});

    for (const auto& e : c.edges)
        for (int k = e[1] + 1; k <= 24; ++k)
            if (c.neighbor_class(e[0], k) == 1 && c.neighbor_class(e[1], k) == 1)
                c.faces.push_back({e[0], e[1], k});

    // Each facet-diagonal pair (class 2) spans one octahedron: the pair plus
    // their four common edge-neighbors.
    for (int i = 1; i <= 24; ++i)
        for (int j = i + 1; j <= 24; ++j) {
            if (c.neighbor_class(i, j) != 2) continue;
            std::array<int, 6> facet{i, j, 0, 0, 0, 0};
            int n = 2;
            for (int k = 1; k <= 24; ++k) {
                if (k == i || k == j) continue;
                if (c.neighbor_class(i, k) == 1 && c.neighbor_class(j, k) == 1) {
                    if (n >= 6) fail(Err::BadConfig, "cell24: diagonal with more than 4 common neighbors");
                    facet[static_cast<std::size_t>(n++)] = k;
                }
            }
            if (n != 6) fail(Err::BadConfig, "cell24: diagonal with fewer than 4 common neighbors");
            std::sort(facet.begin(), facet.end());
            if (std::find(c.facets.begin(), c.facets.end(), facet) == c.facets.end())
                c.facets.push_back(facet);
        }
    std::sort(c.facets.begin(), c.facets.end());
    return c;
}

const Cell24& canonical_cell24() {
    static const Cell24 cell = build_cell24();
    return cell;
}

namespace {

ProjectivePoint index_average(const Cell24& c, std::span<const int> idx) {
    Vec5 acc{0, 0, 0, 0, 0};
    for (int i : idx) acc = add(acc, c.vertex(i).coords());
    return ProjectivePoint(acc);
}

}  // namespace

ProjectivePoint facet_center(const Cell24& c, const std::array<int, 6>& facet) {
    if (c.facet_index(facet) < 0) fail(Err::NotAFacet, "facet_center: not a facet of the cell");
    return index_average(c, facet);
}

ProjectivePoint face_center(const Cell24& c, const std::array<int, 3>& face) {
    if (c.face_index(face) < 0) fail(Err::NotAFacet, "face_center: not a face of the cell");
    return index_average(c, face);
}

ProjectivePoint edge_midpoint(const Cell24& c, int i, int j) {
    if (!c.has_edge(i, j)) fail(Err::NotAnEdge, "edge_midpoint: vertices do not span an edge");
    const std::array<int, 2> e{i, j};
    return index_average(c, e);
}

HyperplaneForm facet_hyperplane(const Cell24& c, const std::array<int, 6>& facet) {
    if (c.facet_index(facet) < 0) fail(Err::NotAFacet, "facet_hyperplane: not a facet of the cell");
    const ProjectivePoint center(Vec5{1, 0, 0, 0, 0});
    // Four sorted vertices can hold two diagonal pairs and degenerate to a
    // 2-plane; scan for an independent fourth vertex.
    for (int j = 3; j < 6; ++j) {
        const std::array<ProjectivePoint, 4> pts{c.vertex(facet[0]), c.vertex(facet[1]),
                                                 c.vertex(facet[2]), c.vertex(facet[static_cast<std::size_t>(j)])};
        try {
            return hyperplane_through(pts, center);
        } catch (const Error&) {
        }
    }
    fail(Err::DegeneratePole, "facet_hyperplane: no independent vertex quadruple");
}

std::vector<VertexFlag> flags_at_vertex(const Cell24& c, int i) {
    std::vector<VertexFlag> out;
    for (int j : c.edges_at(i)) {
        for (int f : c.faces_at(i)) {
            const auto& face = c.faces[static_cast<std::size_t>(f)];
            if (std::find(face.begin(), face.end(), j) == face.end()) continue;
            for (int F : c.facets_at(i)) {
                const auto& facet = c.facets[static_cast<std::size_t>(F)];
                bool contains_face = true;
                for (int v : face)
                    if (std::find(facet.begin(), facet.end(), v) == facet.end()) contains_face = false;
                if (contains_face) out.push_back(VertexFlag{i, j, f, F});
            }
        }
    }
    return out;
}

std::array<ProjectivePoint, 4> flag_cone_generators(const Cell24& c, const VertexFlag& f) {
    return {edge_midpoint(c, f.vertex, f.edge_to),
            face_center(c, c.faces[static_cast<std::size_t>(f.face)]),
            facet_center(c, c.facets[static_cast<std::size_t>(f.facet)]),
            ProjectivePoint(Vec5{1, 0, 0, 0, 0})};
}

SpecialPoints special_points(const Cell24& c) {
    const ProjectivePoint& a1 = c.vertex(1);
    const ProjectivePoint& a10 = c.vertex(10);
    const ProjectivePoint& a11 = c.vertex(11);

    const ProjectivePoint t1 = edge_midpoint(c, 1, 3);
    const ProjectivePoint t2 = face_center(c, {1, 3, 7});
    const ProjectivePoint t3 = facet_center(c, {1, 3, 5, 7, 9, 11});
    const ProjectivePoint t4(Vec5{1, 0, 0, 0, 0});
    const ProjectivePoint t = edge_midpoint(c, 3, 7);

    const ProjectivePoint q = foot_on_line(t, a1, a10);
    const ProjectivePoint h = combine(0.5, a1, 0.5, a10);

    const Horoball base = Horoball::through(a1, t1);        // B1(0)
    const Horoball via_t3 = Horoball::through(a1, t3);      // B1 in arrangement B1
    const Horoball via_t = Horoball::through(a1, t);        // B1 in arrangement B2

    return SpecialPoints{
        a1, t1, t2, t3, t4,
        t, q, h,
        boundary_point_toward(base, c.vertex(3)),
        boundary_point_toward(via_t3, c.vertex(3)),
        boundary_point_toward(via_t3, t),
        boundary_point_toward(via_t, a11),
        boundary_point_toward(via_t, a10),
        boundary_point_toward(base, t),
    };
}

CellVolumeConstants cell_volume_constants() {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return CellVolumeConstants{pi2 / 864.0, 4.0 * pi2 / 3.0, 1152};
}

}  // namespace h24
