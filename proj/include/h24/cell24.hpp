#pragma once

// The ideal regular 24-cell: vertex coordinates, derived combinatorics
// (edges, faces, facets, k-neighbor classes), the characteristic simplex
// T0..T4 and the named auxiliary points.

#include <array>
#include <vector>

#include "h24/horoball.hpp"
#include "h24/lorentz.hpp"

namespace h24 {

struct Cell24 {
    // vertices[i-1] is the vertex A_i of the standard coordinate table, i in 1..24.
    std::vector<ProjectivePoint> vertices;
    std::vector<std::array<int, 2>> edges;   // 96 sorted pairs
    std::vector<std::array<int, 3>> faces;   // 96 sorted triples
    std::vector<std::array<int, 6>> facets;  // 24 sorted hextuples

    const ProjectivePoint& vertex(int i) const;  // 1-based
    int neighbor_class(int i, int j) const;      // 1..4; throws SameIndex/BadIndex

    bool has_edge(int i, int j) const;
    int face_index(const std::array<int, 3>& face) const;    // -1 if absent
    int facet_index(const std::array<int, 6>& facet) const;  // -1 if absent

    std::vector<int> edges_at(int i) const;   // partner vertices, sorted
    std::vector<int> faces_at(int i) const;   // indices into faces
    std::vector<int> facets_at(int i) const;  // indices into facets

private:
    friend Cell24 build_cell24();
    std::array<std::array<int, 25>, 25> cls_{};  // neighbor classes, 1-based
};

// Builds the canonical cell from the 24 standard ideal vertex coordinates;
// all combinatorics are derived from the spatial dot products
// (+1/2 edge, 0 facet diagonal, -1/2, -1 antipode).
Cell24 build_cell24();

// Shared immutable instance.
const Cell24& canonical_cell24();

ProjectivePoint facet_center(const Cell24& c, const std::array<int, 6>& facet);
ProjectivePoint face_center(const Cell24& c, const std::array<int, 3>& face);
ProjectivePoint edge_midpoint(const Cell24& c, int i, int j);

// Facet hyperplane with normal directed toward the cell interior.
HyperplaneForm facet_hyperplane(const Cell24& c, const std::array<int, 6>& facet);

// A flag (vertex, edge, face, facet) at a fixed vertex; the 48 flags at a
// vertex generate the characteristic-simplex cones there.
struct VertexFlag {
    int vertex;
    int edge_to;
    int face;   // index into faces
    int facet;  // index into facets
};

std::vector<VertexFlag> flags_at_vertex(const Cell24& c, int i);

// Cone generators of a flag: edge midpoint, face center, facet center, cell
// center.
std::array<ProjectivePoint, 4> flag_cone_generators(const Cell24& c, const VertexFlag& f);

// Characteristic simplex of the cell at the flag
// (A1, edge A1A3, face A1A3A7, facet A1A3A5A7A9A11), plus the named points:
// T = midpoint of A3A7 (= orthogonal projection of A1 onto the opposite
// facet), Q = foot of T on the line A1A10, H = midpoint of A1A10, and the
// horosphere trace points I0..I6 used by the packing constructions.
struct SpecialPoints {
    ProjectivePoint T0, T1, T2, T3, T4;
    ProjectivePoint T, Q, H;
    ProjectivePoint I0;  // base horosphere on A1A3 (= T1)
    ProjectivePoint I1;  // horosphere through T3 on A1A3
    ProjectivePoint I2;  // horosphere through T3 on A1T
    ProjectivePoint I3;  // horosphere through T on A1A11
    ProjectivePoint I5;  // horosphere through T on A1A10 (the point K)
    ProjectivePoint I6;  // base horosphere on A1T
};

SpecialPoints special_points(const Cell24& c);

struct CellVolumeConstants {
    double vol_F24;     // pi^2 / 864
    double vol_P24;     // 4 pi^2 / 3
    int simplex_count;  // 1152
};

CellVolumeConstants cell_volume_constants();

}  // namespace h24
