#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "rfph/flow.hpp"

namespace rfph {

// Grid triangulation of the (polar-or-x) x (azimuthal) rectangle. Vertex ids
// are 1-based; edges and triangles store sorted vertex ids. With wrap=true
// the last azimuthal column is identified with the first, leaving n_phi - 1
// distinct columns; wrapped grids need n_phi >= 4 to stay simplicial.
struct Triangulation {
    int n_theta = 0;
    int n_phi = 0;
    bool wrap = false;
    int n_rows = 0;
    int n_cols = 0; // distinct columns after identification
    std::vector<std::array<int, 2>> edges;
    std::vector<std::array<int, 3>> triangles;

    int n_vertices() const { return n_rows * n_cols; }
    // 1-based (i, j); j == n_phi maps to column 1 when wrapped.
    int vertex_id(int i, int j) const;
};

// Row-major index formula for the unidentified grid.
inline int vertex_index(int i, int j, int n_phi) { return j + (i - 1) * n_phi; }

Triangulation build_grid(int n_theta, int n_phi, bool wrap);

long euler_characteristic(const Triangulation& tri);

struct VertexField {
    std::vector<double> values; // indexed by vertex id - 1
};

// Scalar curvature at mesh vertices, sampled from a flow snapshot by linear
// interpolation in the polar/x coordinate. Rows span the snapshot domain;
// all vertices of a row share one value exactly.
VertexField sample_vertex_curvature(const Snapshot& snapshot, const Triangulation& tri);

// iota on edges: mean of endpoint values, indexed like tri.edges.
std::vector<double> edge_values(const VertexField& field, const Triangulation& tri);

// One simplex per line: dimension then sorted vertex ids.
void write_triangulation(const Triangulation& tri, std::ostream& out);

} // namespace rfph
