#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rfph/mesh.hpp"

namespace rfph {

struct FiltrationEntry {
    long id = 0; // global: vertices 1..V, then edges, then triangles
    int dim = 0;
    std::array<int, 3> verts{0, 0, 0}; // sorted ascending, trailing zeros unused
    double value = 0.0;
};

struct Filtration {
    std::vector<FiltrationEntry> entries; // sorted by (value, dim, id)
    std::vector<double> distinct_values;  // ascending
};

// Star filtration along iota given on the d-simplices (indexed in the
// triangulation's enumeration order). Simplices of dimension d keep their own
// value, higher ones take the max over their d-faces, lower ones the min over
// their d-cofaces.
Filtration star_filtration(const Triangulation& tri, const std::vector<double>& iota, int d = 1);

struct ValidationReport {
    std::array<long, 3> simplex_counts{0, 0, 0};
    long distinct_count = 0;
};

// Checks total order, face-before-coface placement, and face value <= coface
// value; throws validation_error naming the offending pair.
ValidationReport validate(const Filtration& filtration);

void write_filtration(const Filtration& f, std::ostream& out);
Filtration read_filtration(std::istream& in);

// Lossy integer export: values scaled, rounded, and offset to minimum 1.
void write_perseus(const Filtration& f, std::ostream& out, double scale = 1e6);

} // namespace rfph
