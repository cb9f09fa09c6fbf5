#pragma once

#include <iosfwd>
#include <vector>

#include "rfph/filtration.hpp"

namespace rfph {

struct DiagramPoint {
    double birth = 0.0;
    double death = 0.0; // +infinity for essential classes
};

struct PersistenceDiagram {
    int dimension = 0;
    std::vector<DiagramPoint> points; // sorted by (birth, death)
};

struct ReduceOptions {
    bool keep_zero_length = true;
};

// Boundary-matrix column reduction over GF(2) in the filtration's total
// order. Returns one diagram per dimension 0..2 (possibly empty).
std::vector<PersistenceDiagram> reduce(const Filtration& filtration,
                                       const ReduceOptions& options = {});

struct BettiRow {
    double threshold = 0.0;
    long beta0 = 0;
    long beta1 = 0;
    long beta2 = 0;
};

using BettiTable = std::vector<BettiRow>;

// beta_d(p) = number of dim-d points with birth <= p < death.
BettiTable betti_table(const std::vector<PersistenceDiagram>& diagrams,
                       const std::vector<double>& thresholds);

struct LifespanSummary {
    std::vector<double> finite; // sorted death - birth values
    long essential_count = 0;
};

LifespanSummary lifespans(const PersistenceDiagram& diagram);

// CSV rows; death printed as "inf" for essential classes.
void append_diagram_rows(std::ostream& out, long snapshot_index, double t,
                         const std::vector<PersistenceDiagram>& diagrams);
void append_betti_rows(std::ostream& out, long snapshot_index, const BettiTable& table);

// Integer-pair export mirroring the scaled filtration export; essentials get
// death -1.
void write_diagram_scaled(const PersistenceDiagram& diagram, std::ostream& out,
                          double scale = 1e6);

} // namespace rfph
