#pragma once

#include <string>
#include <vector>

#include "rfph/persistence.hpp"

namespace rfph {

// Diagram distances with diagonal augmentation: every finite point may match
// its diagonal projection at cost (death - birth) / 2. Classes with infinite
// death match only among themselves (by sorted birth) and contribute zero
// cost; diagrams with different essential counts are infinitely far apart.

double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b);

// q in {1, 2}; exact assignment solve on the augmented sets.
double wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b, int q);

struct DistanceTriple {
    double d_b = 0.0;
    double d_w1 = 0.0;
    double d_w2 = 0.0;
};

DistanceTriple diagram_distances(const PersistenceDiagram& a, const PersistenceDiagram& b);

struct RatioRow {
    size_t pair_index = 0;
    bool defined = false;
    double ratio_w1_b = 0.0;
    double ratio_w1_w2 = 0.0;
    std::string tag; // "single-feature", "multi-feature", or "undefined"
};

std::vector<RatioRow> ratio_report(const std::vector<DistanceTriple>& triples,
                                   double single_feature_threshold = 1.05);

} // namespace rfph
