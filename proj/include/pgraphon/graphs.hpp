#ifndef PGRAPHON_GRAPHS_HPP
#define PGRAPHON_GRAPHS_HPP

#include <vector>

#include "pgraphon/signed_measure.hpp"

namespace pgraphon {

/// Complete directed graph whose edges carry probability measures on a
/// shared weight space; the diagonal carries the Dirac mass at the
/// cemetery point. Vertex (i,j) cell order is row-major.
struct MeasureGraph {
    WeightSpacePtr space;
    int n = 0;
    std::vector<SignedMeasure> cells;

    MeasureGraph() = default;
    MeasureGraph(WeightSpacePtr space, int n, std::vector<SignedMeasure> cells);

    const SignedMeasure& cell(int i, int j) const { return cells[static_cast<std::size_t>(i) * n + j]; }
};

/// Complete directed weighted graph with weights given as point indices
/// into the space; the diagonal holds the cemetery index.
struct SampledGraph {
    WeightSpacePtr space;
    int n = 0;
    std::vector<int> weights;
    bool symmetric = false;

    SampledGraph() = default;
    SampledGraph(WeightSpacePtr space, int n, std::vector<int> weights, bool symmetric = false);

    int weight(int i, int j) const { return weights[static_cast<std::size_t>(i) * n + j]; }
};

}  // namespace pgraphon

#endif
