#ifndef PGRAPHON_HOM_DENSITY_HPP
#define PGRAPHON_HOM_DENSITY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "pgraphon/cut_norm.hpp"
#include "pgraphon/graphs.hpp"
#include "pgraphon/step_graphon.hpp"
#include "pgraphon/test_family.hpp"

namespace pgraphon {

/// Enumeration budget for the exact density sums (assignments times
/// per-assignment work must stay below this).
inline constexpr std::int64_t kDensityBudget = 100'000'000;

/// A finite directed graph with a test function over the weight space on
/// each edge. `family_indices` records, per edge, which family function
/// the decoration is (or -1 for free-form decorations); the Counting
/// Lemma machinery reads it.
struct DecoratedGraph {
    int v = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<double>> decorations;
    std::vector<int> family_indices;

    DecoratedGraph() = default;
    DecoratedGraph(int v, std::vector<std::pair<int, int>> edges,
                   std::vector<std::vector<double>> decorations);

    /// Builds decorations from family functions.
    static DecoratedGraph from_family(int v, std::vector<std::pair<int, int>> edges,
                                      const std::vector<int>& indices, const TestFamily& fam);
};

/// Homomorphism density t(F,W): the integral over vertex-type
/// assignments of the product of per-edge decoration integrals. Exact
/// enumeration of block assignments (k^v of them); throws
/// CapabilityError over budget.
double hom_density_exact(const DecoratedGraph& f, const StepGraphon& w,
                         Exec exec = Exec::Parallel);

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Monte Carlo version: i.i.d. vertex-type draws, unbiased for the exact
/// density, with the sample standard error. Deterministic given the seed.
McEstimate hom_density_mc(const DecoratedGraph& f, const StepGraphon& w, std::int64_t samples,
                          std::uint64_t seed);

/// Graph-side density t(F,G): the normalized sum over all vertex maps
/// (with repetition) of the decoration values at the carried weights;
/// coincident vertices read the cemetery weight, matching the embedding
/// of G as a stepfunction.
double hom_density_graph(const DecoratedGraph& f, const SampledGraph& g,
                         Exec exec = Exec::Parallel);

/// Joint law of the edge weights over Z^E induced by W on a graph
/// skeleton; for the complete graph on k vertices this is the exact law
/// of the edge weights of a k-vertex W-random graph.
struct EdgeJointMeasure {
    WeightSpacePtr space;
    int edge_count = 0;
    std::vector<double> tensor;  // edge 0 least significant digit

    double at(const std::vector<int>& zs) const;
    double sum() const;
};

EdgeJointMeasure edge_joint_measure(int v, const std::vector<std::pair<int, int>>& edges,
                                    const StepGraphon& w);

/// The 2^n0 product functions built from the first n0 family functions
/// and their complements; a partition of unity indexed by sign vectors.
std::vector<std::vector<double>> inverse_counting_decorations(const TestFamily& fam, int n0);

}  // namespace pgraphon

#endif
