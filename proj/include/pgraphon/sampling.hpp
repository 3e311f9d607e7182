#ifndef PGRAPHON_SAMPLING_HPP
#define PGRAPHON_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "pgraphon/graphs.hpp"
#include "pgraphon/step_graphon.hpp"

namespace pgraphon {

/// A measure-decorated sample together with the latent vertex types
/// (reported as block indices; types are drawn categorically over the
/// exact block lengths, never through float boundaries).
struct HSample {
    MeasureGraph graph;
    std::vector<int> vertex_blocks;
};

/// Draws k i.i.d. uniform vertex types and decorates edge (i,j) with the
/// probability measure of w at those types; diagonals get the cemetery
/// Dirac. Deterministic given the seed. The space must define a cemetery.
HSample sample_h(const StepGraphon& w, int k, std::uint64_t seed);

/// Draws each edge weight independently from its decorating measure; with
/// `symmetric`, edge (i,j) and (j,i) share one draw. Stream split: edge
/// (i,j) uses the substream tagged i*n+j of the substream tagged 2.
SampledGraph sample_g_from_h(const MeasureGraph& h, std::uint64_t seed, bool symmetric = false);

/// The composed W-random graph: sample_g_from_h(sample_h(w, k, seed)).
SampledGraph sample_g(const StepGraphon& w, int k, std::uint64_t seed, bool symmetric = false);

/// Induced subgraph on k distinct uniformly chosen vertices.
SampledGraph subsample(const SampledGraph& g, int k, std::uint64_t seed);

}  // namespace pgraphon

#endif
