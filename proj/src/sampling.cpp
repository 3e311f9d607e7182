#include "pgraphon/sampling.hpp"

#include <utility>

#include "pgraphon/errors.hpp"
#include "pgraphon/rng.hpp"

namespace pgraphon {

namespace {
// Substream tags for the documented stream split.
constexpr std::uint64_t kTagVertexTypes = 1;
constexpr std::uint64_t kTagEdgeWeights = 2;
constexpr std::uint64_t kTagSubsample = 3;
}  // namespace

MeasureGraph::MeasureGraph(WeightSpacePtr space_, int n_, std::vector<SignedMeasure> cells_)
    : space(std::move(space_)), n(n_), cells(std::move(cells_)) {
    if (n < 1) throw InputError("measure graph needs at least one vertex");
    if (cells.size() != static_cast<std::size_t>(n) * n)
        throw InputError("measure graph needs an n x n cell matrix");
    const int cemetery = space->require_cemetery();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& c = cells[static_cast<std::size_t>(i) * n + j];
            if (static_cast<int>(c.mass.size()) != space->size())
                throw InputError("cell measure does not match the space");
            if (!c.is_probability()) throw InputError("cells must be probability measures");
            if (i == j && c.mass[cemetery] != 1.0)
                throw InputError("diagonal cells must be the cemetery Dirac");
        }
}

SampledGraph::SampledGraph(WeightSpacePtr space_, int n_, std::vector<int> weights_, bool symmetric_)
    : space(std::move(space_)), n(n_), weights(std::move(weights_)), symmetric(symmetric_) {
    if (n < 1) throw InputError("graph needs at least one vertex");
    if (weights.size() != static_cast<std::size_t>(n) * n)
        throw InputError("graph needs an n x n weight matrix");
    const int cemetery = space->require_cemetery();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int z = weights[static_cast<std::size_t>(i) * n + j];
            if (z < 0 || z >= space->size()) throw InputError("weight index out of range");
            if (i == j && z != cemetery) throw InputError("diagonal weights must be the cemetery");
        }
}

HSample sample_h(const StepGraphon& w, int k, std::uint64_t seed) {
    if (k < 1) throw InputError("sample size must be at least one");
    if (w.kind() != GraphonKind::Probability)
        throw InputError("sampling needs a probability graphon");
    const int cemetery = w.space()->require_cemetery();

    const CounterRng root(seed);
    CounterRng vrng = root.substream(kTagVertexTypes);
    std::vector<int> blocks(k);
    for (int i = 0; i < k; ++i) blocks[i] = categorical_rational(vrng, w.lengths());

    std::vector<SignedMeasure> cells;
    cells.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            cells.push_back(i == j ? dirac(w.space(), cemetery) : w.cell(blocks[i], blocks[j]));
    return HSample{MeasureGraph(w.space(), k, std::move(cells)), std::move(blocks)};
}

SampledGraph sample_g_from_h(const MeasureGraph& h, std::uint64_t seed, bool symmetric) {
    const int n = h.n;
    const int cemetery = h.space->require_cemetery();
    const CounterRng edges = CounterRng(seed).substream(kTagEdgeWeights);

    std::vector<int> weights(static_cast<std::size_t>(n) * n, cemetery);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (symmetric && i > j) {
                weights[static_cast<std::size_t>(i) * n + j] =
                    weights[static_cast<std::size_t>(j) * n + i];
                continue;
            }
            CounterRng ernng = edges.substream(static_cast<std::uint64_t>(i) * n + j);
            weights[static_cast<std::size_t>(i) * n + j] =
                categorical_mass(ernng, h.cell(i, j).mass);
        }
    return SampledGraph(h.space, n, std::move(weights), symmetric);
}

SampledGraph sample_g(const StepGraphon& w, int k, std::uint64_t seed, bool symmetric) {
    return sample_g_from_h(sample_h(w, k, seed).graph, seed, symmetric);
}

SampledGraph subsample(const SampledGraph& g, int k, std::uint64_t seed) {
    if (k < 1 || k > g.n) throw InputError("subsample size must lie in 1..n");
    CounterRng rng = CounterRng(seed).substream(kTagSubsample);

    // Partial Fisher-Yates: the first k entries are a uniform ordered
    // sample of distinct vertices.
    std::vector<int> pool(g.n);
    for (int i = 0; i < g.n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
        const auto j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(g.n - i)));
        std::swap(pool[i], pool[j]);
    }

    std::vector<int> weights(static_cast<std::size_t>(k) * k, g.space->require_cemetery());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) weights[static_cast<std::size_t>(i) * k + j] = g.weight(pool[i], pool[j]);
    return SampledGraph(g.space, k, std::move(weights), g.symmetric);
}

}  // namespace pgraphon
