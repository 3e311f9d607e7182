#ifndef PGRAPHON_DELTA_CUT_HPP
#define PGRAPHON_DELTA_CUT_HPP

#include <cstdint>
#include <vector>

#include "pgraphon/cut_norm.hpp"

namespace pgraphon {

/// Largest granularity for which the full L! permutation scan runs.
inline constexpr std::int64_t kDeltaBruteMaxBlocks = 8;

/// Result of an unlabeled cut distance search at a fixed equipartition
/// granularity. The true unlabeled distance is bounded above by every
/// granularity's optimum; `value` is that optimum for brute mode, and the
/// best value found for annealing. `inner_exact` records whether the
/// labeled distances behind it were exact scans (if not, they are
/// heuristic lower bounds and `value` is an estimate rather than a
/// certified upper bound).
struct DeltaResult {
    double value = 0.0;
    std::vector<int> permutation;
    bool inner_exact = false;
};

/// Simulated annealing knobs; defaults follow a plain QAP-style schedule.
struct AnnealParams {
    double cooling = 0.97;           // per-epoch temperature factor
    int epochs = 200;                // epochs of L moves each
    int witness_refresh = 64;        // moves between witness re-optimizations
    int final_restarts = 32;         // heuristic restarts for the final value
};

/// Exact minimum of the labeled cut distance over all L! relabelings of
/// w's blocks, after both kernels are equipartitioned to L equal blocks.
/// Requires L <= kDeltaBruteMaxBlocks.
DeltaResult delta_cut_brute(const StepGraphon& u, const StepGraphon& w, const MetricChoice& metric,
                            std::int64_t granularity, Exec exec = Exec::Parallel);

/// Simulated annealing over block permutations with pairwise-swap moves
/// and geometric cooling; deterministic given the seed. Initial
/// temperature is the starting objective value.
DeltaResult delta_cut_anneal(const StepGraphon& u, const StepGraphon& w, const MetricChoice& metric,
                             std::int64_t granularity, std::uint64_t seed,
                             const AnnealParams& params = AnnealParams{});

}  // namespace pgraphon

#endif
