#include "pgraphon/regularity.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

#include "pgraphon/errors.hpp"
#include "pgraphon/rng.hpp"

namespace pgraphon {

namespace {

constexpr double kWitnessTol = 1e-12;
constexpr int kHeuristicRestarts = 24;
constexpr std::uint64_t kWitnessSeed = 0x9e67f3a1c45b02ddULL;

CutWitness witness_of(const StepGraphon& diff, const TestFamilyPtr& fam, int round,
                      bool* exact) {
    const FKernel kernel = FKernel::from_graphon(diff, *fam);
    if (fkernel_exact_feasible(kernel)) {
        *exact = true;
        return cut_norm_exact_f(kernel);
    }
    *exact = false;
    return cut_norm_heuristic_f(kernel, kHeuristicRestarts,
                                derive_seed(kWitnessSeed, static_cast<std::uint64_t>(round)));
}

}  // namespace

RegularityResult weak_regularity_partition(const StepGraphon& w, int target_k,
                                           const TestFamilyPtr& fam) {
    if (target_k < 1) throw InputError("target class count must be at least one");
    const int k = w.block_count();

    if (k <= target_k) {
        // Already a stepfunction on few enough blocks.
        std::vector<int> own(k);
        for (int i = 0; i < k; ++i) own[i] = i;
        return RegularityResult{BlockPartitionMap::from_grouping(w.lengths(), own), w, 0.0, true};
    }

    std::vector<int> grouping(k, 0);
    bool all_exact = true;
    for (int round = 0;; ++round) {
        const StepGraphon stepped = stepping(w, grouping);
        const StepGraphon diff = kernel_difference(w, stepped);
        bool exact = false;
        const CutWitness wit = witness_of(diff, fam, round, &exact);
        all_exact &= exact;
        if (wit.value <= kWitnessTol || round >= 64) break;

        // Split every class by membership in the witness row and column
        // sets; keep class ids in first-appearance order for determinism.
        std::vector<std::uint8_t> in_rows(k, 0), in_cols(k, 0);
        for (int i : wit.rows) in_rows[i] = 1;
        for (int j : wit.cols) in_cols[j] = 1;
        std::map<std::tuple<int, int, int>, int> ids;
        std::vector<int> refined(k);
        for (int i = 0; i < k; ++i) {
            const auto key = std::make_tuple(grouping[i], static_cast<int>(in_rows[i]),
                                             static_cast<int>(in_cols[i]));
            const auto it = ids.try_emplace(key, static_cast<int>(ids.size())).first;
            refined[i] = it->second;
        }
        const int classes = static_cast<int>(ids.size());
        if (classes > target_k) break;  // would overshoot; keep the current partition
        if (classes == static_cast<int>(1 + *std::max_element(grouping.begin(), grouping.end())) &&
            refined == grouping)
            break;  // witness no longer separates anything
        grouping = refined;
        if (classes == target_k) break;
    }

    const StepGraphon stepped = stepping(w, grouping);
    const StepGraphon diff = kernel_difference(w, stepped);
    bool exact = false;
    const CutWitness final_wit = witness_of(diff, fam, -1, &exact);
    all_exact &= exact;
    return RegularityResult{BlockPartitionMap::from_grouping(w.lengths(), grouping), stepped,
                            final_wit.value, all_exact};
}

}  // namespace pgraphon
