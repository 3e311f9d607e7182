#ifndef PGRAPHON_REGULARITY_HPP
#define PGRAPHON_REGULARITY_HPP

#include "pgraphon/cut_norm.hpp"
#include "pgraphon/step_graphon.hpp"

namespace pgraphon {

struct RegularityResult {
    BlockPartitionMap partition;
    StepGraphon stepped;      // adapted to w's fine grid, constant per class
    double achieved_error;    // F cut norm of w minus the stepping
    bool witnesses_exact;     // false once any witness came from the heuristic
};

/// Energy-increment partitioning: repeatedly take a cut-norm witness
/// rectangle of w - w_P and split every class by the witness's row and
/// column sets, stopping before the class count would exceed target_k or
/// once the witness value is negligible. Witnesses are exact scans while
/// the budget allows, seeded heuristic lower bounds beyond that.
/// Classes are unions of w's own blocks (w's partition is the finest
/// grid considered).
RegularityResult weak_regularity_partition(const StepGraphon& w, int target_k,
                                           const TestFamilyPtr& fam);

}  // namespace pgraphon

#endif
