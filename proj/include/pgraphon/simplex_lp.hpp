#ifndef PGRAPHON_SIMPLEX_LP_HPP
#define PGRAPHON_SIMPLEX_LP_HPP

#include <vector>

namespace pgraphon {

/// Solution of max c.x subject to A x <= b, x >= 0.
struct LpSolution {
    double value = 0.0;
    std::vector<double> x;
};

/// Dense tableau simplex with Bland's pivoting rule (no cycling).
///
/// Requires b >= 0, so the all-slack basis is feasible and no phase-one
/// is needed; every LP in this library is of that shape (the zero
/// function is always admissible). Throws InternalError if the pivot
/// count exceeds a generous cap or the problem is unbounded, which no
/// well-formed caller can trigger.
LpSolution simplex_maximize(const std::vector<double>& c,
                            const std::vector<std::vector<double>>& a,
                            const std::vector<double>& b);

}  // namespace pgraphon

#endif
