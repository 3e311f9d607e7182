#ifndef PGRAPHON_CUT_NORM_HPP
#define PGRAPHON_CUT_NORM_HPP

#include <cstdint>
#include <vector>

#include "pgraphon/measure_metrics.hpp"
#include "pgraphon/step_graphon.hpp"

namespace pgraphon {

/// Whether a kernel-level scan runs its serial reference loop or the
/// OpenMP one. Both produce bit-identical results: the parallel variants
/// split the search space into fixed chunks (independent of the thread
/// count) and reduce in chunk order.
enum class Exec { Serial, Parallel };

/// Maximizing rectangle of a cut norm / cut distance: block index sets,
/// the optimal sign pattern over the test family (F-norm only), and the
/// attained value.
struct CutWitness {
    std::vector<int> rows;
    std::vector<int> cols;
    std::vector<int> signs;
    double value = 0.0;
};

/// Block count cap for the generic 4^k subset-pair scan.
inline constexpr int kExactScanMaxBlocks = 14;

/// Budget cap for the F-norm exact scan (sign patterns x subsets x k).
inline constexpr std::int64_t kFnormExactBudget = std::int64_t{1} << 33;

/// True if cut_norm_exact / cut_dist_exact accept this instance size.
bool cut_exact_feasible(int blocks, const MetricChoice& metric);

/// Exact cut norm of a signed step kernel under a norm metric: the
/// maximum over whole-step rectangles I x J of the norm of the averaged
/// cell sum (attained there by quasi-convexity). For the F-norm the scan
/// decomposes over the finitely many sign patterns into one-sided real
/// scans, which pushes the feasible block count well beyond the generic
/// cap. Throws CapabilityError when infeasible (use the heuristic).
CutWitness cut_norm_exact(const StepGraphon& d, const MetricChoice& metric,
                          Exec exec = Exec::Parallel);

/// Exact cut distance between two kernels (any metric, including
/// Prohorov); inputs are refined to a common partition first.
CutWitness cut_dist_exact(const StepGraphon& u, const StepGraphon& w, const MetricChoice& metric,
                          Exec exec = Exec::Parallel);

/// Greedy local search over rectangles from seeded random starts. The
/// result is always a valid lower bound (any rectangle is), deterministic
/// given the seed.
CutWitness cut_norm_heuristic(const StepGraphon& d, const MetricChoice& metric, int restarts,
                              std::uint64_t seed);

/// Re-evaluates the objective at a witness rectangle (norm form).
double witness_objective(const StepGraphon& d, const MetricChoice& metric, const CutWitness& wit);

/// Re-evaluates the objective at a witness rectangle (distance form).
double witness_objective_dist(const StepGraphon& u, const StepGraphon& w,
                              const MetricChoice& metric, const CutWitness& wit);

/// Scalar product <U,W>_F = sum_n 2^-n <U[f_n], W[f_n]>_{L2}.
double f_inner_product(const StepGraphon& u, const StepGraphon& w, const TestFamily& fam);

/// Norm induced by the scalar product above.
double f_l2_norm(const StepGraphon& w, const TestFamily& fam);

/// Family-integrated view of a signed step kernel: one real k x k matrix
/// per test function, entries pre-scaled by the block length products.
/// This is the representation the F-norm scans and the heuristic run on;
/// experiment code may build it directly to avoid materializing huge
/// cell matrices.
struct FKernel {
    int blocks = 0;
    std::vector<double> weights;            // 2^-n per retained matrix
    std::vector<std::vector<double>> mats;  // row-major k x k, scaled by lambda_i lambda_j
    std::vector<int> fn_index;              // original family index of each retained matrix

    static FKernel from_graphon(const StepGraphon& d, const TestFamily& fam);
};

/// True if the pattern-decomposed exact scan fits the budget for this
/// F-kernel's block count and retained matrices.
bool fkernel_exact_feasible(const FKernel& kernel);

CutWitness cut_norm_exact_f(const FKernel& kernel, Exec exec = Exec::Parallel);
CutWitness cut_norm_heuristic_f(const FKernel& kernel, int restarts, std::uint64_t seed);

}  // namespace pgraphon

#endif
