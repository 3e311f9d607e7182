#include "pgraphon/cut_norm.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "pgraphon/errors.hpp"
#include "pgraphon/rng.hpp"

namespace pgraphon {

namespace {

std::vector<int> mask_to_list(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(__builtin_ctzll(mask));
        mask &= mask - 1;
    }
    return out;
}

// Lexicographic order on index sets viewed as sorted lists.
bool lex_less(std::uint64_t a, std::uint64_t b) {
    while (a && b) {
        const int la = __builtin_ctzll(a);
        const int lb = __builtin_ctzll(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

struct Candidate {
    double value = -1.0;
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;

    bool beats(const Candidate& other) const {
        if (value != other.value) return value > other.value;
        if (rows != other.rows) return lex_less(rows, other.rows);
        if (cols != other.cols) return lex_less(cols, other.cols);
        return false;
    }
};

struct ListCandidate {
    double value = -1.0;
    std::vector<int> rows;
    std::vector<int> cols;

    bool beats(const ListCandidate& other) const {
        if (value != other.value) return value > other.value;
        if (rows != other.rows)
            return std::lexicographical_compare(rows.begin(), rows.end(), other.rows.begin(),
                                                other.rows.end());
        if (cols != other.cols)
            return std::lexicographical_compare(cols.begin(), cols.end(), other.cols.begin(),
                                                other.cols.end());
        return false;
    }
};

std::vector<int> flags_to_list(const std::vector<std::uint8_t>& flags) {
    std::vector<int> out;
    for (std::size_t i = 0; i < flags.size(); ++i)
        if (flags[i]) out.push_back(static_cast<int>(i));
    return out;
}

int scan_chunk_bits(int k) { return k > 8 ? 8 : 0; }

// One-sided real cut norm scan max_{I,J} sum_{I x J} m over one chunk of
// row subsets: the high bits of I are fixed to `chunk`, the low bits run
// in binary-reflected Gray order. For fixed I the optimal J is the set of
// strictly positive column sums.
Candidate onesided_scan_chunk(const std::vector<double>& m, int k, int chunk_bits,
                              std::uint64_t chunk) {
    const int low_bits = k - chunk_bits;
    const std::uint64_t base = chunk << low_bits;
    std::vector<double> colsum(k, 0.0);
    for (int i = 0; i < k; ++i)
        if (base >> i & 1)
            for (int j = 0; j < k; ++j) colsum[j] += m[static_cast<std::size_t>(i) * k + j];

    Candidate best;
    std::uint64_t mask = base;
    std::uint64_t gray = 0;
    for (std::uint64_t t = 0;; ++t) {
        double value = 0.0;
        std::uint64_t cols = 0;
        for (int j = 0; j < k; ++j)
            if (colsum[j] > 0.0) {
                value += colsum[j];
                cols |= std::uint64_t{1} << j;
            }
        const Candidate cand{value, mask, cols};
        if (cand.beats(best)) best = cand;

        if (t + 1 >= (std::uint64_t{1} << low_bits)) break;
        const std::uint64_t next_gray = (t + 1) ^ ((t + 1) >> 1);
        const int flip = __builtin_ctzll(gray ^ next_gray);
        gray = next_gray;
        const double sign = (mask >> flip & 1) ? -1.0 : 1.0;
        mask ^= std::uint64_t{1} << flip;
        for (int j = 0; j < k; ++j) colsum[j] += sign * m[static_cast<std::size_t>(flip) * k + j];
    }
    return best;
}

// Canonical objective of an F-kernel on a rectangle: fresh summation in
// index order, independent of any scan's accumulation order.
double f_rectangle_value(const FKernel& kernel, const std::vector<int>& rows,
                         const std::vector<int>& cols) {
    const int k = kernel.blocks;
    double value = 0.0;
    for (std::size_t t = 0; t < kernel.mats.size(); ++t) {
        double s = 0.0;
        const auto& m = kernel.mats[t];
        for (int i : rows)
            for (int j : cols) s += m[static_cast<std::size_t>(i) * k + j];
        value += kernel.weights[t] * std::abs(s);
    }
    return value;
}

std::vector<int> f_rectangle_signs(const FKernel& kernel, const std::vector<int>& rows,
                                   const std::vector<int>& cols) {
    const int max_fn = kernel.fn_index.empty()
                           ? 0
                           : *std::max_element(kernel.fn_index.begin(), kernel.fn_index.end()) + 1;
    std::vector<int> signs(max_fn, 1);
    const int k = kernel.blocks;
    for (std::size_t t = 0; t < kernel.mats.size(); ++t) {
        double s = 0.0;
        const auto& m = kernel.mats[t];
        for (int i : rows)
            for (int j : cols) s += m[static_cast<std::size_t>(i) * k + j];
        signs[kernel.fn_index[t]] = s < 0.0 ? -1 : 1;
    }
    return signs;
}

// Scaled cell vectors C[i][j] = lambda_i lambda_j cell(i,j).
std::vector<std::vector<double>> scaled_cells(const StepGraphon& g) {
    const int k = g.block_count();
    const auto lens = g.lengths_double();
    std::vector<std::vector<double>> out(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            std::vector<double> v = g.cell(i, j).mass;
            const double w = lens[i] * lens[j];
            for (double& x : v) x *= w;
            out[static_cast<std::size_t>(i) * k + j] = std::move(v);
        }
    return out;
}

double eval_metric_vec(const MetricChoice& metric, const WeightSpacePtr& space,
                       const std::vector<double>& acc) {
    return eval_norm(metric, SignedMeasure(space, acc));
}

double eval_metric_pair(const MetricChoice& metric, const WeightSpacePtr& space,
                        const std::vector<double>& acc_u, const std::vector<double>& acc_w) {
    // Averaged masses of positive kernels can dip epsilon-negative; clamp
    // for the Prohorov nonnegativity check.
    auto clamp = [](std::vector<double> v) {
        for (double& x : v)
            if (x < 0.0 && x > -1e-12) x = 0.0;
        return v;
    };
    if (metric.kind == MetricChoice::Kind::Prohorov)
        return prohorov(SignedMeasure(space, clamp(acc_u)), SignedMeasure(space, clamp(acc_w)));
    return eval_dist(metric, SignedMeasure(space, acc_u), SignedMeasure(space, acc_w));
}

// Generic subset-pair scan over one chunk of row sets; handles both the
// norm form (one kernel) and the distance form (a pair of kernels).
Candidate pair_scan_chunk(const std::vector<std::vector<double>>* cu,
                          const std::vector<std::vector<double>>* cw, int k, int m,
                          const MetricChoice& metric, const WeightSpacePtr& space, int chunk_bits,
                          std::uint64_t chunk) {
    const int low_bits = k - chunk_bits;
    const std::uint64_t row_base = chunk << low_bits;

    std::vector<double> colsum_u(static_cast<std::size_t>(k) * m, 0.0);
    std::vector<double> colsum_w(static_cast<std::size_t>(k) * m, 0.0);
    auto add_row = [&](int i, double sign) {
        for (int j = 0; j < k; ++j) {
            const auto& vu = (*cu)[static_cast<std::size_t>(i) * k + j];
            for (int z = 0; z < m; ++z) colsum_u[static_cast<std::size_t>(j) * m + z] += sign * vu[z];
            if (cw) {
                const auto& vw = (*cw)[static_cast<std::size_t>(i) * k + j];
                for (int z = 0; z < m; ++z)
                    colsum_w[static_cast<std::size_t>(j) * m + z] += sign * vw[z];
            }
        }
    };
    for (int i = 0; i < k; ++i)
        if (row_base >> i & 1) add_row(i, 1.0);

    Candidate best;
    std::uint64_t rows = row_base;
    std::uint64_t row_gray = 0;
    for (std::uint64_t t = 0;; ++t) {
        std::vector<double> acc_u(m, 0.0), acc_w(m, 0.0);
        std::uint64_t cols = 0;
        std::uint64_t col_gray = 0;
        for (std::uint64_t s = 0;; ++s) {
            const double value = cw ? eval_metric_pair(metric, space, acc_u, acc_w)
                                    : eval_metric_vec(metric, space, acc_u);
            const Candidate cand{value, rows, cols};
            if (cand.beats(best)) best = cand;

            if (s + 1 >= (std::uint64_t{1} << k)) break;
            const std::uint64_t next = (s + 1) ^ ((s + 1) >> 1);
            const int flip = __builtin_ctzll(col_gray ^ next);
            col_gray = next;
            const double sign = (cols >> flip & 1) ? -1.0 : 1.0;
            cols ^= std::uint64_t{1} << flip;
            for (int z = 0; z < m; ++z) {
                acc_u[z] += sign * colsum_u[static_cast<std::size_t>(flip) * m + z];
                if (cw) acc_w[z] += sign * colsum_w[static_cast<std::size_t>(flip) * m + z];
            }
        }

        if (t + 1 >= (std::uint64_t{1} << low_bits)) break;
        const std::uint64_t next_gray = (t + 1) ^ ((t + 1) >> 1);
        const int flip = __builtin_ctzll(row_gray ^ next_gray);
        row_gray = next_gray;
        const double sign = (rows >> flip & 1) ? -1.0 : 1.0;
        rows ^= std::uint64_t{1} << flip;
        add_row(flip, sign);
    }
    return best;
}

Candidate pair_scan(const std::vector<std::vector<double>>* cu,
                    const std::vector<std::vector<double>>* cw, int k, int m,
                    const MetricChoice& metric, const WeightSpacePtr& space, Exec exec) {
    const int chunk_bits = scan_chunk_bits(k);
    const std::int64_t chunks = std::int64_t{1} << chunk_bits;
    std::vector<Candidate> per_chunk(chunks);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t c = 0; c < chunks; ++c)
            per_chunk[c] = pair_scan_chunk(cu, cw, k, m, metric, space, chunk_bits,
                                           static_cast<std::uint64_t>(c));
    } else {
        for (std::int64_t c = 0; c < chunks; ++c)
            per_chunk[c] = pair_scan_chunk(cu, cw, k, m, metric, space, chunk_bits,
                                           static_cast<std::uint64_t>(c));
    }
    Candidate best;
    for (const auto& cand : per_chunk)
        if (cand.beats(best)) best = cand;
    return best;
}

}  // namespace

FKernel FKernel::from_graphon(const StepGraphon& d, const TestFamily& fam) {
    const int k = d.block_count();
    const auto lens = d.lengths_double();
    FKernel out;
    out.blocks = k;
    for (int n = 0; n < fam.size(); ++n) {
        std::vector<double> mat(static_cast<std::size_t>(k) * k);
        bool nonzero = false;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                const double v = lens[i] * lens[j] * d.cell(i, j).integrate(fam.function(n));
                mat[static_cast<std::size_t>(i) * k + j] = v;
                nonzero |= v != 0.0;
            }
        if (!nonzero) continue;  // identically zero integrals carry no sign choice
        out.weights.push_back(TestFamily::weight(n));
        out.mats.push_back(std::move(mat));
        out.fn_index.push_back(n);
    }
    return out;
}

bool fkernel_exact_feasible(const FKernel& kernel) {
    const int k = kernel.blocks;
    if (k > 30) return false;
    const std::int64_t patterns = std::int64_t{1} << std::min<std::size_t>(kernel.mats.size(), 20);
    return patterns * (std::int64_t{1} << k) * std::max(1, k) <= kFnormExactBudget;
}

bool cut_exact_feasible(int blocks, const MetricChoice& metric) {
    if (metric.kind == MetricChoice::Kind::FNorm && metric.family) {
        if (blocks > 30) return false;
        const std::int64_t patterns = std::int64_t{1} << std::min(metric.family->size(), 20);
        return patterns * (std::int64_t{1} << blocks) * std::max(1, blocks) <= kFnormExactBudget;
    }
    return blocks <= kExactScanMaxBlocks;
}

CutWitness cut_norm_exact_f(const FKernel& kernel, Exec exec) {
    const int k = kernel.blocks;
    const int t_count = static_cast<int>(kernel.mats.size());
    if (t_count == 0) return CutWitness{{}, {}, {}, 0.0};
    if (!fkernel_exact_feasible(kernel))
        throw CapabilityError("cut norm: exact F-norm scan budget exceeded at " +
                              std::to_string(k) + " blocks; use the heuristic");

    // The F-norm objective decomposes over sign patterns into one-sided
    // real scans (the finite family makes the decomposition exact). Tasks
    // are the fixed (pattern, row-chunk) grid, so the reduction order
    // never depends on the thread schedule.
    const int patterns = 1 << t_count;
    const int chunk_bits = k > 8 ? 8 : 0;
    const std::int64_t chunks = std::int64_t{1} << chunk_bits;
    const std::int64_t tasks = patterns * chunks;
    std::vector<Candidate> per_task(tasks);

    auto run_task = [&](std::int64_t task) {
        const int p = static_cast<int>(task / chunks);
        const std::uint64_t chunk = static_cast<std::uint64_t>(task % chunks);
        std::vector<double> combined(static_cast<std::size_t>(k) * k, 0.0);
        for (int t = 0; t < t_count; ++t) {
            const double coeff = (p >> t & 1) ? -kernel.weights[t] : kernel.weights[t];
            const auto& m = kernel.mats[t];
            for (std::size_t c = 0; c < combined.size(); ++c) combined[c] += coeff * m[c];
        }
        per_task[task] = onesided_scan_chunk(combined, k, chunk_bits, chunk);
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t task = 0; task < tasks; ++task) run_task(task);
    } else {
        for (std::int64_t task = 0; task < tasks; ++task) run_task(task);
    }
    Candidate best;
    for (const auto& cand : per_task)
        if (cand.beats(best)) best = cand;

    CutWitness wit;
    wit.rows = mask_to_list(best.rows);
    wit.cols = mask_to_list(best.cols);
    wit.signs = f_rectangle_signs(kernel, wit.rows, wit.cols);
    wit.value = f_rectangle_value(kernel, wit.rows, wit.cols);
    return wit;
}

CutWitness cut_norm_exact(const StepGraphon& d, const MetricChoice& metric, Exec exec) {
    if (!metric.is_norm()) throw InputError("cut_norm needs a norm metric, not Prohorov");
    if (metric.kind == MetricChoice::Kind::FNorm) {
        if (!metric.family) throw InputError("fnorm metric needs a test family");
        return cut_norm_exact_f(FKernel::from_graphon(d, *metric.family), exec);
    }
    const int k = d.block_count();
    if (k > kExactScanMaxBlocks)
        throw CapabilityError("cut norm: exact subset scan supports at most " +
                              std::to_string(kExactScanMaxBlocks) + " blocks; use the heuristic");
    const auto cells = scaled_cells(d);
    const Candidate best = pair_scan(&cells, nullptr, k, d.space()->size(), metric, d.space(), exec);
    CutWitness wit;
    wit.rows = mask_to_list(best.rows);
    wit.cols = mask_to_list(best.cols);
    wit.value = witness_objective(d, metric, wit);
    return wit;
}

CutWitness cut_dist_exact(const StepGraphon& u, const StepGraphon& w, const MetricChoice& metric,
                          Exec exec) {
    if (metric.is_norm()) return cut_norm_exact(kernel_difference(u, w), metric, exec);
    auto [ur, wr] = refine_common(u, w);
    const int k = ur.block_count();
    if (k > kExactScanMaxBlocks)
        throw CapabilityError("cut distance: exact subset scan supports at most " +
                              std::to_string(kExactScanMaxBlocks) + " blocks; use the heuristic");
    const auto cu = scaled_cells(ur);
    const auto cw = scaled_cells(wr);
    const Candidate best = pair_scan(&cu, &cw, k, ur.space()->size(), metric, ur.space(), exec);
    CutWitness wit;
    wit.rows = mask_to_list(best.rows);
    wit.cols = mask_to_list(best.cols);
    wit.value = witness_objective_dist(ur, wr, metric, wit);
    return wit;
}

CutWitness cut_norm_heuristic_f(const FKernel& kernel, int restarts, std::uint64_t seed) {
    const int k = kernel.blocks;
    const int t_count = static_cast<int>(kernel.mats.size());
    if (t_count == 0 || restarts <= 0) return CutWitness{{}, {}, {}, 0.0};

    const CounterRng root(seed);
    std::vector<ListCandidate> results(restarts);

#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < restarts; ++r) {
        CounterRng rng = root.substream(static_cast<std::uint64_t>(r));
        std::vector<std::uint8_t> rows(k), cols(k);
        for (int i = 0; i < k; ++i) rows[i] = rng.next_u64() & 1;
        for (int j = 0; j < k; ++j) cols[j] = rng.next_u64() & 1;

        // Running per-matrix rectangle sums plus row/column margins give
        // O(T) flip deltas and O(T k) flip commits.
        std::vector<double> s(t_count, 0.0);
        std::vector<double> row_margin(static_cast<std::size_t>(t_count) * k, 0.0);
        std::vector<double> col_margin(static_cast<std::size_t>(t_count) * k, 0.0);
        for (int t = 0; t < t_count; ++t) {
            const auto& m = kernel.mats[t];
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    const double v = m[static_cast<std::size_t>(i) * k + j];
                    if (cols[j]) row_margin[static_cast<std::size_t>(t) * k + i] += v;
                    if (rows[i]) col_margin[static_cast<std::size_t>(t) * k + j] += v;
                    if (rows[i] && cols[j]) s[t] += v;
                }
        }
        auto value_of = [&](const std::vector<double>& sums) {
            double v = 0.0;
            for (int t = 0; t < t_count; ++t) v += kernel.weights[t] * std::abs(sums[t]);
            return v;
        };
        double value = value_of(s);
        std::vector<double> trial(t_count);

        for (int pass = 0; pass < 200; ++pass) {
            bool improved = false;
            for (int i = 0; i < k; ++i) {
                const double sign = rows[i] ? -1.0 : 1.0;
                for (int t = 0; t < t_count; ++t)
                    trial[t] = s[t] + sign * row_margin[static_cast<std::size_t>(t) * k + i];
                const double tv = value_of(trial);
                if (tv > value + 1e-15) {
                    rows[i] ^= 1;
                    s = trial;
                    for (int t = 0; t < t_count; ++t) {
                        const auto& m = kernel.mats[t];
                        for (int j = 0; j < k; ++j)
                            col_margin[static_cast<std::size_t>(t) * k + j] +=
                                sign * m[static_cast<std::size_t>(i) * k + j];
                    }
                    value = tv;
                    improved = true;
                }
            }
            for (int j = 0; j < k; ++j) {
                const double sign = cols[j] ? -1.0 : 1.0;
                for (int t = 0; t < t_count; ++t)
                    trial[t] = s[t] + sign * col_margin[static_cast<std::size_t>(t) * k + j];
                const double tv = value_of(trial);
                if (tv > value + 1e-15) {
                    cols[j] ^= 1;
                    s = trial;
                    for (int t = 0; t < t_count; ++t) {
                        const auto& m = kernel.mats[t];
                        for (int i = 0; i < k; ++i)
                            row_margin[static_cast<std::size_t>(t) * k + i] +=
                                sign * m[static_cast<std::size_t>(i) * k + j];
                    }
                    value = tv;
                    improved = true;
                }
            }
            if (!improved) break;
        }
        ListCandidate cand;
        cand.rows = flags_to_list(rows);
        cand.cols = flags_to_list(cols);
        cand.value = f_rectangle_value(kernel, cand.rows, cand.cols);
        results[r] = std::move(cand);
    }

    ListCandidate best;  // the empty rectangle is always admissible
    best.value = 0.0;
    for (const auto& cand : results)
        if (cand.beats(best)) best = cand;

    CutWitness wit;
    wit.rows = best.rows;
    wit.cols = best.cols;
    wit.signs = f_rectangle_signs(kernel, wit.rows, wit.cols);
    wit.value = f_rectangle_value(kernel, wit.rows, wit.cols);
    return wit;
}

CutWitness cut_norm_heuristic(const StepGraphon& d, const MetricChoice& metric, int restarts,
                              std::uint64_t seed) {
    if (!metric.is_norm()) throw InputError("cut_norm needs a norm metric, not Prohorov");
    if (metric.kind == MetricChoice::Kind::FNorm) {
        if (!metric.family) throw InputError("fnorm metric needs a test family");
        return cut_norm_heuristic_f(FKernel::from_graphon(d, *metric.family), restarts, seed);
    }

    const int k = d.block_count();
    const int m = d.space()->size();
    const auto cells = scaled_cells(d);
    const CounterRng root(seed);
    std::vector<ListCandidate> results(std::max(restarts, 0));

#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < restarts; ++r) {
        CounterRng rng = root.substream(static_cast<std::uint64_t>(r));
        std::vector<std::uint8_t> rows(k), cols(k);
        for (int i = 0; i < k; ++i) rows[i] = rng.next_u64() & 1;
        for (int j = 0; j < k; ++j) cols[j] = rng.next_u64() & 1;

        auto accumulate = [&](const std::vector<std::uint8_t>& rr,
                              const std::vector<std::uint8_t>& cc) {
            std::vector<double> acc(m, 0.0);
            for (int i = 0; i < k; ++i) {
                if (!rr[i]) continue;
                for (int j = 0; j < k; ++j)
                    if (cc[j]) {
                        const auto& v = cells[static_cast<std::size_t>(i) * k + j];
                        for (int z = 0; z < m; ++z) acc[z] += v[z];
                    }
            }
            return acc;
        };
        double value = eval_metric_vec(metric, d.space(), accumulate(rows, cols));
        for (int pass = 0; pass < 100; ++pass) {
            bool improved = false;
            for (int x = 0; x < 2 * k; ++x) {
                const bool is_row = x < k;
                auto tr = rows;
                auto tc = cols;
                if (is_row)
                    tr[x] ^= 1;
                else
                    tc[x - k] ^= 1;
                const double tv = eval_metric_vec(metric, d.space(), accumulate(tr, tc));
                if (tv > value + 1e-15) {
                    rows = tr;
                    cols = tc;
                    value = tv;
                    improved = true;
                }
            }
            if (!improved) break;
        }
        ListCandidate cand;
        cand.rows = flags_to_list(rows);
        cand.cols = flags_to_list(cols);
        cand.value = value;
        results[r] = std::move(cand);
    }

    ListCandidate best;
    best.value = 0.0;
    for (const auto& cand : results)
        if (cand.beats(best)) best = cand;
    CutWitness wit;
    wit.rows = best.rows;
    wit.cols = best.cols;
    wit.value = witness_objective(d, metric, wit);
    return wit;
}

double witness_objective(const StepGraphon& d, const MetricChoice& metric, const CutWitness& wit) {
    const int m = d.space()->size();
    const auto lens = d.lengths_double();
    std::vector<double> acc(m, 0.0);
    for (int i : wit.rows)
        for (int j : wit.cols) {
            const auto& mass = d.cell(i, j).mass;
            const double w = lens[i] * lens[j];
            for (int z = 0; z < m; ++z) acc[z] += w * mass[z];
        }
    return eval_norm(metric, SignedMeasure(d.space(), std::move(acc)));
}

double witness_objective_dist(const StepGraphon& u, const StepGraphon& w,
                              const MetricChoice& metric, const CutWitness& wit) {
    auto [ur, wr] = refine_common(u, w);
    const int m = ur.space()->size();
    const auto lens = ur.lengths_double();
    std::vector<double> acc_u(m, 0.0), acc_w(m, 0.0);
    for (int i : wit.rows)
        for (int j : wit.cols) {
            const double s = lens[i] * lens[j];
            const auto& mu = ur.cell(i, j).mass;
            const auto& mw = wr.cell(i, j).mass;
            for (int z = 0; z < m; ++z) {
                acc_u[z] += s * mu[z];
                acc_w[z] += s * mw[z];
            }
        }
    return eval_metric_pair(metric, ur.space(), acc_u, acc_w);
}

double f_inner_product(const StepGraphon& u, const StepGraphon& w, const TestFamily& fam) {
    auto [ur, wr] = refine_common(u, w);
    const int k = ur.block_count();
    const auto lens = ur.lengths_double();
    double total = 0.0;
    for (int n = 0; n < fam.size(); ++n) {
        const auto& f = fam.function(n);
        double inner = 0.0;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                inner += lens[i] * lens[j] * ur.cell(i, j).integrate(f) * wr.cell(i, j).integrate(f);
        total += TestFamily::weight(n) * inner;
    }
    return total;
}

double f_l2_norm(const StepGraphon& w, const TestFamily& fam) {
    return std::sqrt(std::max(0.0, f_inner_product(w, w, fam)));
}

}  // namespace pgraphon
