#include "pgraphon/delta_cut.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>

#include "pgraphon/errors.hpp"
#include "pgraphon/rng.hpp"

namespace pgraphon {

namespace {

std::int64_t factorial(std::int64_t n) {
    std::int64_t f = 1;
    for (std::int64_t i = 2; i <= n; ++i) f *= i;
    return f;
}

// Lehmer-code unranking: rank in [0, L!) -> permutation of 0..L-1.
std::vector<int> perm_unrank(int l, std::int64_t rank) {
    std::vector<int> pool(l);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> perm;
    perm.reserve(l);
    std::int64_t f = factorial(l);
    for (int i = l; i >= 1; --i) {
        f /= i;
        const auto idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        perm.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return perm;
}

// Per-function matrices of an equipartitioned pair, entries scaled by
// 1/L^2; function indices where both kernels are the same constant are
// dropped (their difference vanishes under every relabeling).
struct PairMatrices {
    int blocks = 0;
    std::vector<double> weights;
    std::vector<int> fn_index;
    std::vector<std::vector<double>> mu;  // one k*k matrix per retained function
    std::vector<std::vector<double>> mw;
};

PairMatrices pair_matrices(const StepGraphon& u, const StepGraphon& w, const TestFamily& fam) {
    const int k = u.block_count();
    const double scale = 1.0 / (static_cast<double>(k) * k);
    PairMatrices out;
    out.blocks = k;
    for (int n = 0; n < fam.size(); ++n) {
        std::vector<double> mu(static_cast<std::size_t>(k) * k), mw(mu.size());
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                mu[static_cast<std::size_t>(i) * k + j] =
                    scale * u.cell(i, j).integrate(fam.function(n));
                mw[static_cast<std::size_t>(i) * k + j] =
                    scale * w.cell(i, j).integrate(fam.function(n));
            }
        const double c = mu[0];
        bool constant = true;
        for (double v : mu) constant &= v == c;
        for (double v : mw) constant &= v == c;
        if (constant) continue;
        out.weights.push_back(TestFamily::weight(n));
        out.fn_index.push_back(n);
        out.mu.push_back(std::move(mu));
        out.mw.push_back(std::move(mw));
    }
    return out;
}

FKernel difference_kernel(const PairMatrices& pm, const std::vector<int>& sigma) {
    const int k = pm.blocks;
    FKernel d;
    d.blocks = k;
    d.weights = pm.weights;
    d.fn_index = pm.fn_index;
    for (std::size_t t = 0; t < pm.mu.size(); ++t) {
        std::vector<double> mat(static_cast<std::size_t>(k) * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                mat[static_cast<std::size_t>(i) * k + j] =
                    pm.mu[t][static_cast<std::size_t>(i) * k + j] -
                    pm.mw[t][static_cast<std::size_t>(sigma[i]) * k + sigma[j]];
        d.mats.push_back(std::move(mat));
    }
    return d;
}

std::pair<StepGraphon, StepGraphon> equalize(const StepGraphon& u, const StepGraphon& w,
                                             std::int64_t granularity) {
    return {equipartition(u, granularity), equipartition(w, granularity)};
}

}  // namespace

DeltaResult delta_cut_brute(const StepGraphon& u, const StepGraphon& w, const MetricChoice& metric,
                            std::int64_t granularity, Exec exec) {
    if (granularity > kDeltaBruteMaxBlocks)
        throw CapabilityError("delta brute: permutation scan supports at most " +
                              std::to_string(kDeltaBruteMaxBlocks) +
                              " blocks; use annealing");
    auto [ue, we] = equalize(u, w, granularity);
    const int l = ue.block_count();
    const std::int64_t total = factorial(l);

    const bool fnorm = metric.kind == MetricChoice::Kind::FNorm;
    PairMatrices pm;
    if (fnorm) {
        if (!metric.family) throw InputError("fnorm metric needs a test family");
        pm = pair_matrices(ue, we, *metric.family);
    }

    std::vector<double> values(total);
    auto eval_rank = [&](std::int64_t rank) {
        const std::vector<int> sigma = perm_unrank(l, rank);
        if (fnorm) {
            const FKernel d = difference_kernel(pm, sigma);
            return cut_norm_exact_f(d, Exec::Serial).value;
        }
        return cut_dist_exact(ue, relabel(we, sigma), metric, Exec::Serial).value;
    };

    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t rank = 0; rank < total; ++rank) values[rank] = eval_rank(rank);
    } else {
        for (std::int64_t rank = 0; rank < total; ++rank) values[rank] = eval_rank(rank);
    }

    std::int64_t best_rank = 0;
    for (std::int64_t rank = 1; rank < total; ++rank)
        if (values[rank] < values[best_rank]) best_rank = rank;

    DeltaResult out;
    out.value = values[best_rank];
    out.permutation = perm_unrank(l, best_rank);
    out.inner_exact = true;
    return out;
}

DeltaResult delta_cut_anneal(const StepGraphon& u, const StepGraphon& w,
                             const MetricChoice& metric, std::int64_t granularity,
                             std::uint64_t seed, const AnnealParams& params) {
    if (metric.kind != MetricChoice::Kind::FNorm)
        throw CapabilityError(
            "delta anneal currently supports the F-norm metric; use brute mode for " +
            metric.name());
    if (!metric.family) throw InputError("fnorm metric needs a test family");
    auto [ue, we] = equalize(u, w, granularity);
    const int l = ue.block_count();
    const PairMatrices pm = pair_matrices(ue, we, *metric.family);
    const int t_count = static_cast<int>(pm.mu.size());

    std::vector<int> sigma(l);
    std::iota(sigma.begin(), sigma.end(), 0);
    if (t_count == 0) return DeltaResult{0.0, sigma, true};

    // Small granularities afford the exact scan as the annealing
    // objective itself; no witness bookkeeping is needed there.
    const bool exact_objective = l <= 10 && fkernel_exact_feasible(difference_kernel(pm, sigma));
    if (exact_objective) {
        auto objective = [&](const std::vector<int>& perm) {
            return cut_norm_exact_f(difference_kernel(pm, perm), Exec::Serial).value;
        };
        double value = objective(sigma);
        const double t0 = std::max(value, 1e-6);
        std::vector<int> best_sigma = sigma;
        double best_value = value;
        CounterRng move_rng = CounterRng(seed).substream(0x6d6f766573ULL);
        for (int epoch = 0; epoch < params.epochs; ++epoch) {
            const double temp = t0 * std::pow(params.cooling, epoch);
            for (int step = 0; step < l; ++step) {
                const int p = static_cast<int>(move_rng.next_below(static_cast<std::uint64_t>(l)));
                int q = static_cast<int>(move_rng.next_below(static_cast<std::uint64_t>(l - 1)));
                if (q >= p) ++q;
                std::swap(sigma[p], sigma[q]);
                const double new_value = objective(sigma);
                const double diff = new_value - value;
                bool accept = diff < 0.0;
                if (!accept && temp > 0.0)
                    accept = move_rng.next_double() < std::exp(-diff / temp);
                if (!accept) {
                    std::swap(sigma[p], sigma[q]);
                    continue;
                }
                value = new_value;
                if (value < best_value) {
                    best_value = value;
                    best_sigma = sigma;
                }
            }
        }
        return DeltaResult{best_value, best_sigma, true};
    }

    const int k = l;
    auto d_at = [&](int t, int i, int j) {
        return pm.mu[t][static_cast<std::size_t>(i) * k + j] -
               pm.mw[t][static_cast<std::size_t>(sigma[i]) * k + sigma[j]];
    };

    // Witness rectangle plus per-function rectangle sums and margins,
    // maintained through both witness flips and sigma swaps.
    std::vector<std::uint8_t> rows(k, 1), cols(k, 1);
    std::vector<double> s(t_count, 0.0);
    std::vector<double> row_margin(static_cast<std::size_t>(t_count) * k, 0.0);
    std::vector<double> col_margin(static_cast<std::size_t>(t_count) * k, 0.0);

    auto rebuild = [&] {
        std::fill(s.begin(), s.end(), 0.0);
        std::fill(row_margin.begin(), row_margin.end(), 0.0);
        std::fill(col_margin.begin(), col_margin.end(), 0.0);
        for (int t = 0; t < t_count; ++t)
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    const double v = d_at(t, i, j);
                    if (cols[j]) row_margin[static_cast<std::size_t>(t) * k + i] += v;
                    if (rows[i]) col_margin[static_cast<std::size_t>(t) * k + j] += v;
                    if (rows[i] && cols[j]) s[t] += v;
                }
    };
    auto value_of = [&](const std::vector<double>& sums) {
        double v = 0.0;
        for (int t = 0; t < t_count; ++t) v += pm.weights[t] * std::abs(sums[t]);
        return v;
    };

    // Greedy best-response of the witness for the current sigma.
    std::vector<double> trial(t_count);
    auto improve_witness = [&](int max_passes) {
        for (int pass = 0; pass < max_passes; ++pass) {
            bool improved = false;
            for (int i = 0; i < k; ++i) {
                const double sign = rows[i] ? -1.0 : 1.0;
                for (int t = 0; t < t_count; ++t)
                    trial[t] = s[t] + sign * row_margin[static_cast<std::size_t>(t) * k + i];
                if (value_of(trial) > value_of(s) + 1e-15) {
                    rows[i] ^= 1;
                    s = trial;
                    for (int t = 0; t < t_count; ++t)
                        for (int j = 0; j < k; ++j)
                            col_margin[static_cast<std::size_t>(t) * k + j] += sign * d_at(t, i, j);
                    improved = true;
                }
            }
            for (int j = 0; j < k; ++j) {
                const double sign = cols[j] ? -1.0 : 1.0;
                for (int t = 0; t < t_count; ++t)
                    trial[t] = s[t] + sign * col_margin[static_cast<std::size_t>(t) * k + j];
                if (value_of(trial) > value_of(s) + 1e-15) {
                    cols[j] ^= 1;
                    s = trial;
                    for (int t = 0; t < t_count; ++t)
                        for (int i = 0; i < k; ++i)
                            row_margin[static_cast<std::size_t>(t) * k + i] += sign * d_at(t, i, j);
                    improved = true;
                }
            }
            if (!improved) break;
        }
    };

    rebuild();
    improve_witness(50);
    double value = value_of(s);
    const double t0 = std::max(value, 1e-6);

    // Candidate permutations are ranked by an evaluator that does not
    // depend on the wandering witness: an exact scan at small
    // granularities, a fixed-seed heuristic beyond.
    auto checkpoint_value = [&](const std::vector<int>& perm) {
        const FKernel fk = difference_kernel(pm, perm);
        if (l <= 12 && fkernel_exact_feasible(fk)) return cut_norm_exact_f(fk, Exec::Serial).value;
        return cut_norm_heuristic_f(fk, 2, derive_seed(seed, 0x636870ULL)).value;
    };
    std::vector<int> best_sigma = sigma;
    double best_value = checkpoint_value(sigma);

    CounterRng move_rng = CounterRng(seed).substream(0x6d6f766573ULL);
    std::vector<double> delta(t_count);
    long moves = 0;

    for (int epoch = 0; epoch < params.epochs; ++epoch) {
        const double temp = t0 * std::pow(params.cooling, epoch);
        for (int step = 0; step < l; ++step) {
            const int p = static_cast<int>(move_rng.next_below(static_cast<std::uint64_t>(l)));
            int q = static_cast<int>(move_rng.next_below(static_cast<std::uint64_t>(l - 1)));
            if (q >= p) ++q;

            // Rectangle-sum delta of swapping sigma(p) <-> sigma(q), for
            // the witness held fixed.
            std::fill(delta.begin(), delta.end(), 0.0);
            for (int t = 0; t < t_count; ++t) {
                const auto& mw = pm.mw[t];
                double dd = 0.0;
                for (int j = 0; j < k; ++j) {
                    if (!cols[j]) continue;
                    const int sj = (j == p) ? sigma[q] : (j == q) ? sigma[p] : sigma[j];
                    if (rows[p])
                        dd -= mw[static_cast<std::size_t>(sigma[q]) * k + sj] -
                              mw[static_cast<std::size_t>(sigma[p]) * k + sigma[j]];
                    if (rows[q])
                        dd -= mw[static_cast<std::size_t>(sigma[p]) * k + sj] -
                              mw[static_cast<std::size_t>(sigma[q]) * k + sigma[j]];
                }
                for (int i = 0; i < k; ++i) {
                    if (!rows[i] || i == p || i == q) continue;
                    if (cols[p])
                        dd -= mw[static_cast<std::size_t>(sigma[i]) * k + sigma[q]] -
                              mw[static_cast<std::size_t>(sigma[i]) * k + sigma[p]];
                    if (cols[q])
                        dd -= mw[static_cast<std::size_t>(sigma[i]) * k + sigma[p]] -
                              mw[static_cast<std::size_t>(sigma[i]) * k + sigma[q]];
                }
                delta[t] = dd;
            }
            for (int t = 0; t < t_count; ++t) trial[t] = s[t] + delta[t];
            const double new_value = value_of(trial);
            const double diff = new_value - value;
            bool accept = diff < 0.0;
            if (!accept && temp > 0.0) accept = move_rng.next_double() < std::exp(-diff / temp);
            ++moves;
            const bool refresh_due = moves % params.witness_refresh == 0;
            if (!accept) {
                if (refresh_due) {
                    rebuild();
                    improve_witness(50);
                    value = value_of(s);
                    const double cv = checkpoint_value(sigma);
                    if (cv < best_value) {
                        best_value = cv;
                        best_sigma = sigma;
                    }
                }
                continue;
            }

            // Commit: margins change only through rows/cols p and q.
            const int sp = sigma[p], sq = sigma[q];
            for (int t = 0; t < t_count; ++t) {
                const auto& mw = pm.mw[t];
                for (int i = 0; i < k; ++i) {
                    if (i == p || i == q) continue;
                    double d = 0.0;
                    if (cols[p])
                        d -= mw[static_cast<std::size_t>(sigma[i]) * k + sq] -
                             mw[static_cast<std::size_t>(sigma[i]) * k + sp];
                    if (cols[q])
                        d -= mw[static_cast<std::size_t>(sigma[i]) * k + sp] -
                             mw[static_cast<std::size_t>(sigma[i]) * k + sq];
                    row_margin[static_cast<std::size_t>(t) * k + i] += d;
                }
                for (int j = 0; j < k; ++j) {
                    if (j == p || j == q) continue;
                    double d = 0.0;
                    if (rows[p])
                        d -= mw[static_cast<std::size_t>(sq) * k + sigma[j]] -
                             mw[static_cast<std::size_t>(sp) * k + sigma[j]];
                    if (rows[q])
                        d -= mw[static_cast<std::size_t>(sp) * k + sigma[j]] -
                             mw[static_cast<std::size_t>(sq) * k + sigma[j]];
                    col_margin[static_cast<std::size_t>(t) * k + j] += d;
                }
            }
            sigma[p] = sq;
            sigma[q] = sp;
            for (int t = 0; t < t_count; ++t) {
                double rp = 0.0, rq = 0.0, cp = 0.0, cq = 0.0;
                for (int j = 0; j < k; ++j)
                    if (cols[j]) {
                        rp += d_at(t, p, j);
                        rq += d_at(t, q, j);
                    }
                for (int i = 0; i < k; ++i)
                    if (rows[i]) {
                        cp += d_at(t, i, p);
                        cq += d_at(t, i, q);
                    }
                row_margin[static_cast<std::size_t>(t) * k + p] = rp;
                row_margin[static_cast<std::size_t>(t) * k + q] = rq;
                col_margin[static_cast<std::size_t>(t) * k + p] = cp;
                col_margin[static_cast<std::size_t>(t) * k + q] = cq;
                s[t] = trial[t];
            }
            value = new_value;
            // Chase the witness a little after every accepted swap so the
            // running objective does not go stale; full refreshes below
            // re-sync any incremental drift.
            improve_witness(2);
            value = value_of(s);

            if (refresh_due) {
                rebuild();
                improve_witness(50);
                value = value_of(s);
                const double cv = checkpoint_value(sigma);
                if (cv < best_value) {
                    best_value = cv;
                    best_sigma = sigma;
                }
            }
        }
    }

    // Thorough final evaluation; the end-of-chain permutation competes
    // with the best checkpoint.
    auto evaluate = [&](const std::vector<int>& perm, bool* exact) {
        const FKernel fk = difference_kernel(pm, perm);
        if (fkernel_exact_feasible(fk)) {
            *exact = true;
            return cut_norm_exact_f(fk, Exec::Parallel).value;
        }
        *exact = false;
        return cut_norm_heuristic_f(fk, params.final_restarts, derive_seed(seed, 0x66696eULL))
            .value;
    };
    DeltaResult out;
    bool exact_best = false, exact_last = false;
    const double at_best = evaluate(best_sigma, &exact_best);
    const double at_last = evaluate(sigma, &exact_last);
    if (at_last < at_best) {
        out.value = at_last;
        out.permutation = sigma;
        out.inner_exact = exact_last;
    } else {
        out.value = at_best;
        out.permutation = best_sigma;
        out.inner_exact = exact_best;
    }
    return out;
}

}  // namespace pgraphon
