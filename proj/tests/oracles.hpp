// Independent oracles used by the tests: every routine here evaluates a
// definition directly (enumeration, bisection, closed forms) and shares
// no code path with the library implementations it checks.
#ifndef PGRAPHON_TESTS_ORACLES_HPP
#define PGRAPHON_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "pgraphon/measure_metrics.hpp"
#include "pgraphon/step_graphon.hpp"

namespace oracles {

// Direct check of the Prohorov definition at a fixed eps: for every
// subset A, mu(A) <= nu(A^eps) + eps and symmetrically, with the open
// enlargement A^eps = {x : d(x, A) < eps}.
inline bool prohorov_feasible(const pgraphon::SignedMeasure& mu, const pgraphon::SignedMeasure& nu,
                              double eps) {
    const auto& space = *mu.space;
    const int m = space.size();
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << m); ++a) {
        double mu_a = 0.0, nu_a = 0.0, mu_enl = 0.0, nu_enl = 0.0;
        for (int x = 0; x < m; ++x) {
            const bool in_a = a >> x & 1;
            if (in_a) {
                mu_a += mu.mass[x];
                nu_a += nu.mass[x];
            }
            double dist_to_a = 1e300;
            for (int y = 0; y < m; ++y)
                if (a >> y & 1) dist_to_a = std::min(dist_to_a, space.dist(x, y));
            if (dist_to_a < eps) {
                mu_enl += mu.mass[x];
                nu_enl += nu.mass[x];
            }
        }
        if (mu_a > nu_enl + eps || nu_a > mu_enl + eps) return false;
    }
    return true;
}

// Bisection on the monotone feasibility predicate; resolves the infimum
// to `tol`.
inline double prohorov_bruteforce(const pgraphon::SignedMeasure& mu,
                                  const pgraphon::SignedMeasure& nu, double tol = 1e-8) {
    double lo = 0.0;
    double hi = 2.0;
    for (double v : mu.mass) hi += std::abs(v);
    for (double v : nu.mass) hi += std::abs(v);
    for (const auto& row : mu.space->metric())
        for (double d : row) hi = std::max(hi, d + 1.0);
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (prohorov_feasible(mu, nu, mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

// Closed forms on a two-point space at distance d.
inline double kr_two_point(double mass, double d) { return mass * std::min(d, 2.0); }
inline double fm_two_point(double mass, double d) { return mass * 2.0 * d / (d + 2.0); }

// Cut norm by literal double-subset enumeration with a fresh metric
// evaluation per rectangle (no Gray codes, no sign patterns).
inline double cut_norm_naive(const pgraphon::StepGraphon& d, const pgraphon::MetricChoice& metric) {
    const int k = d.block_count();
    const int m = d.space()->size();
    const auto lens = d.lengths_double();
    double best = 0.0;
    for (std::uint32_t rs = 0; rs < (std::uint32_t{1} << k); ++rs)
        for (std::uint32_t cs = 0; cs < (std::uint32_t{1} << k); ++cs) {
            std::vector<double> acc(m, 0.0);
            for (int i = 0; i < k; ++i) {
                if (!(rs >> i & 1)) continue;
                for (int j = 0; j < k; ++j) {
                    if (!(cs >> j & 1)) continue;
                    for (int z = 0; z < m; ++z)
                        acc[z] += lens[i] * lens[j] * d.cell(i, j).mass[z];
                }
            }
            best = std::max(best, pgraphon::eval_norm(metric, pgraphon::SignedMeasure(d.space(), acc)));
        }
    return best;
}

// Cut distance by the same literal enumeration.
inline double cut_dist_naive(const pgraphon::StepGraphon& u, const pgraphon::StepGraphon& w,
                             const pgraphon::MetricChoice& metric) {
    auto [ur, wr] = pgraphon::refine_common(u, w);
    const int k = ur.block_count();
    const int m = ur.space()->size();
    const auto lens = ur.lengths_double();
    double best = 0.0;
    for (std::uint32_t rs = 0; rs < (std::uint32_t{1} << k); ++rs)
        for (std::uint32_t cs = 0; cs < (std::uint32_t{1} << k); ++cs) {
            std::vector<double> au(m, 0.0), aw(m, 0.0);
            for (int i = 0; i < k; ++i) {
                if (!(rs >> i & 1)) continue;
                for (int j = 0; j < k; ++j) {
                    if (!(cs >> j & 1)) continue;
                    for (int z = 0; z < m; ++z) {
                        au[z] += lens[i] * lens[j] * ur.cell(i, j).mass[z];
                        aw[z] += lens[i] * lens[j] * wr.cell(i, j).mass[z];
                    }
                }
            }
            for (int z = 0; z < m; ++z) {
                if (au[z] < 0.0 && au[z] > -1e-12) au[z] = 0.0;
                if (aw[z] < 0.0 && aw[z] > -1e-12) aw[z] = 0.0;
            }
            best = std::max(best, pgraphon::eval_dist(metric, pgraphon::SignedMeasure(ur.space(), au),
                                                      pgraphon::SignedMeasure(ur.space(), aw)));
        }
    return best;
}

// Upper-tail chi-square critical values at significance 0.01 for the
// degrees of freedom the sampling tests use.
inline double chi2_crit_001(int df) {
    switch (df) {
        case 1: return 6.634896601021214;
        case 2: return 9.21034037197618;
        case 3: return 11.344866730144373;
        case 15: return 30.57791416689249;
        case 63: return 92.01023686285525;
        default: return 0.0;
    }
}

}  // namespace oracles

#endif
