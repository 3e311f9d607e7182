#include "pgraphon/measure_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>

#include "pgraphon/errors.hpp"
#include "pgraphon/simplex_lp.hpp"

namespace pgraphon {

namespace {

// Subset-sum table over all bitmasks: out[A] = sum of mass[i] for i in A.
std::vector<double> subset_sums(const std::vector<double>& mass) {
    const std::size_t n = std::size_t{1} << mass.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t a = 1; a < n; ++a) {
        const int low = __builtin_ctzll(a);
        out[a] = out[a & (a - 1)] + mass[low];
    }
    return out;
}

}  // namespace

double prohorov(const SignedMeasure& mu, const SignedMeasure& nu) {
    require_same_space(mu, nu);
    if (!mu.is_nonnegative() || !nu.is_nonnegative())
        throw InputError("prohorov distance needs nonnegative measures");
    const WeightSpace& space = *mu.space;
    const int m = space.size();
    if (m > kProhorovMaxPoints)
        throw CapabilityError("prohorov: exact subset scan supports at most " +
                              std::to_string(kProhorovMaxPoints) + " points");

    const std::size_t nsub = std::size_t{1} << m;
    const std::vector<double> mu_sum = subset_sums(mu.mass);
    const std::vector<double> nu_sum = subset_sums(nu.mass);

    // Radii at which the open enlargement A^eps changes; for
    // eps in (t_j, t_{j+1}], A^eps is the closed-ball hull of radius t_j.
    std::vector<double> levels = {0.0};
    for (double d : space.distance_levels()) levels.push_back(d);

    std::vector<std::uint32_t> ball(m);
    std::vector<std::uint32_t> reach(nsub);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < levels.size(); ++j) {
        const double radius = levels[j];
        for (int i = 0; i < m; ++i) {
            std::uint32_t mask = 0;
            for (int x = 0; x < m; ++x)
                if (space.dist(x, i) <= radius) mask |= std::uint32_t{1} << x;
            ball[i] = mask;
        }
        reach[0] = 0;
        double worst = 0.0;
        for (std::size_t a = 1; a < nsub; ++a) {
            reach[a] = reach[a & (a - 1)] | ball[__builtin_ctzll(a)];
            const std::size_t r = reach[a];
            worst = std::max(worst, std::max(mu_sum[a] - nu_sum[r], nu_sum[a] - mu_sum[r]));
        }
        const double upper =
            j + 1 < levels.size() ? levels[j + 1] : std::numeric_limits<double>::infinity();
        if (worst <= upper) best = std::min(best, std::max(levels[j], worst));
    }
    return best;
}

double kr_norm(const SignedMeasure& mu) {
    // Shift f to g = f + 1 in [0, 2]:  max mu(g) - mu(Z)  over
    // g_i <= 2 and g_i - g_j <= d(i,j).
    const WeightSpace& space = *mu.space;
    const int m = space.size();
    std::vector<double> c = mu.mass;
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (int i = 0; i < m; ++i) {
        std::vector<double> row(m, 0.0);
        row[i] = 1.0;
        a.push_back(std::move(row));
        b.push_back(2.0);
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            std::vector<double> row(m, 0.0);
            row[i] = 1.0;
            row[j] = -1.0;
            a.push_back(std::move(row));
            b.push_back(space.dist(i, j));
        }
    return simplex_maximize(c, a, b).value - mu.sum();
}

double fm_norm(const SignedMeasure& mu) {
    // Variables g_i = f_i + 1 and the Lipschitz bound l:
    //   g_i + l <= 2,  l - g_i <= 0,  g_i - g_j - l d(i,j) <= 0.
    const WeightSpace& space = *mu.space;
    const int m = space.size();
    std::vector<double> c = mu.mass;
    c.push_back(0.0);  // l does not enter the objective
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (int i = 0; i < m; ++i) {
        std::vector<double> row(m + 1, 0.0);
        row[i] = 1.0;
        row[m] = 1.0;
        a.push_back(std::move(row));
        b.push_back(2.0);
    }
    for (int i = 0; i < m; ++i) {
        std::vector<double> row(m + 1, 0.0);
        row[i] = -1.0;
        row[m] = 1.0;
        a.push_back(std::move(row));
        b.push_back(0.0);
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            std::vector<double> row(m + 1, 0.0);
            row[i] = 1.0;
            row[j] = -1.0;
            row[m] = -space.dist(i, j);
            a.push_back(std::move(row));
            b.push_back(0.0);
        }
    return simplex_maximize(c, a, b).value - mu.sum();
}

double f_norm(const SignedMeasure& mu, const TestFamily& fam) {
    if (fam.space() != mu.space)
        require_same_space(mu, SignedMeasure(fam.space(), std::vector<double>(fam.space()->size(), 0.0)));
    double s = 0.0;
    for (int k = 0; k < fam.size(); ++k)
        s += TestFamily::weight(k) * std::abs(mu.integrate(fam.function(k)));
    return s;
}

std::string MetricChoice::name() const {
    switch (kind) {
        case Kind::Prohorov: return "prohorov";
        case Kind::KR: return "kr";
        case Kind::FM: return "fm";
        case Kind::FNorm: return "fnorm";
    }
    return "?";
}

double eval_norm(const MetricChoice& metric, const SignedMeasure& mu) {
    switch (metric.kind) {
        case MetricChoice::Kind::KR: return kr_norm(mu);
        case MetricChoice::Kind::FM: return fm_norm(mu);
        case MetricChoice::Kind::FNorm:
            if (!metric.family) throw InputError("fnorm metric needs a test family");
            return f_norm(mu, *metric.family);
        case MetricChoice::Kind::Prohorov:
            throw InputError("the Prohorov distance is not a norm");
    }
    throw InputError("unknown metric");
}

double eval_dist(const MetricChoice& metric, const SignedMeasure& mu, const SignedMeasure& nu) {
    if (metric.kind == MetricChoice::Kind::Prohorov) return prohorov(mu, nu);
    return eval_norm(metric, mu - nu);
}

}  // namespace pgraphon
