#include "pgraphon/hom_density.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pgraphon/errors.hpp"
#include "pgraphon/rng.hpp"

namespace pgraphon {

namespace {

// k^v with saturation, for budget checks.
std::int64_t checked_pow(std::int64_t base, int exp) {
    std::int64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > kDensityBudget / std::max<std::int64_t>(base, 1)) return kDensityBudget + 1;
        out *= base;
    }
    return out;
}

void check_edges(const DecoratedGraph& f) {
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : f.edges) {
        if (a < 0 || a >= f.v || b < 0 || b >= f.v) throw InputError("edge endpoint out of range");
        if (a == b) throw InputError("decorated graphs admit no self-loops");
        if (!seen.insert({a, b}).second) throw InputError("duplicate edge");
    }
}

// Sum over all assignments phi: V -> [k] of weight(phi) * prod_e table_e,
// split by the first vertex's value with partials combined in index
// order, so the result is independent of the thread schedule.
double assignment_sum(int v, int k, const std::vector<double>& node_weight,
                      const std::vector<std::pair<int, int>>& edges,
                      const std::vector<std::vector<double>>& tables, Exec exec) {
    const int e_count = static_cast<int>(edges.size());
    std::vector<double> partial(k, 0.0);

    auto run_first = [&](int first) {
        std::vector<int> phi(v, 0);
        phi[0] = first;
        double sum = 0.0;
        while (true) {
            double term = 1.0;
            for (int i = 0; i < v; ++i) term *= node_weight[phi[i]];
            for (int e = 0; e < e_count; ++e)
                term *= tables[e][static_cast<std::size_t>(phi[edges[e].first]) * k +
                                  phi[edges[e].second]];
            sum += term;
            int digit = v - 1;
            while (digit >= 1 && ++phi[digit] == k) phi[digit--] = 0;
            if (digit < 1) break;
        }
        partial[first] = sum;
    };

    if (exec == Exec::Parallel && v > 1) {
#pragma omp parallel for schedule(dynamic)
        for (int first = 0; first < k; ++first) run_first(first);
    } else {
        for (int first = 0; first < k; ++first) run_first(first);
    }
    double total = 0.0;
    for (int first = 0; first < k; ++first) total += partial[first];
    return total;
}

}  // namespace

DecoratedGraph::DecoratedGraph(int v_, std::vector<std::pair<int, int>> edges_,
                               std::vector<std::vector<double>> decorations_)
    : v(v_), edges(std::move(edges_)), decorations(std::move(decorations_)),
      family_indices(edges.size(), -1) {
    if (v < 1) throw InputError("decorated graph needs at least one vertex");
    if (decorations.size() != edges.size())
        throw InputError("one decoration per edge is required");
    check_edges(*this);
}

DecoratedGraph DecoratedGraph::from_family(int v, std::vector<std::pair<int, int>> edges,
                                           const std::vector<int>& indices,
                                           const TestFamily& fam) {
    if (indices.size() != edges.size()) throw InputError("one family index per edge is required");
    std::vector<std::vector<double>> decorations;
    for (int idx : indices) {
        if (idx < 0 || idx >= fam.size()) throw InputError("family index out of range");
        decorations.push_back(fam.function(idx));
    }
    DecoratedGraph out(v, std::move(edges), std::move(decorations));
    out.family_indices = indices;
    return out;
}

double hom_density_exact(const DecoratedGraph& f, const StepGraphon& w, Exec exec) {
    const int k = w.block_count();
    const int m = w.space()->size();
    for (const auto& dec : f.decorations)
        if (static_cast<int>(dec.size()) != m)
            throw InputError("decoration length does not match the space");
    if (checked_pow(k, f.v) * std::max<std::int64_t>(1, f.edges.size()) > kDensityBudget)
        throw CapabilityError("hom density: k^v enumeration over budget; use the Monte Carlo estimator");

    std::vector<std::vector<double>> tables;
    for (std::size_t e = 0; e < f.edges.size(); ++e) {
        std::vector<double> t(static_cast<std::size_t>(k) * k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                t[static_cast<std::size_t>(a) * k + b] = w.cell(a, b).integrate(f.decorations[e]);
        tables.push_back(std::move(t));
    }
    return assignment_sum(f.v, k, w.lengths_double(), f.edges, tables, exec);
}

McEstimate hom_density_mc(const DecoratedGraph& f, const StepGraphon& w, std::int64_t samples,
                          std::uint64_t seed) {
    if (samples < 1) throw InputError("sample count must be positive");
    const int k = w.block_count();
    const int m = w.space()->size();
    for (const auto& dec : f.decorations)
        if (static_cast<int>(dec.size()) != m)
            throw InputError("decoration length does not match the space");

    std::vector<std::vector<double>> tables;
    for (std::size_t e = 0; e < f.edges.size(); ++e) {
        std::vector<double> t(static_cast<std::size_t>(k) * k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                t[static_cast<std::size_t>(a) * k + b] = w.cell(a, b).integrate(f.decorations[e]);
        tables.push_back(std::move(t));
    }

    const CounterRng root(seed);
    double sum = 0.0, sum_sq = 0.0;
    std::vector<int> phi(f.v);
    for (std::int64_t s = 0; s < samples; ++s) {
        CounterRng rng = root.substream(static_cast<std::uint64_t>(s));
        for (int i = 0; i < f.v; ++i) phi[i] = categorical_rational(rng, w.lengths());
        double term = 1.0;
        for (std::size_t e = 0; e < f.edges.size(); ++e)
            term *= tables[e][static_cast<std::size_t>(phi[f.edges[e].first]) * k +
                              phi[f.edges[e].second]];
        sum += term;
        sum_sq += term * term;
    }
    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    double std_error = 0.0;
    if (samples > 1) {
        const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
        std_error = std::sqrt(var / n);
    }
    return McEstimate{mean, std_error};
}

double hom_density_graph(const DecoratedGraph& f, const SampledGraph& g, Exec exec) {
    const int n = g.n;
    const int m = g.space->size();
    for (const auto& dec : f.decorations)
        if (static_cast<int>(dec.size()) != m)
            throw InputError("decoration length does not match the space");
    if (checked_pow(n, f.v) * std::max<std::int64_t>(1, f.edges.size()) > kDensityBudget)
        throw CapabilityError("hom density: n^v enumeration over budget");

    std::vector<std::vector<double>> tables;
    for (std::size_t e = 0; e < f.edges.size(); ++e) {
        std::vector<double> t(static_cast<std::size_t>(n) * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                t[static_cast<std::size_t>(x) * n + y] = f.decorations[e][g.weight(x, y)];
        tables.push_back(std::move(t));
    }
    const std::vector<double> uniform(n, 1.0 / n);
    return assignment_sum(f.v, n, uniform, f.edges, tables, exec);
}

double EdgeJointMeasure::at(const std::vector<int>& zs) const {
    const int m = space->size();
    std::size_t idx = 0, stride = 1;
    for (int e = 0; e < edge_count; ++e) {
        idx += static_cast<std::size_t>(zs[e]) * stride;
        stride *= m;
    }
    return tensor[idx];
}

double EdgeJointMeasure::sum() const {
    double s = 0.0;
    for (double v : tensor) s += v;
    return s;
}

EdgeJointMeasure edge_joint_measure(int v, const std::vector<std::pair<int, int>>& edges,
                                    const StepGraphon& w) {
    const int k = w.block_count();
    const int m = w.space()->size();
    const int e_count = static_cast<int>(edges.size());
    for (const auto& [a, b] : edges)
        if (a < 0 || a >= v || b < 0 || b >= v || a == b) throw InputError("bad edge");

    const std::int64_t tensor_size = checked_pow(m, e_count);
    if (tensor_size > kDensityBudget / 8 ||
        checked_pow(k, v) > kDensityBudget / std::max<std::int64_t>(1, tensor_size))
        throw CapabilityError("edge joint measure: tensor enumeration over budget");

    EdgeJointMeasure out;
    out.space = w.space();
    out.edge_count = e_count;
    out.tensor.assign(static_cast<std::size_t>(tensor_size), 0.0);
    const auto lens = w.lengths_double();

    std::vector<int> phi(v, 0);
    while (true) {
        double weight = 1.0;
        for (int i = 0; i < v; ++i) weight *= lens[phi[i]];

        // Outer product of the edge masses, scattered into the tensor.
        std::vector<std::size_t> idx(e_count + 1, 0);
        std::vector<double> coeff(e_count + 1, weight);
        std::vector<int> digit(e_count, 0);
        int e = 0;
        while (e >= 0) {
            if (e == e_count) {
                out.tensor[idx[e]] += coeff[e];
                --e;
                continue;
            }
            if (digit[e] == m) {
                digit[e] = 0;
                --e;
                continue;
            }
            const auto& mass = w.cell(phi[edges[e].first], phi[edges[e].second]).mass;
            const int z = digit[e]++;
            std::size_t stride = 1;
            for (int p = 0; p < e; ++p) stride *= m;
            idx[e + 1] = idx[e] + static_cast<std::size_t>(z) * stride;
            coeff[e + 1] = coeff[e] * mass[z];
            ++e;
        }

        int d = v - 1;
        while (d >= 0 && ++phi[d] == k) phi[d--] = 0;
        if (d < 0) break;
    }
    return out;
}

std::vector<std::vector<double>> inverse_counting_decorations(const TestFamily& fam, int n0) {
    if (n0 < 1 || n0 > fam.size() - 1)
        throw InputError("n0 must lie in 1..family size - 1");
    const int m = fam.space()->size();
    std::vector<std::vector<double>> out;
    out.reserve(std::size_t{1} << n0);
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n0); ++s) {
        std::vector<double> f(m, 1.0);
        for (int n = 1; n <= n0; ++n) {
            const auto& fn = fam.function(n);
            for (int z = 0; z < m; ++z) f[z] *= (s >> (n - 1) & 1) ? fn[z] : 1.0 - fn[z];
        }
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace pgraphon
