#include "pgraphon/random_instances.hpp"

#include <algorithm>
#include <string>

namespace pgraphon {

WeightSpacePtr random_space(CounterRng& rng, int points, std::optional<int> cemetery) {
    std::vector<std::vector<double>> metric(points, std::vector<double>(points, 0.0));
    for (int i = 0; i < points; ++i)
        for (int j = i + 1; j < points; ++j)
            metric[i][j] = metric[j][i] = 0.2 + 1.8 * rng.next_double();
    // Shortest-path closure keeps symmetry and enforces the triangle
    // inequality.
    for (int k = 0; k < points; ++k)
        for (int i = 0; i < points; ++i)
            for (int j = 0; j < points; ++j)
                metric[i][j] = std::min(metric[i][j], metric[i][k] + metric[k][j]);
    std::vector<std::string> labels;
    for (int i = 0; i < points; ++i) labels.push_back("z" + std::to_string(i + 1));
    return make_space(std::move(labels), std::move(metric), cemetery);
}

SignedMeasure random_measure(CounterRng& rng, const WeightSpacePtr& space, double scale) {
    std::vector<double> mass(space->size());
    for (double& v : mass) v = scale * rng.next_double();
    return SignedMeasure(space, std::move(mass));
}

SignedMeasure random_signed_measure(CounterRng& rng, const WeightSpacePtr& space, double scale) {
    std::vector<double> mass(space->size());
    for (double& v : mass) v = scale * (2.0 * rng.next_double() - 1.0);
    return SignedMeasure(space, std::move(mass));
}

SignedMeasure random_probability_measure(CounterRng& rng, const WeightSpacePtr& space) {
    std::vector<double> mass(space->size());
    double total = 0.0;
    for (double& v : mass) {
        v = rng.next_double() + 1e-9;
        total += v;
    }
    for (double& v : mass) v /= total;
    return SignedMeasure(space, std::move(mass));
}

StepGraphon random_probability_graphon(CounterRng& rng, const WeightSpacePtr& space, int blocks) {
    std::vector<Rational> lengths(blocks, Rational(1, blocks));
    std::vector<SignedMeasure> cells;
    cells.reserve(static_cast<std::size_t>(blocks) * blocks);
    for (int i = 0; i < blocks * blocks; ++i) cells.push_back(random_probability_measure(rng, space));
    return StepGraphon(space, std::move(lengths), std::move(cells), GraphonKind::Probability);
}

StepGraphon random_signed_kernel(CounterRng& rng, const WeightSpacePtr& space, int blocks,
                                 double scale) {
    std::vector<Rational> lengths(blocks, Rational(1, blocks));
    std::vector<SignedMeasure> cells;
    cells.reserve(static_cast<std::size_t>(blocks) * blocks);
    for (int i = 0; i < blocks * blocks; ++i)
        cells.push_back(random_signed_measure(rng, space, scale));
    return StepGraphon(space, std::move(lengths), std::move(cells), GraphonKind::Signed);
}

StepGraphon sbm2_graphon(double p, double q) {
    return embed_real_graphon({{p, q}, {q, p}}, {Rational(1, 2), Rational(1, 2)});
}

StepGraphon sbm2_graphon_sampleable(double p, double q) {
    const auto space = make_space({"0", "1"}, {{0.0, 1.0}, {1.0, 0.0}}, 0);
    const std::vector<Rational> lengths = {Rational(1, 2), Rational(1, 2)};
    std::vector<SignedMeasure> cells;
    for (double v : {p, q, q, p}) cells.push_back(SignedMeasure(space, {1.0 - v, v}));
    return StepGraphon(space, lengths, std::move(cells), GraphonKind::Probability);
}

}  // namespace pgraphon
