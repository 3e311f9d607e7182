#include <doctest.h>

#include <cmath>

#include "pgraphon/delta_cut.hpp"
#include "pgraphon/errors.hpp"
#include "pgraphon/hom_density.hpp"
#include "pgraphon/random_instances.hpp"
#include "pgraphon/sampling.hpp"

using namespace pgraphon;

namespace {

StepGraphon sbm() { return sbm2_graphon(0.9, 0.1); }

std::vector<double> indicator_of(const WeightSpacePtr& space, int z) {
    std::vector<double> f(space->size(), 0.0);
    f[z] = 1.0;
    return f;
}

std::vector<double> ones(const WeightSpacePtr& space) {
    return std::vector<double>(space->size(), 1.0);
}

}  // namespace

TEST_CASE("single-edge densities") {
    const auto w = sbm();
    const DecoratedGraph one_edge(2, {{0, 1}}, {ones(w.space())});
    CHECK(hom_density_exact(one_edge, w) == doctest::Approx(1.0).epsilon(1e-12));

    const DecoratedGraph ind(2, {{0, 1}}, {indicator_of(w.space(), 1)});
    CHECK(hom_density_exact(ind, w) == doctest::Approx(0.5).epsilon(1e-12));

    const DecoratedGraph path(3, {{0, 1}, {1, 2}},
                              {indicator_of(w.space(), 1), indicator_of(w.space(), 1)});
    CHECK(hom_density_exact(path, w) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("density is invariant under relabeling") {
    CounterRng rng(601);
    const auto space = make_discrete_space(3);
    for (int t = 0; t < 8; ++t) {
        const auto w = random_probability_graphon(rng, space, 4);
        const std::vector<int> sigma = {2, 0, 3, 1};
        const DecoratedGraph f(3, {{0, 1}, {1, 2}, {2, 0}},
                               {indicator_of(space, 0), indicator_of(space, 1),
                                indicator_of(space, 2)});
        const double before = hom_density_exact(f, w);
        const double after = hom_density_exact(f, relabel(w, sigma));
        CHECK(std::abs(before - after) <= 1e-12);
    }
}

TEST_CASE("monte carlo estimator") {
    const auto w = sbm();
    {
        const DecoratedGraph one(2, {{0, 1}}, {ones(w.space())});
        const auto est = hom_density_mc(one, w, 2000, 9);
        CHECK(est.estimate == 1.0);
        CHECK(est.std_error == 0.0);
    }
    {
        const DecoratedGraph ind(2, {{0, 1}}, {indicator_of(w.space(), 1)});
        const auto est = hom_density_mc(ind, w, 100000, 10);
        CHECK(est.std_error > 0.0);
        CHECK(std::abs(est.estimate - 0.5) <= 4.0 * est.std_error);
        const auto repeat = hom_density_mc(ind, w, 100000, 10);
        CHECK(est.estimate == repeat.estimate);
        CHECK(est.std_error == repeat.std_error);
    }
}

TEST_CASE("monte carlo is unbiased across independent estimates") {
    const auto w = sbm();
    const DecoratedGraph ind(2, {{0, 1}}, {indicator_of(w.space(), 1)});
    const double exact = hom_density_exact(ind, w);
    const int reps = 200, samples = 2000;
    double mean = 0.0, pooled_var = 0.0;
    for (int r = 0; r < reps; ++r) {
        const auto est = hom_density_mc(ind, w, samples, derive_seed(602, r));
        mean += est.estimate;
        pooled_var += est.std_error * est.std_error;
    }
    mean /= reps;
    const double pooled_se = std::sqrt(pooled_var) / reps;
    CHECK(std::abs(mean - exact) <= 4.0 * pooled_se);
}

TEST_CASE("graph-side density") {
    const auto space = make_discrete_space(2, 0);
    const auto w = constant_graphon(SignedMeasure(space, {0.4, 0.6}));
    const auto g = sample_g(w, 5, 99);

    const DecoratedGraph one(2, {{0, 1}}, {ones(space)});
    CHECK(hom_density_graph(one, g) == doctest::Approx(1.0).epsilon(1e-12));

    // embedding the graph as a kernel gives the same densities
    const auto wg = from_weighted_graph(g);
    const DecoratedGraph tri(3, {{0, 1}, {1, 2}, {2, 0}},
                             {indicator_of(space, 1), indicator_of(space, 1),
                              indicator_of(space, 0)});
    CHECK(hom_density_graph(tri, g) ==
          doctest::Approx(hom_density_exact(tri, wg)).epsilon(1e-12));

    // a single indicator edge counts ordered pairs (with repetition)
    const DecoratedGraph ind(2, {{0, 1}}, {indicator_of(space, 1)});
    long hits = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) hits += g.weight(i, j) == 1;
    CHECK(hom_density_graph(ind, g) == doctest::Approx(hits / 25.0).epsilon(1e-12));
}

TEST_CASE("edge joint measure") {
    const auto space = make_discrete_space(2, 0);
    {
        const auto mu = SignedMeasure(space, {0.25, 0.75});
        const auto joint = edge_joint_measure(2, {{0, 1}}, constant_graphon(mu));
        CHECK(joint.at({0}) == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(joint.at({1}) == doctest::Approx(0.75).epsilon(1e-12));
    }
    {
        const auto w = constant_graphon(SignedMeasure(space, {0.7, 0.3}));
        const auto joint = edge_joint_measure(2, {{0, 1}, {1, 0}}, w);
        CHECK(joint.at({1, 1}) == doctest::Approx(0.09).epsilon(1e-12));
        CHECK(joint.sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
    {
        CounterRng rng(603);
        const auto w = random_probability_graphon(rng, space, 3);
        const auto joint = edge_joint_measure(3, {{0, 1}, {1, 0}, {1, 2}}, w);
        CHECK(joint.sum() == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("inverse counting decorations") {
    const auto space = make_discrete_space(2);
    const auto fam = canonical_family(space);
    {
        const auto decs = inverse_counting_decorations(*fam, 1);
        REQUIRE(decs.size() == 2);
        // s = 0 keeps 1 - f_1, s = 1 keeps f_1
        CHECK(decs[0] == std::vector<double>{0.0, 1.0});
        CHECK(decs[1] == std::vector<double>{1.0, 0.0});
    }
    {
        const auto decs = inverse_counting_decorations(*fam, 2);
        REQUIRE(decs.size() == 4);
        int zero_count = 0;
        std::vector<double> total(2, 0.0);
        for (const auto& d : decs) {
            if (d == std::vector<double>{0.0, 0.0}) ++zero_count;
            for (int z = 0; z < 2; ++z) total[z] += d[z];
        }
        CHECK(zero_count == 2);  // indicators are disjoint
        CHECK(total == std::vector<double>{1.0, 1.0});  // partition of unity
    }
    CHECK_THROWS_AS(inverse_counting_decorations(*fam, 3), InputError);
}

TEST_CASE("counting bound on one random pair") {
    CounterRng rng(604);
    const auto space = make_discrete_space(3);
    const auto fam = canonical_family(space);
    const auto u = random_probability_graphon(rng, space, 3);
    const auto w = random_probability_graphon(rng, space, 3);
    const double delta = delta_cut_brute(u, w, MetricChoice::f_norm(fam), 6).value;

    const auto f = DecoratedGraph::from_family(3, {{0, 1}, {1, 2}}, {1, 2}, *fam);
    const double gap = std::abs(hom_density_exact(f, u) - hom_density_exact(f, w));
    CHECK(gap <= (std::ldexp(1.0, 1) + std::ldexp(1.0, 2)) * delta + 1e-9);
}

TEST_CASE("budget guards and validation") {
    CounterRng rng(605);
    const auto space = make_discrete_space(2);
    const auto w = random_probability_graphon(rng, space, 100);
    const DecoratedGraph big(5, {{0, 1}}, {ones(space)});
    CHECK_THROWS_AS(hom_density_exact(big, w), CapabilityError);
    CHECK_THROWS_AS(DecoratedGraph(2, {{0, 0}}, {ones(space)}), InputError);
    CHECK_THROWS_AS(DecoratedGraph(2, {{0, 1}, {0, 1}}, {ones(space), ones(space)}), InputError);
    CHECK_THROWS_AS(DecoratedGraph(1, {{0, 1}}, {ones(space)}), InputError);
}
