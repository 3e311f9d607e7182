#include <doctest.h>

#include <cmath>

#include "pgraphon/regularity.hpp"
#include "pgraphon/random_instances.hpp"

using namespace pgraphon;

TEST_CASE("kernels already on few blocks need no refinement") {
    CounterRng rng(501);
    const auto space = make_discrete_space(2);
    const auto fam = canonical_family(space);
    const auto w = random_probability_graphon(rng, space, 4);
    const auto res = weak_regularity_partition(w, 8, fam);
    CHECK(res.achieved_error == 0.0);
    CHECK(res.partition.target_count() == 4);
    CHECK(res.witnesses_exact);
    CHECK(same_cells(res.stepped, w));
}

TEST_CASE("target one collapses to the trivial partition") {
    CounterRng rng(502);
    const auto space = make_discrete_space(2);
    const auto fam = canonical_family(space);
    const auto w = random_probability_graphon(rng, space, 8);
    const auto res = weak_regularity_partition(w, 1, fam);
    CHECK(res.partition.target_count() == 1);
    const auto flat = stepping(w, std::vector<int>(8, 0));
    CHECK(same_cells(res.stepped, flat));
    const double expect =
        cut_norm_exact(kernel_difference(w, flat), MetricChoice::f_norm(fam)).value;
    CHECK(res.achieved_error == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("the class budget is honored and the bound holds on random instances") {
    CounterRng rng(503);
    const auto space = make_discrete_space(2);
    const auto fam = canonical_family(space);
    for (int t = 0; t < 3; ++t) {
        const auto w = random_probability_graphon(rng, space, 32);
        const auto res = weak_regularity_partition(w, 8, fam);
        CHECK(res.partition.target_count() <= 8);
        CHECK(res.partition.fine_to_group(32).size() == 32);
        // probability graphons satisfy the 4/sqrt(log2 k) regularity bound
        CHECK(res.achieved_error <= 4.0 / std::sqrt(std::log2(8.0)));
        // and the l2 comparison gives a rigorous certificate
        const auto diff = kernel_difference(w, res.stepped);
        CHECK(res.achieved_error <= std::sqrt(2.0) * f_l2_norm(diff, *fam) + 1e-9);
    }
}

TEST_CASE("partitioning is deterministic") {
    CounterRng rng(504);
    const auto space = make_discrete_space(2);
    const auto fam = canonical_family(space);
    const auto w = random_probability_graphon(rng, space, 20);
    const auto a = weak_regularity_partition(w, 6, fam);
    const auto b = weak_regularity_partition(w, 6, fam);
    CHECK(a.achieved_error == b.achieved_error);
    CHECK(a.partition.fine_to_group(20) == b.partition.fine_to_group(20));
}
