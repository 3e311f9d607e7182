#include <doctest.h>

#include "oracles.hpp"
#include "pgraphon/errors.hpp"
#include "pgraphon/measure_metrics.hpp"
#include "pgraphon/random_instances.hpp"

using namespace pgraphon;

namespace {

WeightSpacePtr two_point(double d) { return make_space({"a", "b"}, {{0.0, d}, {d, 0.0}}); }

}  // namespace

TEST_CASE("hahn-jordan splits signs into mutually singular parts") {
    const auto space = two_point(1.0);
    {
        const auto [pos, neg] = hahn_jordan(SignedMeasure(space, {0.3, -0.2}));
        CHECK(pos.mass == std::vector<double>{0.3, 0.0});
        CHECK(neg.mass == std::vector<double>{0.0, 0.2});
    }
    {
        const auto [pos, neg] = hahn_jordan(zero_measure(space));
        CHECK(pos.mass == std::vector<double>{0.0, 0.0});
        CHECK(neg.mass == std::vector<double>{0.0, 0.0});
    }
    {
        const auto one = make_space({"a"}, {{0.0}});
        const auto [pos, neg] = hahn_jordan(SignedMeasure(one, {-1.5}));
        CHECK(pos.mass == std::vector<double>{0.0});
        CHECK(neg.mass == std::vector<double>{1.5});
    }
}

TEST_CASE("total mass sums absolute entries") {
    const auto space = two_point(1.0);
    CHECK(total_mass(SignedMeasure(space, {0.3, -0.2})) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(total_mass(SignedMeasure(space, {0.25, 0.75})) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(total_mass(zero_measure(space)) == 0.0);
}

TEST_CASE("prohorov distance on pinned instances") {
    {
        const auto space = two_point(2.0);
        const SignedMeasure mu(space, {1.0, 0.0});
        const SignedMeasure nu(space, {0.7, 0.3});
        CHECK(prohorov(mu, mu) == 0.0);
        CHECK(prohorov(mu, nu) == doctest::Approx(0.3).epsilon(1e-12));
        CHECK(prohorov(mu, nu) ==
              doctest::Approx(oracles::prohorov_bruteforce(mu, nu)).epsilon(1e-6));
    }
    {
        const auto space = two_point(1.0);
        const SignedMeasure mu(space, {1.0, 0.0});
        const SignedMeasure nu(space, {0.0, 1.0});
        CHECK(prohorov(mu, nu) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(prohorov(mu, nu) ==
              doctest::Approx(oracles::prohorov_bruteforce(mu, nu)).epsilon(1e-6));
    }
}

TEST_CASE("prohorov agrees with the definition-level bisection oracle") {
    CounterRng rng(101);
    for (int t = 0; t < 60; ++t) {
        const int m = 2 + static_cast<int>(rng.next_below(4));
        const auto space = random_space(rng, m);
        const auto mu = random_measure(rng, space);
        const auto nu = random_measure(rng, space);
        const double got = prohorov(mu, nu);
        const double want = oracles::prohorov_bruteforce(mu, nu);
        CHECK(std::abs(got - want) <= 1e-6);
    }
}

TEST_CASE("prohorov metric axioms") {
    CounterRng rng(102);
    for (int t = 0; t < 40; ++t) {
        const auto space = random_space(rng, 2 + static_cast<int>(rng.next_below(4)));
        const auto a = random_measure(rng, space);
        const auto b = random_measure(rng, space);
        const auto c = random_measure(rng, space);
        CHECK(prohorov(a, b) == prohorov(b, a));
        CHECK(prohorov(a, a) == 0.0);
        CHECK(prohorov(a, c) <= prohorov(a, b) + prohorov(b, c) + 1e-9);
    }
}

TEST_CASE("prohorov is quasi-convex") {
    CounterRng rng(103);
    for (int t = 0; t < 40; ++t) {
        const auto space = random_space(rng, 2 + static_cast<int>(rng.next_below(4)));
        const auto m1 = random_measure(rng, space);
        const auto m2 = random_measure(rng, space);
        const auto n1 = random_measure(rng, space);
        const auto n2 = random_measure(rng, space);
        const double alpha = rng.next_double();
        const double mixed =
            prohorov(alpha * m1 + (1.0 - alpha) * m2, alpha * n1 + (1.0 - alpha) * n2);
        CHECK(mixed <= std::max(prohorov(m1, n1), prohorov(m2, n2)) + 1e-9);
    }
}

TEST_CASE("prohorov rejects oversized spaces") {
    const int m = kProhorovMaxPoints + 1;
    std::vector<std::vector<double>> metric(m, std::vector<double>(m, 1.0));
    std::vector<std::string> pts;
    for (int i = 0; i < m; ++i) {
        metric[i][i] = 0.0;
        pts.push_back("p" + std::to_string(i));
    }
    const auto space = make_space(pts, metric);
    const auto mu = dirac(space, 0);
    CHECK_THROWS_AS(prohorov(mu, mu), CapabilityError);
}

TEST_CASE("kr norm on two points has the min(d,2) form") {
    {
        const auto space = two_point(0.5);
        CHECK(kr_norm(SignedMeasure(space, {1.0, -1.0})) == doctest::Approx(0.5).epsilon(1e-9));
    }
    {
        const auto space = two_point(3.0);
        CHECK(kr_norm(SignedMeasure(space, {1.0, -1.0})) == doctest::Approx(2.0).epsilon(1e-9));
    }
    CHECK(kr_norm(zero_measure(two_point(1.0))) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("fm norm on two points has the 2d/(d+2) form") {
    const auto space = two_point(2.0);
    CHECK(fm_norm(SignedMeasure(space, {1.0, -1.0})) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fm_norm(zero_measure(space)) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(fm_norm(SignedMeasure(space, {2.0, -2.0})) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("norm axioms for kr, fm and the f-norm") {
    CounterRng rng(104);
    for (int t = 0; t < 30; ++t) {
        const auto space = random_space(rng, 2 + static_cast<int>(rng.next_below(4)));
        const auto fam = canonical_family(space);
        const auto mu = random_signed_measure(rng, space);
        const auto nu = random_signed_measure(rng, space);
        const double scale = 0.25 + 2.0 * rng.next_double();
        for (const MetricChoice& metric :
             {MetricChoice::kr(), MetricChoice::fm(), MetricChoice::f_norm(fam)}) {
            const double nm = eval_norm(metric, mu);
            CHECK(eval_norm(metric, scale * mu) == doctest::Approx(scale * nm).epsilon(1e-9));
            CHECK(eval_norm(metric, mu + nu) <= nm + eval_norm(metric, nu) + 1e-9);
        }
    }
}

TEST_CASE("kr and fm are metrically equivalent") {
    CounterRng rng(105);
    for (int t = 0; t < 50; ++t) {
        const auto space = random_space(rng, 2 + static_cast<int>(rng.next_below(6)));
        const auto mu = random_signed_measure(rng, space);
        const double fm = fm_norm(mu), kr = kr_norm(mu);
        CHECK(fm <= kr + 1e-9);
        CHECK(kr <= 2.0 * fm + 1e-9);
    }
}

TEST_CASE("prohorov versus the kr and fm norms") {
    CounterRng rng(106);
    for (int t = 0; t < 50; ++t) {
        const auto space = random_space(rng, 2 + static_cast<int>(rng.next_below(6)));
        const auto mu = random_measure(rng, space);
        const auto nu = random_measure(rng, space);
        const double dp = prohorov(mu, nu);
        const double fm = fm_norm(mu - nu), kr = kr_norm(mu - nu);
        CHECK(dp * dp / (1.0 + dp) <= fm + 1e-9);
        CHECK(fm <= kr + 1e-9);
        CHECK(kr <= (2.0 + std::min(mu.sum(), nu.sum())) * dp + 1e-9);
    }
}

TEST_CASE("f-norm evaluates the weighted family series") {
    const auto space = make_discrete_space(2);
    const auto fam = canonical_family(space);
    const double p = 0.37;
    CHECK(f_norm(SignedMeasure(space, {-p, p}), *fam) == doctest::Approx(0.75 * p).epsilon(1e-12));
    CHECK(f_norm(zero_measure(space), *fam) == 0.0);
    CHECK(f_norm(dirac(space, 0), *fam) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("weight space validation") {
    CHECK_THROWS_AS(make_space({}, {}), InputError);
    CHECK_THROWS_AS(make_space({"a", "b"}, {{0.0, 1.0}, {2.0, 0.0}}), InputError);
    CHECK_THROWS_AS(make_space({"a", "b"}, {{0.5, 1.0}, {1.0, 0.0}}), InputError);
    CHECK_THROWS_AS(make_space({"a", "b"}, {{0.0, -1.0}, {-1.0, 0.0}}), InputError);
    CHECK_THROWS_AS(
        make_space({"a", "b", "c"}, {{0.0, 1.0, 5.0}, {1.0, 0.0, 1.0}, {5.0, 1.0, 0.0}}),
        InputError);  // 5 > 1 + 1
    CHECK_THROWS_AS(make_space({"a"}, {{0.0}}, 3), InputError);
    CHECK(make_space({"a"}, {{0.0}}, 0)->require_cemetery() == 0);
    CHECK_THROWS_AS(make_space({"a"}, {{0.0}})->require_cemetery(), InputError);
}

TEST_CASE("test family validation") {
    const auto space = make_discrete_space(2);
    CHECK_THROWS_AS(TestFamily(space, {{0.5, 0.5}}), InputError);               // f0 not one
    CHECK_THROWS_AS(TestFamily(space, {{1.0, 1.0}}), InputError);               // does not separate
    CHECK_THROWS_AS(TestFamily(space, {{1.0, 1.0}, {2.0, 0.0}}), InputError);   // range
    CHECK(TestFamily(space, {{1.0, 1.0}, {0.25, 0.75}}).size() == 2);
    CHECK(canonical_family(space)->size() == 3);
}

TEST_CASE("measure constraint predicates") {
    const auto space = make_discrete_space(2);
    CHECK(SignedMeasure(space, {0.5, 0.5}).is_probability());
    CHECK(SignedMeasure(space, {0.2, 0.3}).is_subprobability());
    CHECK_FALSE(SignedMeasure(space, {0.9, 0.2}).is_probability());
    CHECK_FALSE(SignedMeasure(space, {-0.1, 1.1}).is_nonnegative());
    CHECK_THROWS_AS(require_same_space(dirac(space, 0), dirac(make_discrete_space(3), 0)),
                    InputError);
}
