#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "pgraphon/errors.hpp"
#include "pgraphon/rng.hpp"
#include "pgraphon/simplex_lp.hpp"

using namespace pgraphon;

TEST_CASE("simplex solves pinned instances") {
    {
        // max x + y, x <= 1, y <= 2
        const auto sol = simplex_maximize({1, 1}, {{1, 0}, {0, 1}}, {1, 2});
        CHECK(sol.value == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(sol.x[0] == doctest::Approx(1.0));
        CHECK(sol.x[1] == doctest::Approx(2.0));
    }
    {
        // max 3x + 2y, x + y <= 4, x + 3y <= 6: optimum 12 at (4, 0)
        const auto sol = simplex_maximize({3, 2}, {{1, 1}, {1, 3}}, {4, 6});
        CHECK(sol.value == doctest::Approx(12.0).epsilon(1e-12));
    }
    {
        // all-negative objective: optimum at the origin
        const auto sol = simplex_maximize({-1, -2}, {{1, 1}}, {3});
        CHECK(sol.value == doctest::Approx(0.0));
    }
    {
        // degenerate rhs entries are fine under Bland's rule
        const auto sol = simplex_maximize({1, 1}, {{1, 0}, {1, 0}, {0, 1}}, {0, 0, 1});
        CHECK(sol.value == doctest::Approx(1.0));
    }
}

TEST_CASE("simplex rejects malformed and unbounded problems") {
    CHECK_THROWS_AS(simplex_maximize({1}, {{1}}, {-1}), InternalError);
    CHECK_THROWS_AS(simplex_maximize({1}, {{0}}, {1}), InternalError);  // unbounded
}

TEST_CASE("simplex matches the greedy fractional-knapsack oracle") {
    // max c.x with x_i <= u_i and sum x_i <= S is solved by filling the
    // budget in decreasing order of positive c_i.
    CounterRng rng(7002);
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + static_cast<int>(rng.next_below(5));
        std::vector<double> c(n), u(n);
        for (int i = 0; i < n; ++i) {
            c[i] = 2.0 * rng.next_double() - 0.5;
            u[i] = 0.2 + rng.next_double();
        }
        const double budget = 0.3 + 1.5 * rng.next_double();

        std::vector<std::vector<double>> a;
        std::vector<double> b;
        for (int i = 0; i < n; ++i) {
            std::vector<double> row(n, 0.0);
            row[i] = 1.0;
            a.push_back(row);
            b.push_back(u[i]);
        }
        a.emplace_back(n, 1.0);
        b.push_back(budget);

        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int i, int j) { return c[i] > c[j]; });
        double remaining = budget, expected = 0.0;
        for (int i : order) {
            if (c[i] <= 0.0 || remaining <= 0.0) break;
            const double take = std::min(u[i], remaining);
            expected += c[i] * take;
            remaining -= take;
        }

        const auto sol = simplex_maximize(c, a, b);
        CHECK(sol.value == doctest::Approx(expected).epsilon(1e-9));
    }
}
