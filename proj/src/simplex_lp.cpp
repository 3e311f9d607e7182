#include "pgraphon/simplex_lp.hpp"

#include <cstddef>

#include "pgraphon/errors.hpp"

namespace pgraphon {

namespace {
constexpr double kPivotTol = 1e-11;
}

LpSolution simplex_maximize(const std::vector<double>& c,
                            const std::vector<std::vector<double>>& a,
                            const std::vector<double>& b) {
    const int n = static_cast<int>(c.size());
    const int m = static_cast<int>(a.size());
    for (double bi : b)
        if (bi < 0.0) throw InternalError("simplex_maximize requires b >= 0");

    // Tableau rows 1..m hold [A | I | b]; row 0 holds the reduced costs.
    const int cols = n + m + 1;
    std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols, 0.0));
    for (int j = 0; j < n; ++j) t[0][j] = -c[j];
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t[i + 1][j] = a[i][j];
        t[i + 1][n + i] = 1.0;
        t[i + 1][cols - 1] = b[i];
    }
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    const long max_pivots = 2000L * (n + m) + 10000L;
    for (long pivots = 0;; ++pivots) {
        if (pivots > max_pivots) throw InternalError("simplex did not converge");

        // Bland: entering column is the smallest index with a negative
        // reduced cost.
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (t[0][j] < -kPivotTol) {
                enter = j;
                break;
            }
        if (enter < 0) break;  // optimal

        int leave = -1;
        double best_ratio = 0.0;
        for (int i = 1; i <= m; ++i) {
            if (t[i][enter] <= kPivotTol) continue;
            const double ratio = t[i][cols - 1] / t[i][enter];
            if (leave < 0 || ratio < best_ratio - kPivotTol ||
                (ratio < best_ratio + kPivotTol && basis[i - 1] < basis[leave - 1])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) throw InternalError("simplex: objective unbounded");

        const double piv = t[leave][enter];
        for (int j = 0; j < cols; ++j) t[leave][j] /= piv;
        for (int i = 0; i <= m; ++i) {
            if (i == leave) continue;
            const double factor = t[i][enter];
            if (factor == 0.0) continue;
            for (int j = 0; j < cols; ++j) t[i][j] -= factor * t[leave][j];
        }
        basis[leave - 1] = enter;
    }

    LpSolution sol;
    sol.value = t[0][cols - 1];
    sol.x.assign(n, 0.0);
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) sol.x[basis[i]] = t[i + 1][cols - 1];
    return sol;
}

}  // namespace pgraphon
