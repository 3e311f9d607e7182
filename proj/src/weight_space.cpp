#include "pgraphon/weight_space.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "pgraphon/errors.hpp"

namespace pgraphon {

WeightSpace::WeightSpace(std::vector<std::string> points,
                         std::vector<std::vector<double>> metric,
                         std::optional<int> cemetery)
    : points_(std::move(points)), metric_(std::move(metric)), cemetery_(cemetery) {
    const int m = static_cast<int>(points_.size());
    if (m < 1) throw InputError("weight space needs at least one point");
    if (static_cast<int>(metric_.size()) != m)
        throw InputError("metric row count does not match point count");
    for (const auto& row : metric_)
        if (static_cast<int>(row.size()) != m)
            throw InputError("metric is not square");
    for (int i = 0; i < m; ++i) {
        if (metric_[i][i] != 0.0) throw InputError("metric diagonal must be zero");
        for (int j = 0; j < m; ++j) {
            if (!std::isfinite(metric_[i][j]) || metric_[i][j] < 0.0)
                throw InputError("metric entries must be finite and nonnegative");
            if (i != j && metric_[i][j] <= 0.0)
                throw InputError("metric must be positive off the diagonal");
            if (metric_[i][j] != metric_[j][i]) throw InputError("metric must be symmetric");
        }
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                if (metric_[i][j] > metric_[i][k] + metric_[k][j] + 1e-12)
                    throw InputError("metric violates the triangle inequality");
    if (cemetery_ && (*cemetery_ < 0 || *cemetery_ >= m))
        throw InputError("cemetery index out of range");

    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) levels_.push_back(metric_[i][j]);
    std::sort(levels_.begin(), levels_.end());
    levels_.erase(std::unique(levels_.begin(), levels_.end()), levels_.end());
}

int WeightSpace::require_cemetery() const {
    if (!cemetery_) throw InputError("operation needs a cemetery point but the space has none");
    return *cemetery_;
}

WeightSpacePtr make_space(std::vector<std::string> points,
                          std::vector<std::vector<double>> metric,
                          std::optional<int> cemetery) {
    return std::make_shared<const WeightSpace>(std::move(points), std::move(metric), cemetery);
}

WeightSpacePtr make_discrete_space(int n, std::optional<int> cemetery) {
    std::vector<std::string> pts;
    std::vector<std::vector<double>> metric(n, std::vector<double>(n, 1.0));
    for (int i = 0; i < n; ++i) {
        pts.push_back("z" + std::to_string(i + 1));
        metric[i][i] = 0.0;
    }
    return make_space(std::move(pts), std::move(metric), cemetery);
}

WeightSpacePtr make_binary_space() {
    return make_space({"0", "1"}, {{0.0, 1.0}, {1.0, 0.0}});
}

}  // namespace pgraphon
