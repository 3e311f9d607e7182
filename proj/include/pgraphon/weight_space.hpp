#ifndef PGRAPHON_WEIGHT_SPACE_HPP
#define PGRAPHON_WEIGHT_SPACE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pgraphon {

/// A finite metric space of edge-weight values. An optional cemetery
/// point encodes missing edges (and diagonals), so every graph can be
/// treated as complete.
class WeightSpace {
  public:
    /// Validates on construction: metric must be symmetric, zero exactly
    /// on the diagonal, and satisfy the triangle inequality over all
    /// triples; cemetery, if given, must be a valid index.
    WeightSpace(std::vector<std::string> points,
                std::vector<std::vector<double>> metric,
                std::optional<int> cemetery = std::nullopt);

    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<std::string>& points() const { return points_; }
    double dist(int i, int j) const { return metric_[i][j]; }
    const std::vector<std::vector<double>>& metric() const { return metric_; }
    std::optional<int> cemetery() const { return cemetery_; }

    /// Index of the cemetery point; throws InputError if none is defined.
    int require_cemetery() const;

    /// Sorted distinct off-diagonal metric values (the radii at which
    /// closed balls change).
    const std::vector<double>& distance_levels() const { return levels_; }

  private:
    std::vector<std::string> points_;
    std::vector<std::vector<double>> metric_;
    std::optional<int> cemetery_;
    std::vector<double> levels_;
};

using WeightSpacePtr = std::shared_ptr<const WeightSpace>;

WeightSpacePtr make_space(std::vector<std::string> points,
                          std::vector<std::vector<double>> metric,
                          std::optional<int> cemetery = std::nullopt);

/// n points labeled "z1".."zn" with unit distance between distinct points.
WeightSpacePtr make_discrete_space(int n, std::optional<int> cemetery = std::nullopt);

/// The two-point space {"0","1"} at distance 1, used to embed real-valued
/// graphons.
WeightSpacePtr make_binary_space();

}  // namespace pgraphon

#endif
