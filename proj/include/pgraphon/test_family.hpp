#ifndef PGRAPHON_TEST_FAMILY_HPP
#define PGRAPHON_TEST_FAMILY_HPP

#include <cmath>
#include <memory>
#include <vector>

#include "pgraphon/weight_space.hpp"

namespace pgraphon {

/// A finite convergence determining family (f_0, f_1, ..., f_N) of
/// [0,1]-valued functions with f_0 identically one, weighted 2^-k by
/// position. On a finite space any family that separates points is
/// convergence determining; the canonical choice is f_0 = 1 followed by
/// the per-point indicators.
class TestFamily {
  public:
    /// Validates: f_0 == 1, all values in [0,1], and the family separates
    /// the points of the space (no two points see identical values).
    TestFamily(WeightSpacePtr space, std::vector<std::vector<double>> functions);

    const WeightSpacePtr& space() const { return space_; }
    int size() const { return static_cast<int>(functions_.size()); }
    const std::vector<double>& function(int k) const { return functions_[k]; }
    const std::vector<std::vector<double>>& functions() const { return functions_; }

    /// 2^-k weight of the k-th function.
    static double weight(int k) { return std::ldexp(1.0, -k); }

  private:
    WeightSpacePtr space_;
    std::vector<std::vector<double>> functions_;
};

using TestFamilyPtr = std::shared_ptr<const TestFamily>;

/// (1, indicator of point 1, ..., indicator of point m).
TestFamilyPtr canonical_family(WeightSpacePtr space);

}  // namespace pgraphon

#endif
