#ifndef PGRAPHON_SIGNED_MEASURE_HPP
#define PGRAPHON_SIGNED_MEASURE_HPP

#include <utility>
#include <vector>

#include "pgraphon/weight_space.hpp"

namespace pgraphon {

/// Tolerance for probability normalization checks on masses.
inline constexpr double kMassTol = 1e-12;

/// A finite signed measure as a dense mass vector over a WeightSpace.
/// On a finite space the Hahn-Jordan decomposition is the entrywise sign
/// split, so positive/negative parts are computed, never stored.
struct SignedMeasure {
    WeightSpacePtr space;
    std::vector<double> mass;

    SignedMeasure() = default;
    SignedMeasure(WeightSpacePtr sp, std::vector<double> m);

    int size() const { return static_cast<int>(mass.size()); }

    /// Sum of entries (the signed total, mu(Z)).
    double sum() const;

    /// mu(f) for a pointwise function given as a vector over the space.
    double integrate(const std::vector<double>& f) const;

    bool is_nonnegative(double tol = kMassTol) const;
    bool is_probability(double tol = kMassTol) const;
    bool is_subprobability(double tol = kMassTol) const;
};

SignedMeasure operator+(const SignedMeasure& a, const SignedMeasure& b);
SignedMeasure operator-(const SignedMeasure& a, const SignedMeasure& b);
SignedMeasure operator*(double s, const SignedMeasure& a);

/// Dirac mass at the point with the given index.
SignedMeasure dirac(WeightSpacePtr space, int point);

/// Zero measure.
SignedMeasure zero_measure(WeightSpacePtr space);

/// Splits mu into mutually singular (mu+, mu-) with mu = mu+ - mu-.
std::pair<SignedMeasure, SignedMeasure> hahn_jordan(const SignedMeasure& mu);

/// Total variation mass |mu|(Z) = mu+(Z) + mu-(Z).
double total_mass(const SignedMeasure& mu);

/// Entrywise absolute value |mu| = mu+ + mu-.
SignedMeasure total_variation_measure(const SignedMeasure& mu);

/// Throws InputError unless both measures live on the same space.
void require_same_space(const SignedMeasure& a, const SignedMeasure& b);

}  // namespace pgraphon

#endif
