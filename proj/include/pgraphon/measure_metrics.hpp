#ifndef PGRAPHON_MEASURE_METRICS_HPP
#define PGRAPHON_MEASURE_METRICS_HPP

#include <memory>
#include <string>

#include "pgraphon/signed_measure.hpp"
#include "pgraphon/test_family.hpp"

namespace pgraphon {

/// Largest point count for which the Prohorov distance is computed by the
/// exact 2^m subset scan.
inline constexpr int kProhorovMaxPoints = 20;

/// Prohorov distance between two (nonnegative) measures on the same
/// space: the infimum of eps such that for every subset A,
///   mu(A) <= nu(A^eps) + eps  and  nu(A) <= mu(A^eps) + eps,
/// with the open enlargement A^eps = {x : d(x,A) < eps}. Computed exactly
/// by sweeping the candidate radii at which A^eps changes and scanning
/// all 2^m subsets per level. Throws CapabilityError above
/// kProhorovMaxPoints points.
double prohorov(const SignedMeasure& mu, const SignedMeasure& nu);

/// Kantorovitch-Rubinstein norm: max of mu(f) over |f| <= 1 with f
/// 1-Lipschitz for the space metric. Solved by the dense simplex.
double kr_norm(const SignedMeasure& mu);

/// Fortet-Mourier norm: max of mu(f) over ||f||_inf + Lip(f) <= 1, the
/// Lipschitz constant being a decision variable of the LP.
double fm_norm(const SignedMeasure& mu);

/// Weighted l1 norm sum_k 2^-k |mu(f_k)| over a finite test family.
double f_norm(const SignedMeasure& mu, const TestFamily& fam);

/// Which measure metric/norm drives a cut norm or cut distance.
struct MetricChoice {
    enum class Kind { Prohorov, KR, FM, FNorm };

    Kind kind = Kind::FNorm;
    TestFamilyPtr family;  // required iff kind == FNorm

    static MetricChoice prohorov_metric() { return {Kind::Prohorov, nullptr}; }
    static MetricChoice kr() { return {Kind::KR, nullptr}; }
    static MetricChoice fm() { return {Kind::FM, nullptr}; }
    static MetricChoice f_norm(TestFamilyPtr fam) { return {Kind::FNorm, std::move(fam)}; }

    bool is_norm() const { return kind != Kind::Prohorov; }
    std::string name() const;
};

/// Norm of a signed measure under a norm-kind choice (not Prohorov).
double eval_norm(const MetricChoice& metric, const SignedMeasure& mu);

/// Distance between two measures; for norm kinds this is the norm of the
/// difference, for Prohorov both inputs must be nonnegative.
double eval_dist(const MetricChoice& metric, const SignedMeasure& mu, const SignedMeasure& nu);

}  // namespace pgraphon

#endif
