#include "pgraphon/signed_measure.hpp"

#include <cmath>
#include <cstdlib>

#include "pgraphon/errors.hpp"

namespace pgraphon {

SignedMeasure::SignedMeasure(WeightSpacePtr sp, std::vector<double> m)
    : space(std::move(sp)), mass(std::move(m)) {
    if (!space) throw InputError("measure without a weight space");
    if (static_cast<int>(mass.size()) != space->size())
        throw InputError("mass vector length does not match the space");
    for (double v : mass)
        if (!std::isfinite(v)) throw InputError("mass entries must be finite");
}

double SignedMeasure::sum() const {
    double s = 0.0;
    for (double v : mass) s += v;
    return s;
}

double SignedMeasure::integrate(const std::vector<double>& f) const {
    double s = 0.0;
    for (int i = 0; i < size(); ++i) s += mass[i] * f[i];
    return s;
}

bool SignedMeasure::is_nonnegative(double tol) const {
    for (double v : mass)
        if (v < -tol) return false;
    return true;
}

bool SignedMeasure::is_probability(double tol) const {
    return is_nonnegative(tol) && std::abs(sum() - 1.0) <= tol;
}

bool SignedMeasure::is_subprobability(double tol) const {
    return is_nonnegative(tol) && sum() <= 1.0 + tol;
}

SignedMeasure operator+(const SignedMeasure& a, const SignedMeasure& b) {
    require_same_space(a, b);
    SignedMeasure out = a;
    for (int i = 0; i < out.size(); ++i) out.mass[i] += b.mass[i];
    return out;
}

SignedMeasure operator-(const SignedMeasure& a, const SignedMeasure& b) {
    require_same_space(a, b);
    SignedMeasure out = a;
    for (int i = 0; i < out.size(); ++i) out.mass[i] -= b.mass[i];
    return out;
}

SignedMeasure operator*(double s, const SignedMeasure& a) {
    SignedMeasure out = a;
    for (double& v : out.mass) v *= s;
    return out;
}

SignedMeasure dirac(WeightSpacePtr space, int point) {
    if (point < 0 || point >= space->size()) throw InputError("dirac point out of range");
    std::vector<double> m(space->size(), 0.0);
    m[point] = 1.0;
    return SignedMeasure(std::move(space), std::move(m));
}

SignedMeasure zero_measure(WeightSpacePtr space) {
    std::vector<double> m(space->size(), 0.0);
    return SignedMeasure(std::move(space), std::move(m));
}

std::pair<SignedMeasure, SignedMeasure> hahn_jordan(const SignedMeasure& mu) {
    SignedMeasure pos = zero_measure(mu.space);
    SignedMeasure neg = zero_measure(mu.space);
    for (int i = 0; i < mu.size(); ++i) {
        if (mu.mass[i] >= 0.0)
            pos.mass[i] = mu.mass[i];
        else
            neg.mass[i] = -mu.mass[i];
    }
    return {pos, neg};
}

double total_mass(const SignedMeasure& mu) {
    double s = 0.0;
    for (double v : mu.mass) s += std::abs(v);
    return s;
}

SignedMeasure total_variation_measure(const SignedMeasure& mu) {
    SignedMeasure out = mu;
    for (double& v : out.mass) v = std::abs(v);
    return out;
}

void require_same_space(const SignedMeasure& a, const SignedMeasure& b) {
    if (a.space == b.space) return;
    // Distinct objects describing the same space are fine.
    if (a.space && b.space && a.space->points() == b.space->points() &&
        a.space->metric() == b.space->metric() && a.space->cemetery() == b.space->cemetery())
        return;
    throw InputError("measures live on different weight spaces");
}

}  // namespace pgraphon
