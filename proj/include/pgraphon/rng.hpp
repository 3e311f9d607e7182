#ifndef PGRAPHON_RNG_HPP
#define PGRAPHON_RNG_HPP

#include <cstdint>
#include <vector>

#include "pgraphon/rational.hpp"

namespace pgraphon {

/// SplitMix64 run in counter mode: draw i of stream `key` is the
/// SplitMix64 finalizer applied to key + (i+1) * golden-gamma. Stateless
/// in the counter, 64-bit arithmetic only, so sequences are identical on
/// every platform. Substreams are derived by re-keying with a tag
/// (`substream`), giving independent streams per (edge, trial, ...)
/// without coordination.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform in [0,1) with 53 random bits.
    double next_double();

    /// Uniform integer in [0, n), n >= 1, by rejection-free 128-bit scaling.
    std::uint64_t next_below(std::uint64_t n);

    /// Independent stream addressed by a tag; derivation is pure, so
    /// substream(k) is the same stream no matter how many draws were made.
    CounterRng substream(std::uint64_t tag) const;

    std::uint64_t key() const { return key_; }

    static std::uint64_t mix(std::uint64_t z);

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Stable seed derivation used for per-trial / per-edge substreams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

/// Categorical draw over exact rational probabilities (summing to one):
/// the unit interval is split at exact 128-bit thresholds, so block
/// assignment never depends on floating point rounding.
int categorical_rational(CounterRng& rng, const std::vector<Rational>& probs);

/// Categorical draw over a nonnegative mass vector summing to ~1 by CDF
/// inversion; the last positive entry absorbs rounding slack.
int categorical_mass(CounterRng& rng, const std::vector<double>& mass);

}  // namespace pgraphon

#endif
