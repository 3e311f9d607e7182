#include "pgraphon/rng.hpp"

#include <cstddef>

#include "pgraphon/errors.hpp"

namespace pgraphon {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t CounterRng::mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

CounterRng::CounterRng(std::uint64_t seed) : key_(mix(seed + kGamma)) {}

std::uint64_t CounterRng::next_u64() {
    ++counter_;
    return mix(key_ + counter_ * kGamma);
}

double CounterRng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t CounterRng::next_below(std::uint64_t n) {
    if (n == 0) throw InternalError("next_below(0)");
    const unsigned __int128 wide = static_cast<unsigned __int128>(next_u64()) * n;
    return static_cast<std::uint64_t>(wide >> 64);
}

CounterRng CounterRng::substream(std::uint64_t tag) const {
    CounterRng out(0);
    out.key_ = mix(key_ ^ mix(tag + kGamma));
    out.counter_ = 0;
    return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    return CounterRng::mix(CounterRng::mix(seed + kGamma) ^ CounterRng::mix(tag + kGamma));
}

int categorical_rational(CounterRng& rng, const std::vector<Rational>& probs) {
    // Scale to a common denominator: probs[i] = count_i / den with
    // sum(count_i) = den, then draw u uniform in [0, 2^64) and find the
    // bucket by exact 128-bit comparison u * den < 2^64 * cum_i.
    const std::int64_t den = common_denominator(probs);
    std::vector<std::int64_t> cum;
    std::int64_t acc = 0;
    for (const auto& p : probs) {
        acc += p.numerator() * (den / p.denominator());
        cum.push_back(acc);
    }
    if (acc != den) throw InputError("categorical_rational: probabilities must sum to one");
    const std::uint64_t u = rng.next_u64();
    const unsigned __int128 scaled = static_cast<unsigned __int128>(u) * static_cast<std::uint64_t>(den);
    for (std::size_t i = 0; i < cum.size(); ++i) {
        const unsigned __int128 threshold = static_cast<unsigned __int128>(static_cast<std::uint64_t>(cum[i])) << 64;
        if (scaled < threshold) return static_cast<int>(i);
    }
    return static_cast<int>(cum.size()) - 1;
}

int categorical_mass(CounterRng& rng, const std::vector<double>& mass) {
    const double r = rng.next_double();
    double acc = 0.0;
    int last_positive = -1;
    for (std::size_t i = 0; i < mass.size(); ++i) {
        if (mass[i] > 0.0) last_positive = static_cast<int>(i);
        acc += mass[i];
        if (r < acc) return static_cast<int>(i);
    }
    if (last_positive < 0) throw InputError("categorical_mass: all masses are zero");
    return last_positive;
}

}  // namespace pgraphon
