#ifndef PGRAPHON_RATIONAL_HPP
#define PGRAPHON_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace pgraphon {

/// Exact rational over int64 used for all partition lengths and
/// boundaries. Always normalized (gcd one, positive denominator);
/// arithmetic goes through 128-bit intermediates and throws InputError
/// if a result leaves the int64 range. Partition algebra (overlay,
/// refinement, equipartition) never touches floating point; only
/// measure masses are doubles.
class Rational {
  public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n) {}  // NOLINT: intentionally implicit
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // Exact cross-multiplication; both factors fit in 128 bits.
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs < rhs   ? std::strong_ordering::less
               : lhs > rhs ? std::strong_ordering::greater
                           : std::strong_ordering::equal;
    }

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Parses "p/q" or "p". Throws InputError on zero denominators or junk.
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& r);

double rational_to_double(const Rational& r);

/// Least common multiple of the denominators, i.e. the smallest L such
/// that every length is an integer multiple of 1/L.
std::int64_t common_denominator(const std::vector<Rational>& lengths);

}  // namespace pgraphon

#endif
