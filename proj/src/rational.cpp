#include "pgraphon/rational.hpp"

#include <limits>
#include <numeric>

#include "pgraphon/errors.hpp"

namespace pgraphon {

namespace {

std::int64_t checked_narrow(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw InputError("rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw InputError("rational with zero denominator");
    if (d < 0) {
        n = checked_narrow(-static_cast<__int128>(n));
        d = checked_narrow(-static_cast<__int128>(d));
    }
    const std::int64_t g = std::gcd(n, d);
    num_ = g ? n / g : n;
    den_ = g ? d / g : d;
}

Rational& Rational::operator+=(const Rational& o) {
    const __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    const __int128 d = static_cast<__int128>(den_) * o.den_;
    const __int128 g = gcd128(n, d);
    num_ = checked_narrow(g ? n / g : n);
    den_ = checked_narrow(g ? d / g : d);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += Rational(-o.num_, o.den_); }

Rational& Rational::operator*=(const Rational& o) {
    const __int128 n = static_cast<__int128>(num_) * o.num_;
    const __int128 d = static_cast<__int128>(den_) * o.den_;
    const __int128 g = gcd128(n, d);
    num_ = checked_narrow(g ? n / g : n);
    den_ = checked_narrow(g ? d / g : d);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw InputError("rational division by zero");
    return *this *= Rational(o.den_, o.num_);
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const std::int64_t n = std::stoll(text, &used);
            if (used != text.size()) throw InputError("not a rational: '" + text + "'");
            return Rational(n);
        }
        const std::string num_part = text.substr(0, slash);
        const std::string den_part = text.substr(slash + 1);
        const std::int64_t num = std::stoll(num_part, &used);
        if (used != num_part.size()) throw InputError("not a rational: '" + text + "'");
        const std::int64_t den = std::stoll(den_part, &used);
        if (used != den_part.size()) throw InputError("not a rational: '" + text + "'");
        if (den == 0) throw InputError("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("not a rational: '" + text + "'");
    }
}

std::string rational_to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double rational_to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::int64_t common_denominator(const std::vector<Rational>& lengths) {
    std::int64_t l = 1;
    for (const auto& r : lengths) l = checked_narrow(static_cast<__int128>(l) / std::gcd(l, r.denominator()) * r.denominator());
    return l;
}

}  // namespace pgraphon
