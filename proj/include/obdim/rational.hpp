#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace obdim {

/// Arbitrary precision rational number (GMP backed).
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

inline Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline std::string to_string(const Rational& q) { return q.str(); }

/// Natural log of a positive rational, computed from numerator and denominator
/// separately so huge values do not overflow a double.
inline double log_of(const Rational& q) {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    auto log_big = [](const BigInt& z) {
        // msb gives floor(log2 z); scale the top bits into a double.
        const auto bits = boost::multiprecision::msb(z);
        if (bits < 900) return std::log(z.convert_to<double>());
        const unsigned shift = static_cast<unsigned>(bits - 60);
        const BigInt top = z >> shift;
        return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
    };
    return log_big(numerator(q)) - log_big(denominator(q));
}

}  // namespace obdim
