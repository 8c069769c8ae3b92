#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace modq {

/// Exact rational used for table cells and closed-form bounds.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational ratio(std::int64_t num, std::int64_t den) {
    return Rational(BigInt(num), BigInt(den));
}

double to_double(const Rational& r);

/// "p/q" in lowest terms; integers render as "p/1".
std::string to_fraction_string(const Rational& r);

/// Decimal rendering rounded half-up (floor(r * 10^digits + 1/2)).
std::string to_fixed(const Rational& r, int digits = 4);

/// The rounded value of to_fixed as an exact rational.
Rational round_half_up(const Rational& r, int digits = 4);

}  // namespace modq
