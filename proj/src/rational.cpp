#include "modq/rational.hpp"

#include <fmt/format.h>

namespace modq {
namespace {

BigInt pow10(int digits) {
    BigInt p = 1;
    for (int i = 0; i < digits; ++i) p *= 10;
    return p;
}

// floor(a / b) for b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;  // truncates toward zero
    if (a < 0 && q * b != a) --q;
    return q;
}

BigInt scaled_rounded(const Rational& r, int digits) {
    BigInt num = boost::multiprecision::numerator(r) * pow10(digits) * 2 +
                 boost::multiprecision::denominator(r);
    return floor_div(num, boost::multiprecision::denominator(r) * 2);
}

}  // namespace

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_fraction_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational round_half_up(const Rational& r, int digits) {
    return Rational(scaled_rounded(r, digits), pow10(digits));
}

std::string to_fixed(const Rational& r, int digits) {
    BigInt scaled = scaled_rounded(r, digits);
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string body = scaled.str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return negative ? "-" + body : body;
}

}  // namespace modq
