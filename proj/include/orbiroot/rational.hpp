#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbiroot {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return Rational(num, den);
}

/// Floor division on machine integers (rounds toward negative infinity).
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

/// Representative of a modulo b in [0, |b|).
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
    return a - b * floor_div(a, b);
}

std::int64_t floor_of(const Rational& x);
Rational frac_of(const Rational& x);

/// "p/q" in lowest terms with q > 0; integers keep the "/1".
std::string to_fraction_string(const Rational& x);
/// Human form: "p/q", or "p" when q == 1.
std::string to_display_string(const Rational& x);

/// Parses "a/b" or a bare integer. Decimal points, exponents and empty
/// denominators are rejected with std::invalid_argument.
Rational parse_rational(std::string_view text);

double to_double(const Rational& x);

}  // namespace orbiroot
