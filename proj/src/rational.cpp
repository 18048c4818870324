#include "orbiroot/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace orbiroot {

namespace mp = boost::multiprecision;

std::int64_t floor_of(const Rational& x) {
    BigInt num = mp::numerator(x);
    BigInt den = mp::denominator(x);
    BigInt q = num / den;
    if (num % den != 0 && num < 0) {
        q -= 1;
    }
    return q.convert_to<std::int64_t>();
}

Rational frac_of(const Rational& x) {
    return x - Rational(floor_of(x));
}

std::string to_fraction_string(const Rational& x) {
    return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

std::string to_display_string(const Rational& x) {
    if (mp::denominator(x) == 1) {
        return mp::numerator(x).str();
    }
    return to_fraction_string(x);
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
    std::size_t pos = 0;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        pos = 1;
    }
    if (pos == s.size()) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    BigInt value = 0;
    for (; pos < s.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(s[pos]))) {
            throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
        }
        value = value * 10 + (s[pos] - '0');
    }
    return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(s, text));
    }
    BigInt num = parse_integer(trim(s.substr(0, slash)), text);
    std::string_view den_text = trim(s.substr(slash + 1));
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    BigInt den = parse_integer(den_text, text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

double to_double(const Rational& x) {
    return x.convert_to<double>();
}

}  // namespace orbiroot
