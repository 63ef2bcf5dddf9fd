#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "affprox/errors.hpp"

namespace affprox {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar with arbitrary-precision numerator and denominator.
/// Always canonical: positive denominator, gcd(|num|, den) = 1. Every
/// arithmetic operation is exact; dividing by zero throws.
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den, normalizing the sign of the denominator.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) {
        throw ValidationError("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

/// Parses "p", "-p" or "p/q". Rejects anything else, including "p/0",
/// whitespace, and decimal notation.
inline Rational parse_rational(std::string_view text) {
    const auto fail = [&] {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    };
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    const auto take_digits = [&](std::string_view& s) {
        std::size_t i = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i == 0) fail();
        std::string_view digits = s.substr(0, i);
        s.remove_prefix(i);
        return digits;
    };
    const std::string_view num_digits = take_digits(rest);
    Integer num{std::string(num_digits)};
    Integer den = 1;
    if (!rest.empty()) {
        if (rest.front() != '/') fail();
        rest.remove_prefix(1);
        const std::string_view den_digits = take_digits(rest);
        if (!rest.empty()) fail();
        den = Integer(std::string(den_digits));
        if (den == 0) {
            throw ParseError("malformed rational '" + std::string(text) +
                             "': zero denominator");
        }
    }
    if (negative) num = -num;
    return Rational(std::move(num), std::move(den));
}

/// "p" when the value is integral, "p/q" otherwise.
inline std::string format_rational(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

inline Rational rational_abs(const Rational& value) {
    return value < 0 ? Rational(-value) : value;
}

}  // namespace affprox
