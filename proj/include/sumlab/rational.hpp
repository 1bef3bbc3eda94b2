#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sumlab/errors.hpp"

namespace sumlab {

// Expression templates off: values, not lazy expressions, so `auto` and
// implicit conversions behave.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
// Always normalized: lowest terms, positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

using IntVector = std::vector<Integer>;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline std::string to_string(const Integer& z) { return z.str(); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

}  // namespace detail

inline Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-') {
        digits.remove_prefix(1);
    }
    if (!detail::all_digits(digits)) {
        throw ParseError("not an integer: '" + std::string(text) + "'");
    }
    return Integer(std::string(text));
}

/// Parses "p" or "p/q" (q > 0, gcd(p, q) = 1). Non-reduced fractions are
/// rejected so that the textual form of a value is unique.
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const Integer num = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!detail::all_digits(den_text)) {
        throw ParseError("bad denominator in '" + std::string(text) + "'");
    }
    const Integer den(std::string{den_text});
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    if (gcd(abs(num), den) != 1) {
        throw ParseError("rational not in lowest terms: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

inline Integer lcm_of_denominators(const std::vector<Rational>& values) {
    Integer l = 1;
    for (const auto& v : values) {
        l = lcm(l, Integer(denominator(v)));
    }
    return l;
}

/// Scales a nonzero rational vector to the unique primitive integer vector
/// with the same direction (not sign-normalized).
inline IntVector primitive_integer_vector(const std::vector<Rational>& values) {
    const Integer l = lcm_of_denominators(values);
    IntVector out;
    out.reserve(values.size());
    Integer g = 0;
    for (const auto& v : values) {
        Integer z = numerator(v) * (l / denominator(v));
        g = gcd(g, abs(z));
        out.push_back(std::move(z));
    }
    if (g == 0) {
        throw DomainError("zero vector has no direction");
    }
    for (auto& z : out) {
        z /= g;
    }
    return out;
}

/// Flips the sign so the first nonzero entry is positive. Returns true if
/// the sign was flipped.
inline bool sign_normalize(IntVector& v) {
    for (const auto& z : v) {
        if (z != 0) {
            if (z < 0) {
                for (auto& w : v) {
                    w = -w;
                }
                return true;
            }
            return false;
        }
    }
    return false;
}

inline std::vector<Rational> to_rational(const IntVector& v) {
    return {v.begin(), v.end()};
}

}  // namespace sumlab
