#pragma once

#include <string>

#include "sumlab/errors.hpp"
#include "sumlab/rational.hpp"

namespace sumlab {

/// rational + coefficient * sqrt(radicand), radicand >= 0. Enough to hold
/// the bounds with a sqrt|A| term exactly.
struct Surd {
    Rational rational = 0;
    Rational coefficient = 0;
    Integer radicand = 0;

    Surd() = default;
    Surd(Rational r) : rational(std::move(r)) {}  // NOLINT: implicit by design
    Surd(Rational r, Rational c, Integer n) : rational(std::move(r)), coefficient(std::move(c)), radicand(std::move(n)) {
        if (radicand < 0) {
            throw DomainError("surd: negative radicand");
        }
        const Integer root = boost::multiprecision::sqrt(radicand);
        if (root * root == radicand) {
            rational += coefficient * Rational(root);
            coefficient = 0;
        }
        if (coefficient == 0) {
            radicand = 0;
        }
    }

    bool is_rational() const { return coefficient == 0; }

    /// Exact sign, by squaring when the two parts disagree.
    int sign() const {
        const int s1 = rational.sign();
        const int s2 = coefficient.sign();
        if (s2 == 0) {
            return s1;
        }
        if (s1 == 0 || s1 == s2) {
            return s2;
        }
        const Rational lhs = rational * rational;
        const Rational rhs = coefficient * coefficient * Rational(radicand);
        if (lhs == rhs) {
            return 0;
        }
        // the larger square wins
        return lhs > rhs ? s1 : s2;
    }

    Surd operator-() const { return Surd(-rational, -coefficient, radicand); }
};

namespace detail {

inline Integer common_radicand(const Surd& a, const Surd& b) {
    if (a.is_rational()) {
        return b.radicand;
    }
    if (b.is_rational() || a.radicand == b.radicand) {
        return a.radicand;
    }
    throw DomainError("surd: arithmetic on different radicands");
}

}  // namespace detail

inline Surd operator+(const Surd& a, const Surd& b) {
    const Integer n = detail::common_radicand(a, b);
    return Surd(a.rational + b.rational, a.coefficient + b.coefficient, n);
}

inline Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }

inline bool operator==(const Surd& a, const Surd& b) { return (a - b).sign() == 0; }
inline bool operator<(const Surd& a, const Surd& b) { return (a - b).sign() < 0; }
inline bool operator>(const Surd& a, const Surd& b) { return b < a; }
inline bool operator<=(const Surd& a, const Surd& b) { return !(b < a); }
inline bool operator>=(const Surd& a, const Surd& b) { return !(a < b); }

/// "p/q", or "p/q - c*sqrt(n)" style when irrational.
inline std::string to_string(const Surd& s) {
    if (s.is_rational()) {
        return to_string(s.rational);
    }
    const bool neg = s.coefficient < 0;
    const Rational c = neg ? Rational(-s.coefficient) : s.coefficient;
    std::string rad = (c == 1 ? std::string() : to_string(c) + "*") + "sqrt(" + to_string(s.radicand) + ")";
    if (s.rational == 0) {
        return (neg ? "-" : "") + rad;
    }
    return to_string(s.rational) + (neg ? " - " : " + ") + rad;
}

}  // namespace sumlab
