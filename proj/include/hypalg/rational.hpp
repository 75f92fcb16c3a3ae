#pragma once

/// Exact scalar arithmetic: arbitrary-precision rationals together with the
/// circle bracket <x> and the fractional-part total order used throughout
/// the classifier.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

#include "hypalg/errors.hpp"

namespace hypalg {

using Integer = boost::multiprecision::cpp_int;

// Always stored in lowest terms with positive denominator; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return numerator(q); }
inline Integer den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

/// x is in -N (naturals contain 0), i.e. an integer <= 0.
inline bool is_nonpositive_integer(const Rational& q) {
    return is_integer(q) && q <= 0;
}

inline bool is_natural(const Rational& q) { return is_integer(q) && q >= 0; }

inline Integer floor_int(const Rational& q) {
    Integer n = num(q), d = den(q);
    Integer quo = n / d;          // truncates toward zero
    if (n < 0 && quo * d != n) --quo;
    return quo;
}

inline Integer ceil_int(const Rational& q) { return -floor_int(-q); }

/// Bracket value <x>: a rational in the half-open-from-below interval (0, 1].
/// Integers map to exactly 1; otherwise <x> = x - floor(x).
struct BracketValue {
    Rational value;

    friend bool operator==(const BracketValue& a, const BracketValue& b) {
        return a.value == b.value;
    }
    friend bool operator<(const BracketValue& a, const BracketValue& b) {
        return a.value < b.value;
    }
    friend bool operator<=(const BracketValue& a, const BracketValue& b) {
        return a.value <= b.value;
    }
    friend bool operator>(const BracketValue& a, const BracketValue& b) {
        return a.value > b.value;
    }
};

inline BracketValue bracket(const Rational& x) {
    if (is_integer(x)) return BracketValue{Rational(1)};
    return BracketValue{x - Rational(floor_int(x))};
}

enum class Prec { before, equal, after };

/// Total order: a precedes b iff <a> < <b>, ties broken by the larger real
/// number coming first (so among equal fractional parts the order reverses).
inline Prec prec_compare(const Rational& a, const Rational& b) {
    if (a == b) return Prec::equal;
    BracketValue ba = bracket(a), bb = bracket(b);
    if (ba < bb) return Prec::before;
    if (bb < ba) return Prec::after;
    return a > b ? Prec::before : Prec::after;
}

/// a precedes-or-equals b in the bracket order.
inline bool prec_leq(const Rational& a, const Rational& b) {
    return prec_compare(a, b) != Prec::after;
}

/// Exact "num/den" rendering; the denominator is always printed.
inline std::string to_fraction_string(const Rational& q) {
    return num(q).str() + "/" + den(q).str();
}

/// Human-friendly rendering; integers drop the "/1".
inline std::string to_pretty_string(const Rational& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

/// Parses "n" or "n/d" with optional leading sign. No floating point.
Rational parse_rational_text(const std::string& text);

} // namespace hypalg
