#pragma once

/// Dense univariate polynomials over the rationals. Everything the
/// contraction machinery needs: exact division, gcd, argument shifts,
/// rational-root extraction and root bounds.

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hypalg/rational.hpp"

namespace hypalg {

class PolyQ {
public:
    PolyQ() = default; // the zero polynomial
    PolyQ(std::initializer_list<Rational> ascending);
    explicit PolyQ(std::vector<Rational> ascending);

    static PolyQ constant(const Rational& c);
    /// The monomial t.
    static PolyQ variable();
    /// The linear factor t + a (monic; a is the negated root).
    static PolyQ linear_factor(const Rational& a);

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    bool is_zero() const { return coeff_.empty(); }
    bool is_constant() const { return coeff_.size() <= 1; }
    bool is_monic() const { return !coeff_.empty() && coeff_.back() == 1; }

    const std::vector<Rational>& coefficients() const { return coeff_; }
    /// Coefficient of t^i (zero beyond the degree).
    Rational coeff(std::size_t i) const;
    Rational leading() const;

    Rational eval(const Rational& x) const;

    PolyQ operator-() const;
    PolyQ operator+(const PolyQ& rhs) const;
    PolyQ operator-(const PolyQ& rhs) const;
    PolyQ operator*(const PolyQ& rhs) const;
    PolyQ operator*(const Rational& s) const;
    bool operator==(const PolyQ& rhs) const { return coeff_ == rhs.coeff_; }

    /// Euclidean division; divisor must be nonzero.
    std::pair<PolyQ, PolyQ> divmod(const PolyQ& divisor) const;
    /// Division known to be exact; throws Error on a nonzero remainder.
    PolyQ divide_exact(const PolyQ& divisor) const;

    PolyQ monic() const;
    PolyQ derivative() const;
    PolyQ pow(unsigned e) const;

    /// P(t + n) for an integer n.
    PolyQ shift(const Integer& n) const;
    /// P(a t + b).
    PolyQ compose_affine(const Rational& a, const Rational& b) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> coeff_; // ascending, no trailing zeros
};

/// Monic greatest common divisor; inputs not both zero.
PolyQ poly_gcd(const PolyQ& p, const PolyQ& q);

/// All rational roots with multiplicity, sorted ascending. P nonzero.
std::vector<Rational> rational_roots(const PolyQ& p);

/// Cauchy bound 1 + max |a_i| / |lead| on the modulus of the roots
/// (0 would do for constants, but the formula's empty max gives 1).
Rational cauchy_root_bound(const PolyQ& p);

/// ceil(B(P) + B(Q)); every integer n such that P(t) and Q(t+n) share a
/// root satisfies |n| <= result. P, Q nonzero.
unsigned long shift_search_bound(const PolyQ& p, const PolyQ& q);

/// P / gcd(P, P'), monic: same roots, all simple.
PolyQ squarefree_part(const PolyQ& p);

/// Smallest natural m with P(m) == 0, if any.
std::optional<unsigned long> first_natural_root(const PolyQ& p);

/// The monic polynomial with roots negated: +-P(-t) normalized.
PolyQ negate_roots_monic(const PolyQ& p);

} // namespace hypalg
