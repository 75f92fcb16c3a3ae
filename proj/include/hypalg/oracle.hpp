#pragma once

/// Independent desk-scale verification: exact series expansion, an
/// annihilating-polynomial guesser over Q, the denominator prime scan, and
/// the hypergeometric-operator residual.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hypalg/params.hpp"

namespace hypalg {

struct SeriesPrefix {
    std::vector<Rational> coefficients; // u_0 .. u_{m-1}
    HypergeomSpec spec_ref;             // the generating spec
};

/// Exact coefficients through the first-order recurrence. Throws
/// IllDefinedError if a denominator zero is hit before truncation.
SeriesPrefix coefficients(const HypergeomSpec& spec, unsigned long m);

/// Union of the prime factors of all coefficient denominators.
std::set<Integer> denominator_primes(const SeriesPrefix& prefix);

/// Bivariate polynomial over Q in content-normalized (primitive integer)
/// form; coefficient of x^i y^j at entry i*(dy+1)+j.
struct BivariatePolyQ {
    unsigned long dx = 0, dy = 0;
    std::vector<Rational> coeff;

    const Rational& at(unsigned long i, unsigned long j) const {
        return coeff[i * (dy + 1) + j];
    }
    Rational& at(unsigned long i, unsigned long j) {
        return coeff[i * (dy + 1) + j];
    }
    bool operator==(const BivariatePolyQ&) const = default;
    std::string to_string() const;
};

/// Evaluates P(x, f(x)) modulo x^len against the prefix; true iff zero.
bool annihilates(const BivariatePolyQ& p, const std::vector<Rational>& prefix);

/// Solves the exact linear system P(x, f) = 0 mod x^len for bidegree
/// (dx, dy). A nonzero kernel element is re-verified against every
/// available term before being returned; absence is evidence, not proof,
/// of transcendence at this bidegree. Requires len >= (dx+1)(dy+1) + 10.
std::optional<BivariatePolyQ> guess_annihilator(const SeriesPrefix& prefix,
                                                unsigned long dx,
                                                unsigned long dy);

/// Residual of the hypergeometric operator identity applied to the first m
/// coefficients (argument scale folded into the variable): entry n-1 holds
/// C(n-1) v_{n-1} - D(n-1) v_n for n = 1 .. m-1, all zero for a correct
/// engine. For rational-parameter specs the operator polynomials are
/// rebuilt from the extracted parameters; otherwise the factor pair itself
/// is used (the recurrence form of the same identity).
std::vector<Rational> ode_residual(const HypergeomSpec& spec,
                                   unsigned long m);

/// Same residual on a caller-supplied prefix (negative controls).
std::vector<Rational> ode_residual_on_prefix(
    const HypergeomSpec& spec, const std::vector<Rational>& prefix);

} // namespace hypalg
