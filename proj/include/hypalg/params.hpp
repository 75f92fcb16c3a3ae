#pragma once

/// Parameter model and canonicalization of a hypergeometric function into a
/// factor pair of monic rational polynomials (C, D) with
/// u_{n+1}/u_n = scale * C(n)/D(n).

#include <optional>
#include <variant>
#include <vector>

#include "hypalg/polyq.hpp"

namespace hypalg {

/// A single real algebraic number given by a squarefree monic minimal-style
/// polynomial and an open isolating interval with a sign change.
struct RealAlgebraic {
    PolyQ minpoly;
    Rational lo, hi;
    bool operator==(const RealAlgebraic&) const = default;
};

/// The complete multiset of roots of a rational polynomial (complex roots
/// welcome), taken `multiplicity` times each.
struct RootBlock {
    PolyQ poly;
    unsigned multiplicity = 1;
    bool operator==(const RootBlock&) const = default;
};

class Parameter {
public:
    static Parameter rational(const Rational& value);
    /// Validates: squarefree after normalization, sign change on (lo, hi).
    /// Collapses to a rational parameter when the isolated root is rational.
    static Parameter algebraic(const PolyQ& minpoly, const Rational& lo,
                               const Rational& hi);
    static Parameter block(const PolyQ& poly, unsigned multiplicity = 1);

    bool is_rational() const;
    bool is_real_algebraic() const;
    bool is_block() const;

    const Rational& rational_value() const;
    const RealAlgebraic& real_algebraic() const;
    const RootBlock& root_block() const;

    /// The parameter shifted by a rational r (value + r).
    Parameter shifted(const Rational& r) const;

    bool operator==(const Parameter&) const = default;

private:
    std::variant<Rational, RealAlgebraic, RootBlock> v_;
};

enum class Form { F, scriptF };

struct Origin {
    enum class Kind { pFq, scriptF, recurrence, factor_pair };
    Kind kind = Kind::factor_pair;
    std::vector<Parameter> top, bottom; // pFq / scriptF inputs
    PolyQ rec_a, rec_b;                 // recurrence inputs
    Rational scale{1};
    Rational u0{1};
    bool operator==(const Origin&) const = default;
};

struct FactorPair {
    PolyQ c, d;
    bool operator==(const FactorPair&) const = default;
};

struct HypergeomSpec {
    PolyQ c_poly, d_poly;   // monic
    Rational scale{1};      // nonzero argument multiplier
    Rational leading_value{1};
    Origin origin;

    FactorPair pair() const { return FactorPair{c_poly, d_poly}; }
};

/// Number of scalar parameters a list represents; a conjugate block counts
/// once per root and multiplicity.
std::size_t parameter_count(const std::vector<Parameter>& params);

/// Builds a spec from explicit parameter lists. For F-form the factor (t+1)
/// contributed by n! is appended to the bottom. Real-algebraic singletons are
/// validated for conjugate closure per side.
HypergeomSpec assemble(const std::vector<Parameter>& top,
                       const std::vector<Parameter>& bottom, Form form,
                       const Rational& scale, const Rational& u0);

/// Builds a spec from the first-order recurrence u_{n+1} = A(n)/B(n) u_n.
HypergeomSpec from_recurrence(const PolyQ& a, const PolyQ& b,
                              const Rational& u0);

/// Builds a spec directly from a factor pair (trace replay entry point).
HypergeomSpec from_factor_pair(const PolyQ& c, const PolyQ& d,
                               const Rational& scale, const Rational& u0);

/// Removes shared factors of c_poly and d_poly; the series is unchanged.
HypergeomSpec cancel_common(const HypergeomSpec& spec);

/// Smallest m with u_n = 0 for all n >= m, if any: one past the smallest
/// natural root of c_poly. Expects a canonical (cancelled) spec.
std::optional<unsigned long> truncation_degree(const HypergeomSpec& spec);

} // namespace hypalg
