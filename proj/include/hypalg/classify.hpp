#pragma once

/// The top-level decision procedure with a full audit trace, the degenerate
/// Gaussian corollary lists, and the derivative transform.

#include <optional>
#include <string>
#include <vector>

#include "hypalg/criteria.hpp"
#include "hypalg/params.hpp"
#include "hypalg/transform.hpp"

namespace hypalg {

struct Verdict {
    enum class Kind { Polynomial, Algebraic, Transcendental };
    Kind kind = Kind::Transcendental;
    /// For polynomials: u_n = 0 for all n >= degree_bound.
    unsigned long degree_bound = 0;

    bool is_algebraic() const { return kind != Kind::Transcendental; }
    bool operator==(const Verdict&) const = default;
};

std::string to_string(const Verdict& v);

struct DecisionNode {
    enum class Name {
        PolynomialCheck,
        DegreeBalance,
        ContractionRationality,
        Reducedness,
        InterlacingCriterion,
    };
    Name name;
    bool outcome = false; // the "yes" arrow of the tree
    std::string detail;
};

std::string to_string(DecisionNode::Name n);

struct ClassificationTrace {
    std::vector<DecisionNode> nodes; // in tree order; the last is terminal
    std::vector<RemovalStep> contraction_steps;
    std::optional<CriterionReport> ic_report; // only when the IC node ran
    Verdict verdict;

    FactorPair canonical;  // input pair after removing shared factors
    FactorPair contracted; // after full contraction
    std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>>
        contracted_params; // when rational
    bool raw_contracted = false; // predicates on the canonical pair,
    bool raw_reduced = false;    // for report prose
    bool truncation_shields_denominator_zero = false;
    Rational scale{1};
    Rational leading_value{1};
};

struct ClassifyOptions {
    bool parallel_lambda = false;
};

/// Runs the decision tree: polynomial check, degree balance, contraction,
/// rationality of the contraction, reducedness, interlacing criterion.
/// Throws IllDefinedError for series with an unshielded denominator zero.
ClassificationTrace classify(const HypergeomSpec& spec,
                             const ClassifyOptions& options = {});

/// The exhaustive degenerate-Gaussian case lists for 2F1([alpha,beta],
/// [gamma]). Returns a verdict when one of gamma-alpha, gamma-beta, alpha,
/// beta is an integer (the reducible case); absent otherwise. Every
/// applicable list parameterization is consulted; the function is algebraic
/// exactly when some case fires.
std::optional<Verdict> gaussian_degenerate_verdict(const Rational& alpha,
                                                   const Rational& beta,
                                                   const Rational& gamma);

/// The spec of F'(x): F-form parameters shifted by +1 and the leading value
/// scaled so the series is exactly the derivative of the input's series.
HypergeomSpec derivative_spec(const HypergeomSpec& spec);

} // namespace hypalg
