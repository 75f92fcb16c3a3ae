#pragma once

/// The two arithmetic criteria on rational parameter multisets: the
/// interlacing criterion (IC) and Christol's global-boundedness counting
/// condition.

#include <optional>
#include <string>
#include <vector>

#include "hypalg/rational.hpp"

namespace hypalg {

struct LambdaReport {
    unsigned long lambda = 1;
    /// Scaled values with their brackets, sorted by the bracket order.
    std::vector<std::pair<Rational, BracketValue>> sorted_top;
    std::vector<std::pair<Rational, BracketValue>> sorted_bottom;
    bool satisfied = false;
    std::optional<std::string> failure_witness;
};

struct CriterionReport {
    unsigned long modulus = 1; // least common denominator N
    std::vector<LambdaReport> per_lambda;
    bool satisfied = false;
    std::optional<std::string> witness; // report-level, e.g. size mismatch
};

struct CriteriaOptions {
    bool parallel = false; // evaluate the lambda sweep concurrently
};

/// Strict alternation of the two multisets on the unit circle, top first:
/// <a1> < <b1> < <a2> < ... < <ap> < <bp> after sorting by bracket.
/// Unequal sizes are false by convention; two empty multisets interlace.
bool interlaces(const std::vector<Rational>& top,
                const std::vector<Rational>& bottom);

/// The interlacing criterion: lambda*C and lambda*D interlace for every
/// lambda in [1, N] coprime to N, where N is the least common denominator
/// of the parameters. Reports are assembled in ascending lambda order.
CriterionReport ic_check(const std::vector<Rational>& top,
                         const std::vector<Rational>& bottom,
                         const CriteriaOptions& options = {});

/// Christol's counting condition for almost integrality of an F-form
/// function with p = q+1 rational parameters; b_p = 1 is set internally.
/// For every lambda coprime to N and every k:
///   #{j : lambda a_j <= lambda b_k} - #{j : lambda b_j <= lambda b_k} >= 0
/// in the bracket order.
CriterionReport christol_globally_bounded(const std::vector<Rational>& a,
                                          const std::vector<Rational>& b,
                                          const CriteriaOptions& options = {});

} // namespace hypalg
