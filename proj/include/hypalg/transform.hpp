#pragma once

/// Contraction and reduction as exact rewriting on factor pairs, plus the
/// structural predicates of the decision tree.

#include <optional>
#include <vector>

#include "hypalg/params.hpp"

namespace hypalg {

/// One removal of a batch of parameter pairs at a common difference.
/// removed_factor is the monic divisor taken from c_poly; the matching
/// divisor of d_poly is its shift by -difference (top_minus_bottom) or
/// +difference (bottom_minus_top, reduction steps only).
struct RemovalStep {
    enum class Direction { top_minus_bottom, bottom_minus_top };
    Direction direction = Direction::top_minus_bottom;
    unsigned long difference = 0;
    PolyQ removed_factor;
    unsigned long pairs_removed = 0;
};

struct ContractionResult {
    FactorPair pair;
    std::vector<RemovalStep> steps;
};

/// Removes every pair of parameters with c - d a natural number, smallest
/// differences first; equal-difference pairs are batched through one gcd,
/// which is sound because their removal order does not matter.
ContractionResult contract(const FactorPair& pair);

/// Contraction followed by symmetric removal of pairs with d - c natural.
ContractionResult reduce_full(const FactorPair& pair);

/// No difference c - d lies in N.
bool is_contracted(const FactorPair& pair);

/// No difference c - d lies in Z at all.
bool is_reduced(const FactorPair& pair);

/// The negated-root multisets of both polynomials iff both split completely
/// over Q; otherwise absent.
std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>>
has_rational_parameters(const FactorPair& pair);

/// deg C == deg D (the p = q+1 balance in factor form).
bool degree_balanced(const FactorPair& pair);

} // namespace hypalg
