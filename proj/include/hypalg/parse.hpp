#pragma once

/// Expression grammar for hypergeometric inputs:
///   <p>F<q>([params], [params]; <rat>*x)     classical form
///   F([params], [params]; <rat>*x)           script form (no n! factor)
///   rec: u0=<rat>; A=<poly>; B=<poly>        first-order recurrence
/// Parameter atoms: exact rationals, sqrt(n) for nonsquare positive n,
/// root(poly, lo, hi), allroots(poly); sums with integer multiples of one
/// atom are allowed ("1+sqrt(2)", "-2*sqrt(3)+1/2").

#include <string>
#include <vector>

#include "hypalg/params.hpp"

namespace hypalg {

struct InputDocument {
    enum class Kind { pFq, scriptF, recurrence };
    Kind kind = Kind::pFq;
    std::vector<Parameter> top, bottom; // pFq / scriptF
    PolyQ rec_a, rec_b;                 // recurrence
    Rational scale{1};
    Rational u0{1};

    bool operator==(const InputDocument&) const = default;
};

InputDocument parse_expression(const std::string& text);

/// Canonical rendering; parsing it back yields an identical document.
std::string print_document(const InputDocument& doc);

HypergeomSpec to_spec(const InputDocument& doc);

/// Parses a single parameter in the atom grammar (used by the JSON loader).
Parameter parse_parameter_text(const std::string& text);

std::string print_parameter(const Parameter& p);

} // namespace hypalg
