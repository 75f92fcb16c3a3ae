#pragma once

/// JSON schemas: the classification trace document (re-runnable, exact
/// "num/den" rationals, stable field order) and the structured input
/// document.

#include <json.hpp>

#include <string>

#include "hypalg/classify.hpp"
#include "hypalg/oracle.hpp"
#include "hypalg/parse.hpp"

namespace hypalg {

using Json = nlohmann::ordered_json;

inline constexpr int kTraceSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Optional oracle attachments for the trace document.
struct OracleAttachments {
    std::optional<SeriesPrefix> prefix;
    std::optional<CriterionReport> globally_bounded;
    std::optional<BivariatePolyQ> annihilator;
    bool annihilator_searched = false;
    unsigned long guess_dx = 0, guess_dy = 0;
};

Json emit_trace_json(const ClassificationTrace& trace,
                     const OracleAttachments& oracle = {});

/// Rebuilds the canonical factor-pair spec recorded in a trace document;
/// classifying it reproduces the recorded verdict.
HypergeomSpec spec_from_trace_json(const Json& doc);

Json input_document_to_json(const InputDocument& doc);
InputDocument input_document_from_json(const Json& doc);

/// Loads either {"expression": "..."} or a structured input document.
InputDocument load_input_json(const std::string& text);

} // namespace hypalg
