#pragma once

/// Interlacing diagrams: one unit circle per lambda, top parameters in red,
/// bottom parameters in blue. Byte output is deterministic for identical
/// reports.

#include <string>

#include "hypalg/criteria.hpp"

namespace hypalg {

std::string interlacing_svg(const CriterionReport& report);

void emit_interlacing_svg(const CriterionReport& report,
                          const std::string& path);

} // namespace hypalg
