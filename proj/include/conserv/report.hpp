#pragma once

// Line-oriented, tab-separated rendering of results. Numbers print with six
// significant digits.

#include <span>
#include <string>
#include <vector>

#include "conserv/audit.hpp"
#include "conserv/belief.hpp"
#include "conserv/identification.hpp"
#include "conserv/scenario.hpp"

namespace conserv {

std::string format_number(double x);
/// "(a,b,c)"
std::string format_vector(std::span<const double> v);

/// Joins cells with tabs and appends a newline.
std::string tsv_row(const std::vector<std::string>& cells);

/// Summary line followed by one row per reported witness.
std::string render_audit(const Scenario& sc, const AuditReport& report);
std::string render_violation(const Scenario& sc, const Violation& v);

std::string render_estimate(const Scenario& sc, const DeltaEstimate& est);

}  // namespace conserv
