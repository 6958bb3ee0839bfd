#pragma once

#include <string>
#include <vector>

#include "chowdefect/catalog.hpp"
#include "chowdefect/suite.hpp"

namespace chowdefect {

enum class ReportFormat { kText, kJson };

/// One verification report. JSON field order is fixed.
std::string emit_report(const VerificationReport& report, ReportFormat format);

/// Several reports: a JSON array, or text tables separated by blank lines.
std::string emit_reports(const std::vector<VerificationReport>& reports, ReportFormat format);

/// Suite tables; JSON is {"suites": {...}, "passed": bool}.
std::string emit_suites(const std::vector<SuiteResult>& suites, ReportFormat format);

}  // namespace chowdefect
