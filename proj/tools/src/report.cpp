#include "chowdefect/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace chowdefect {

namespace {

using Json = nlohmann::ordered_json;

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json suite_json(const SuiteResult& s) {
  Json checks = Json::array();
  for (const auto& c : s.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"passed", s.all_passed()}, {"checks", checks}};
}

Json suites_json(const std::vector<SuiteResult>& suites) {
  Json j = Json::object();
  for (const auto& s : suites) j[s.suite] = suite_json(s);
  return j;
}

Json report_json(const VerificationReport& r) {
  Json j;
  j["case"] = r.case_id;
  j["scenario"] = r.scenario.empty() ? Json(nullptr) : Json(r.scenario);
  j["prime"] = r.prime;
  j["max_degree"] = r.max_degree;
  j["method"] = to_string(r.method);
  j["containment_ok"] = r.containment_ok;
  j["factorization_ok"] = opt(r.factorization_ok);
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"d", row.d},
                    {"hf_ker_quotient", opt(row.hf_ker)},
                    {"hf_im_quotient", opt(row.hf_im)},
                    {"D", opt(row.D)},
                    {"claimed", opt(row.claimed)},
                    {"match", opt(row.match)}});
  }
  j["rows"] = rows;
  if (r.bound_check) {
    Json b;
    b["quotient_nonnegative"] = r.bound_check->quotient_nonnegative;
    b["remainder_zero"] = r.bound_check->remainder_zero;
    b["ok"] = r.bound_check->ok();
    Json brows = Json::array();
    for (const auto& row : r.bound_check->rows) {
      brows.push_back({{"d", row.d}, {"tilde_D", row.tilde_D}, {"bound", row.bound}, {"ok", row.ok}});
    }
    b["rows"] = brows;
    j["bound_check"] = b;
  } else {
    j["bound_check"] = nullptr;
  }
  Json cmps = Json::array();
  for (const auto& c : r.comparisons) {
    cmps.push_back({{"label", c.label},
                    {"expression", c.expression},
                    {"matches", c.matches},
                    {"mismatched_degrees", c.mismatched_degrees}});
  }
  j["comparisons"] = cmps;
  j["suites"] = suites_json(r.suites);
  j["notes"] = r.notes;
  j["provenance"] = r.provenance;
  j["passed"] = r.passed();
  return j;
}

template <class T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "-";
  if constexpr (std::is_same_v<T, bool>) {
    return *v ? "yes" : "NO";
  } else {
    return std::to_string(*v);
  }
}

std::string yes_no(bool b) { return b ? "ok" : "FAILED"; }

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "case " << r.case_id;
  if (!r.scenario.empty()) os << "  scenario " << r.scenario;
  os << "  p=" << r.prime << "  N=" << r.max_degree << "  method=" << to_string(r.method) << "\n";
  if (!r.provenance.empty()) os << "  " << r.provenance << "\n";
  os << "containment: " << yes_no(r.containment_ok);
  if (r.factorization_ok) os << "  factorization: " << yes_no(*r.factorization_ok);
  os << "\n";
  os << std::setw(4) << "d" << std::setw(12) << "HF(S/Ker)" << std::setw(12) << "HF(S/Im)"
     << std::setw(10) << "D" << std::setw(10) << "claimed" << std::setw(7) << "match" << "\n";
  for (const auto& row : r.rows) {
    os << std::setw(4) << row.d << std::setw(12) << cell(row.hf_ker) << std::setw(12)
       << cell(row.hf_im) << std::setw(10) << cell(row.D) << std::setw(10) << cell(row.claimed)
       << std::setw(7) << cell(row.match) << "\n";
  }
  if (r.bound_check) {
    const auto& b = *r.bound_check;
    os << "bound check: quotient nonnegative " << yes_no(b.quotient_nonnegative)
       << ", remainder zero " << yes_no(b.remainder_zero) << "\n";
    os << std::setw(4) << "d" << std::setw(10) << "tilde D" << std::setw(10) << "bound"
       << std::setw(7) << "ok" << "\n";
    for (const auto& row : b.rows) {
      os << std::setw(4) << row.d << std::setw(10) << row.tilde_D << std::setw(10) << row.bound
         << std::setw(7) << (row.ok ? "yes" : "NO") << "\n";
    }
  }
  for (const auto& c : r.comparisons) {
    os << "comparison (" << c.label << "): " << (c.matches ? "matches" : "differs");
    if (!c.matches) {
      os << " in degrees";
      for (unsigned d : c.mismatched_degrees) os << " " << d;
    }
    os << "\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  os << "verdict: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string suite_text(const SuiteResult& s) {
  std::ostringstream os;
  os << "suite " << s.suite << "\n";
  std::size_t width = 0;
  for (const auto& c : s.checks) width = std::max(width, c.name.size());
  for (const auto& c : s.checks) {
    os << "  " << std::left << std::setw(static_cast<int>(width)) << c.name << std::right << "  "
       << (c.passed ? "pass" : "FAIL");
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << "  " << (s.all_passed() ? "all passed" : "FAILURES") << "\n";
  return os.str();
}

}  // namespace

std::string emit_report(const VerificationReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) return report_json(report).dump(2) + "\n";
  return report_text(report);
}

std::string emit_reports(const std::vector<VerificationReport>& reports, ReportFormat format) {
  if (reports.size() == 1) return emit_report(reports.front(), format);
  if (format == ReportFormat::kJson) {
    Json a = Json::array();
    for (const auto& r : reports) a.push_back(report_json(r));
    return a.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) out += "\n";
    out += report_text(reports[i]);
  }
  return out;
}

std::string emit_suites(const std::vector<SuiteResult>& suites, ReportFormat format) {
  bool all = true;
  for (const auto& s : suites) all = all && s.all_passed();
  if (format == ReportFormat::kJson) {
    Json j;
    j["suites"] = suites_json(suites);
    j["passed"] = all;
    return j.dump(2) + "\n";
  }
  std::string out;
  for (const auto& s : suites) out += suite_text(s);
  out += all ? "verdict: PASS\n" : "verdict: FAIL\n";
  return out;
}

}  // namespace chowdefect
