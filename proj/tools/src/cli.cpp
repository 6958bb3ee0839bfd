#include "chowdefect/cli.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>
#include <variant>

#include <CLI11.hpp>

#include "chowdefect/catalog.hpp"
#include "chowdefect/errors.hpp"
#include "chowdefect/report.hpp"
#include "chowdefect/steenrod.hpp"
#include "chowdefect/weyl.hpp"

namespace chowdefect::cli {

namespace {

struct RunConfig {
  std::vector<std::string> cases;
  bool all = false;
  std::string scenario;
  unsigned max_degree = 24;
  std::string method = "both";
  std::string format = "text";
  std::string output;
  unsigned jobs = 0;
  unsigned dickson_h = 0;
  unsigned invariants_degree = 15;
  std::string case_path;
};

struct Job {
  std::string id;
  std::string scenario;
};

struct JobOutcome {
  std::optional<VerificationReport> report;
  int code = kExitPass;
  std::string diagnostic;
};

JobOutcome run_job(const std::function<CaseSpec()>& make, unsigned N, HfMethod method) {
  JobOutcome o;
  try {
    const CaseSpec spec = make();
    o.report = verify_case(spec, N, method);
    o.code = o.report->passed() ? kExitPass : kExitMismatch;
  } catch (const ContainmentError& e) {
    o.code = kExitMismatch;
    o.diagnostic = std::string("containment failure: ") + e.what();
  } catch (const MethodDisagreement& e) {
    o.code = kExitMismatch;
    o.diagnostic = std::string("method disagreement: ") + e.what();
  } catch (const Error& e) {
    o.code = kExitUsage;
    o.diagnostic = e.what();
  }
  return o;
}

// Runs the jobs on a small pool; outcomes come back in input order.
std::vector<JobOutcome> run_pool(const std::vector<std::function<CaseSpec()>>& makers, unsigned N,
                                 HfMethod method, unsigned jobs) {
  std::vector<JobOutcome> out(makers.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(makers.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < makers.size(); i = next++) out[i] = run_job(makers[i], N, method);
  };
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return out;
}

int write_output(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
  if (cfg.output.empty()) {
    out << text;
    return kExitPass;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) {
    err << "error: cannot write " << cfg.output << "\n";
    return kExitUsage;
  }
  f << text;
  return kExitPass;
}

ReportFormat format_of(const RunConfig& cfg) {
  return cfg.format == "json" ? ReportFormat::kJson : ReportFormat::kText;
}

int finish_reports(const RunConfig& cfg, const std::vector<JobOutcome>& outcomes, std::ostream& out,
                   std::ostream& err) {
  int code = kExitPass;
  std::vector<VerificationReport> reports;
  for (const auto& o : outcomes) {
    if (!o.diagnostic.empty()) err << "error: " << o.diagnostic << "\n";
    if (o.report) reports.push_back(*o.report);
    code = std::max(code, o.code);
  }
  if (!reports.empty()) {
    const int w = write_output(cfg, emit_reports(reports, format_of(cfg)), out, err);
    code = std::max(code, w);
  }
  return code;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<Job> jobs;
  if (cfg.all) {
    for (const auto& id : list_cases()) {
      const CaseSpec probe = build_case(id);
      if (probe.scenarios.empty()) {
        jobs.push_back({id, ""});
      } else {
        for (const auto& s : probe.scenarios) jobs.push_back({id, s.name});
      }
    }
  }
  for (const auto& id : cfg.cases) jobs.push_back({id, cfg.scenario});
  if (jobs.empty()) {
    err << "error: verify needs --case or --all\n";
    return kExitUsage;
  }
  std::vector<std::function<CaseSpec()>> makers;
  for (const auto& j : jobs) makers.push_back([j] { return build_case(j.id, j.scenario); });
  return finish_reports(cfg, run_pool(makers, cfg.max_degree, parse_hf_method(cfg.method), cfg.jobs),
                        out, err);
}

int cmd_case_file(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string path = cfg.case_path;
  const std::string scenario = cfg.scenario;
  std::vector<std::function<CaseSpec()>> makers{[path, scenario] {
    CaseSpec c = load_case_file(path);
    if (!scenario.empty()) {
      c.scenario = scenario;
      materialize(c);
    }
    return c;
  }};
  return finish_reports(cfg, run_pool(makers, cfg.max_degree, parse_hf_method(cfg.method), 1), out,
                        err);
}

int finish_suites(const RunConfig& cfg, const std::vector<SuiteResult>& suites, std::ostream& out,
                  std::ostream& err) {
  const int w = write_output(cfg, emit_suites(suites, format_of(cfg)), out, err);
  bool all = true;
  for (const auto& s : suites) all = all && s.all_passed();
  return std::max(w, all ? kExitPass : kExitMismatch);
}

std::vector<char*> as_argv(std::vector<std::string>& args) {
  std::vector<char*> v;
  for (auto& a : args) v.push_back(a.data());
  return v;
}

}  // namespace

int run(const std::vector<std::string>& argv_in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Degree-wise verification of Ker/Im defect quotients in mod-p Chow rings"};
  app.name("chowdefect");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output,-o", cfg.output, "Write the report to this file");

  auto* list = app.add_subcommand("list-cases", "List built-in case ids");
  auto* verify = app.add_subcommand("verify", "Verify catalog cases");
  verify->add_option("--case", cfg.cases, "Case id (repeatable)");
  verify->add_flag("--all", cfg.all, "Every built-in case and scenario");
  verify->add_option("--scenario", cfg.scenario, "Scenario name");
  verify->add_option("--max-degree,-N", cfg.max_degree, "Truncation degree")
      ->check(CLI::Range(1u, 200u));
  verify->add_option("--method", cfg.method, "Hilbert function method")
      ->check(CLI::IsMember({"groebner", "linalg", "both"}));
  verify->add_option("--jobs,-j", cfg.jobs, "Worker threads (0 = hardware)");
  auto* steen = app.add_subcommand("steenrod-check", "Reduced-power and Milnor operation suites");
  auto* dick = app.add_subcommand("dickson-check", "Dickson/Milnor suite for one rank");
  dick->set_help_flag("--help", "Print this help message and exit");
  dick->add_option("--h", cfg.dickson_h, "Rank h")->required()->check(CLI::Range(1u, 4u));
  auto* inv = app.add_subcommand("invariants-check", "F4 Weyl invariant suite");
  inv->add_option("--max-degree,-N", cfg.invariants_degree, "Largest degree for dimension counts")
      ->check(CLI::Range(0u, 40u));
  auto* file = app.add_subcommand("case-file", "Verify a JSON case file");
  file->add_option("path", cfg.case_path, "Case file")->required();
  file->add_option("--scenario", cfg.scenario, "Scenario name");
  file->add_option("--max-degree,-N", cfg.max_degree, "Truncation degree")
      ->check(CLI::Range(1u, 200u));
  file->add_option("--method", cfg.method, "Hilbert function method")
      ->check(CLI::IsMember({"groebner", "linalg", "both"}));

  std::vector<std::string> args = argv_in;
  if (args.empty()) args.emplace_back("chowdefect");
  auto argv = as_argv(args);
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*list) {
      std::string text;
      for (const auto& id : list_cases()) text += id + "\n";
      return write_output(cfg, text, out, err);
    }
    if (*verify) return cmd_verify(cfg, out, err);
    if (*file) return cmd_case_file(cfg, out, err);
    if (*steen) {
      std::vector<SuiteResult> suites{steenrod_suite()};
      for (unsigned h = 1; h <= 3; ++h) suites.push_back(dickson_suite(h));
      return finish_suites(cfg, suites, out, err);
    }
    if (*dick) return finish_suites(cfg, {dickson_suite(cfg.dickson_h)}, out, err);
    if (*inv) return finish_suites(cfg, {f4_invariants_suite(cfg.invariants_degree)}, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace chowdefect::cli
