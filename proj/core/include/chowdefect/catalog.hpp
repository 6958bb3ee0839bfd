#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chowdefect/groebner.hpp"
#include "chowdefect/hilbert.hpp"
#include "chowdefect/series.hpp"
#include "chowdefect/suite.hpp"

namespace chowdefect {

struct GeneratorSpec {
  std::string name;
  std::string expr;  // polynomial literal, aliases allowed
};

struct ScenarioSpec {
  std::string name;
  std::vector<std::string> aliases;
  std::vector<GeneratorSpec> extra_ker;
  std::vector<GeneratorSpec> extra_im;
  std::string note;
};

/// Graded span of the monomials in generators of the given weights that
/// avoid the listed monomial relations and have total exponent at least
/// min_total. With free_degrees, the series is ((1 + that span) tensor a
/// polynomial algebra on free_degrees) minus its constant term.
struct MonomialBound {
  std::vector<unsigned> weights;
  std::vector<std::vector<unsigned>> relations;
  unsigned min_total = 0;
  std::vector<unsigned> free_degrees;
};

Series bound_series(const MonomialBound& bound, unsigned N);

struct CaseSpec {
  std::string id;
  std::string scenario;  // selected scenario, empty when the case has none
  std::uint32_t prime = 2;
  unsigned num_vars = 1;
  std::vector<GeneratorSpec> ker;
  std::vector<GeneratorSpec> im;
  /// Generators above this degree are left out (stable-range cases).
  std::optional<unsigned> truncate_degree;
  std::vector<unsigned> b_degrees;
  std::optional<SeriesExpr> claimed_D;
  std::optional<SeriesExpr> claimed_flag;    // Hilbert series of S/Ker
  std::optional<SeriesExpr> motive_series;   // S/Ker = motive tensor S/(b)
  std::optional<SeriesExpr> claimed_tilde_D; // compared with D / S/(b)
  std::optional<MonomialBound> bound;        // D / S/(b) <= bound
  bool series_only = false;                  // evaluate `bound` only
  std::vector<ScenarioSpec> scenarios;
  unsigned default_max_degree = 24;
  std::string provenance;
  std::vector<std::string> notes;

  // Filled by materialize().
  RingPtr ring;
  std::shared_ptr<const IdealHandle> ker_ideal;
  std::shared_ptr<const IdealHandle> im_ideal;

  [[nodiscard]] unsigned max_generator_degree() const;
  [[nodiscard]] SeriesExpr regseq_b() const;
};

/// Builds the ring and both ideals for the selected scenario. Throws
/// CatalogError for an unknown scenario and ParseError for bad literals.
void materialize(CaseSpec& spec);

/// Canonical scenario name ("λ1" -> "lambda1"), or CatalogError.
std::string resolve_scenario(const CaseSpec& spec, std::string_view scenario);

/// Built-in case ids; parameterized families are listed with their
/// documented parameter ranges.
std::vector<std::string> list_cases();

/// Materialized built-in case. An empty scenario selects the default.
CaseSpec build_case(std::string_view id, std::string_view scenario = {});

struct ReportRow {
  unsigned d = 0;
  std::optional<std::size_t> hf_ker;
  std::optional<std::size_t> hf_im;
  std::optional<std::int64_t> D;
  std::optional<std::int64_t> claimed;
  std::optional<bool> match;
};

struct BoundRow {
  unsigned d = 0;
  std::int64_t tilde_D = 0;
  std::int64_t bound = 0;
  bool ok = false;
};

struct BoundCheck {
  bool quotient_nonnegative = false;
  bool remainder_zero = false;
  std::vector<BoundRow> rows;
  [[nodiscard]] bool ok() const;
};

/// An extra series comparison that does not gate the verdict.
struct SeriesComparison {
  std::string label;
  std::string expression;
  bool matches = false;
  std::vector<unsigned> mismatched_degrees;
};

struct VerificationReport {
  std::string case_id;
  std::string scenario;
  std::uint32_t prime = 0;
  unsigned max_degree = 0;
  HfMethod method = HfMethod::kBoth;
  bool containment_ok = false;
  std::optional<bool> factorization_ok;
  bool methods_agree = true;
  std::vector<ReportRow> rows;
  std::optional<BoundCheck> bound_check;
  std::vector<SeriesComparison> comparisons;
  std::vector<SuiteResult> suites;
  std::string provenance;
  std::vector<std::string> notes;

  /// Containment, every match flag, factorization and bound all hold.
  [[nodiscard]] bool passed() const;
};

/// Runs containment, the D-series, the claimed-series comparison, the
/// factorization check and the bound check. N must be at least the largest
/// generator degree (CatalogError). Propagates ContainmentError and
/// MethodDisagreement.
VerificationReport verify_case(const CaseSpec& spec, unsigned N, HfMethod method = HfMethod::kBoth);

/// D(split) - D(versal), computed, next to aug(motive) tensor S/(b)
/// evaluated from the versal case. Both series cover d = 0..N.
struct SplitVersalLaw {
  Series difference;
  Series predicted;
  [[nodiscard]] bool holds() const { return difference == predicted; }
};
SplitVersalLaw split_minus_versal(const CaseSpec& split, const CaseSpec& versal, unsigned N,
                                  HfMethod method = HfMethod::kGroebner);

// Case files (JSON).
std::string case_to_json(const CaseSpec& spec);
CaseSpec case_from_json(std::string_view text);
CaseSpec load_case_file(const std::filesystem::path& path);
void save_case_file(const CaseSpec& spec, const std::filesystem::path& path);

}  // namespace chowdefect
