#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace chowdefect {

/// Truncated power series: coefficient of x^d at index d.
using Series = std::vector<std::int64_t>;

enum class SeriesKind {
  kPolyAlgebra,        // prod 1/(1 - x^w)
  kRegSeqQuotient,     // prod (1 - x^d) / prod (1 - x^w)
  kExterior,           // prod (1 + x^d)
  kExteriorPlus,       // prod (1 + x^d) - 1
  kTruncated,          // 1 + x^g + ... + x^{g(h-1)}
  kFreeModule,         // sum x^d
  kTensor,
  kSum,
  kAugmentationIdeal,  // child with the constant term removed
};

struct SeriesExpr {
  SeriesKind kind = SeriesKind::kFreeModule;
  std::vector<unsigned> weights;  // PolyAlgebra, RegSeqQuotient
  std::vector<unsigned> degrees;  // relation / generator / basis degrees
  unsigned generator_degree = 0;  // Truncated
  unsigned height = 0;            // Truncated
  std::vector<SeriesExpr> children;

  static SeriesExpr poly_algebra(std::vector<unsigned> weights);
  static SeriesExpr regseq(std::vector<unsigned> weights, std::vector<unsigned> degrees);
  /// Regular-sequence quotient of a weight-1 ring with one variable per degree.
  static SeriesExpr regseq(std::vector<unsigned> degrees);
  static SeriesExpr exterior(std::vector<unsigned> degrees);
  static SeriesExpr exterior_plus(std::vector<unsigned> degrees);
  static SeriesExpr truncated(unsigned generator_degree, unsigned height);
  static SeriesExpr free_module(std::vector<unsigned> degrees);
  static SeriesExpr tensor(std::vector<SeriesExpr> children);
  static SeriesExpr sum(std::vector<SeriesExpr> children);
  static SeriesExpr augmentation(SeriesExpr child);
  static SeriesExpr zero() { return free_module({}); }
};

/// Throws ExpressionError for structurally invalid trees.
void validate(const SeriesExpr& e);

/// Coefficients of x^0..x^N.
Series series_eval(const SeriesExpr& e, unsigned N);

/// Text form, e.g. "tensor(freemod(3,4,5), regseq(vars=2, degs=(1,2)))".
SeriesExpr parse_series(std::string_view text);
std::string to_string(const SeriesExpr& e);

Series series_add(const Series& a, const Series& b);
Series series_multiply(const Series& a, const Series& b, unsigned N);
/// a / b to degree N; b must have constant term 1.
Series series_divide(const Series& a, const Series& b, unsigned N);

}  // namespace chowdefect
