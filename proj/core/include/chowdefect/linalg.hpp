#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chowdefect/field.hpp"

namespace chowdefect::linalg {

/// (column, nonzero value) pairs, strictly increasing in column.
using SparseRow = std::vector<std::pair<std::uint32_t, Coeff>>;

/// row - factor * other, both sorted; zeros dropped.
SparseRow sub_scaled(const SparseRow& row, Coeff factor, const SparseRow& other,
                     const PrimeField& field);

/// Same, written into `out` (cleared first) to reuse its storage.
void sub_scaled_into(const SparseRow& row, Coeff factor, const SparseRow& other,
                     const PrimeField& field, SparseRow& out);

/// Incremental row echelon form over F_p. The pivot of a row is its
/// smallest column; stored rows are monic at the pivot.
class EchelonForm {
 public:
  EchelonForm(const PrimeField& field, std::size_t num_cols);

  /// Reduces `row` by the current pivots and keeps it if a nonzero
  /// remainder is left. Returns true when the rank grew.
  bool insert(SparseRow row);

  /// Brings every stored row to reduced form: no row has a nonzero entry
  /// in another row's pivot column.
  void make_reduced();

  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t num_cols() const noexcept { return pivot_row_.size(); }
  [[nodiscard]] const std::vector<SparseRow>& rows() const noexcept { return rows_; }
  [[nodiscard]] bool is_pivot(std::uint32_t col) const { return pivot_row_.at(col) >= 0; }
  /// Stored row whose pivot is `col`, or nullptr.
  [[nodiscard]] const SparseRow* pivot_for(std::uint32_t col) const {
    const std::int32_t p = pivot_row_.at(col);
    return p < 0 ? nullptr : &rows_[static_cast<std::size_t>(p)];
  }

  /// Full reduction of `row` by the stored rows.
  [[nodiscard]] SparseRow reduce(SparseRow row) const;

 private:
  PrimeField field_;
  std::vector<std::int32_t> pivot_row_;
  std::vector<SparseRow> rows_;
  SparseRow scratch_;
};

/// Rank of a sparse matrix.
std::size_t rank(const std::vector<SparseRow>& rows, std::size_t num_cols, const PrimeField& field);

/// Textbook dense Gaussian elimination; test oracle for the sparse path.
std::size_t dense_rank(std::vector<std::vector<Coeff>> matrix, const PrimeField& field);

/// Basis of { lambda : sum_k lambda_k * vectors[k] = 0 }, each returned as
/// a dense coefficient vector of length vectors.size().
std::vector<std::vector<Coeff>> null_combinations(const std::vector<SparseRow>& vectors,
                                                  std::size_t num_cols, const PrimeField& field);

}  // namespace chowdefect::linalg
