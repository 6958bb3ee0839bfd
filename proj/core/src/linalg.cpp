#include "chowdefect/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chowdefect::linalg {

void sub_scaled_into(const SparseRow& row, Coeff factor, const SparseRow& other,
                     const PrimeField& field, SparseRow& out) {
  out.clear();
  out.reserve(row.size() + other.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < row.size() || j < other.size()) {
    if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || other[j].first < row[i].first) {
      const Coeff v = field.neg(field.mul(factor, other[j].second));
      if (v != 0) out.emplace_back(other[j].first, v);
      ++j;
    } else {
      const Coeff v = field.sub(row[i].second, field.mul(factor, other[j].second));
      if (v != 0) out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
}

SparseRow sub_scaled(const SparseRow& row, Coeff factor, const SparseRow& other,
                     const PrimeField& field) {
  SparseRow out;
  sub_scaled_into(row, factor, other, field, out);
  return out;
}

EchelonForm::EchelonForm(const PrimeField& field, std::size_t num_cols)
    : field_(field), pivot_row_(num_cols, -1) {}

bool EchelonForm::insert(SparseRow row) {
  SparseRow& scratch = scratch_;
  while (!row.empty()) {
    const auto [col, value] = row.front();
    if (col >= pivot_row_.size()) throw std::out_of_range("sparse row column out of range");
    const std::int32_t p = pivot_row_[col];
    if (p < 0) {
      const Coeff inv = field_.inv(value);
      for (auto& entry : row) entry.second = field_.mul(entry.second, inv);
      pivot_row_[col] = static_cast<std::int32_t>(rows_.size());
      rows_.push_back(std::move(row));
      return true;
    }
    sub_scaled_into(row, value, rows_[static_cast<std::size_t>(p)], field_, scratch);
    row.swap(scratch);
  }
  return false;
}

SparseRow EchelonForm::reduce(SparseRow row) const {
  std::map<std::uint32_t, Coeff> acc(row.begin(), row.end());
  SparseRow out;
  while (!acc.empty()) {
    const auto [col, value] = *acc.begin();
    acc.erase(acc.begin());
    const std::int32_t p = pivot_row_.at(col);
    if (p < 0) {
      out.emplace_back(col, value);
      continue;
    }
    for (const auto& [c, v] : rows_[static_cast<std::size_t>(p)]) {
      if (c == col) continue;
      Coeff& slot = acc[c];
      slot = field_.sub(slot, field_.mul(value, v));
      if (slot == 0) acc.erase(c);
    }
  }
  return out;
}

void EchelonForm::make_reduced() {
  // Largest pivots first: a row only needs rows whose pivots lie to its
  // right, and those are already reduced when it is visited.
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
    return rows_[a].front().first > rows_[b].front().first;
  });
  for (std::size_t idx : order) {
    SparseRow& row = rows_[idx];
    const std::uint32_t own = row.front().first;
    bool dirty = false;
    for (std::size_t k = 1; k < row.size(); ++k) {
      if (pivot_row_[row[k].first] >= 0) {
        dirty = true;
        break;
      }
    }
    if (!dirty) continue;
    std::map<std::uint32_t, Coeff> acc(row.begin() + 1, row.end());
    SparseRow out{row.front()};
    while (!acc.empty()) {
      const auto [col, value] = *acc.begin();
      acc.erase(acc.begin());
      const std::int32_t p = pivot_row_[col];
      if (p < 0 || col == own) {
        out.emplace_back(col, value);
        continue;
      }
      for (const auto& [c, v] : rows_[static_cast<std::size_t>(p)]) {
        if (c == col) continue;
        Coeff& slot = acc[c];
        slot = field_.sub(slot, field_.mul(value, v));
        if (slot == 0) acc.erase(c);
      }
    }
    row = std::move(out);
  }
}

std::size_t rank(const std::vector<SparseRow>& rows, std::size_t num_cols,
                 const PrimeField& field) {
  EchelonForm form(field, num_cols);
  for (const SparseRow& r : rows) form.insert(r);
  return form.rank();
}

std::size_t dense_rank(std::vector<std::vector<Coeff>> m, const PrimeField& field) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] % field.modulus() == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    const Coeff inv = field.inv(m[r][c] % field.modulus());
    for (Coeff& v : m[r]) v = field.mul(v % field.modulus(), inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      const Coeff f = m[i][c] % field.modulus();
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) {
        m[i][k] = field.sub(m[i][k] % field.modulus(), field.mul(f, m[r][k]));
      }
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<Coeff>> null_combinations(const std::vector<SparseRow>& vectors,
                                                  std::size_t num_cols,
                                                  const PrimeField& field) {
  const std::size_t k = vectors.size();
  EchelonForm form(field, num_cols + k);
  std::vector<std::vector<Coeff>> result;
  for (std::size_t i = 0; i < k; ++i) {
    SparseRow row = vectors[i];
    row.emplace_back(static_cast<std::uint32_t>(num_cols + i), 1);
    // Reduce only in the vector part; a remainder living entirely in the
    // identity block is a null combination.
    while (!row.empty() && row.front().first < num_cols) {
      const SparseRow* pivot = form.pivot_for(row.front().first);
      if (pivot == nullptr) break;
      row = sub_scaled(row, row.front().second, *pivot, field);
    }
    if (!row.empty() && row.front().first >= num_cols) {
      std::vector<Coeff> lambda(k, 0);
      for (const auto& [c, v] : row) lambda[c - num_cols] = v;
      result.push_back(std::move(lambda));
    } else {
      form.insert(std::move(row));
    }
  }
  return result;
}

}  // namespace chowdefect::linalg
