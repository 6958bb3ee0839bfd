#include "chowdefect/hilbert.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "chowdefect/errors.hpp"
#include "chowdefect/linalg.hpp"

namespace chowdefect {

namespace {

void check_slice(const RingContext& ring, unsigned d) {
  if (count_monomials(ring, d) > kMaxSliceMonomials) {
    throw SizeError("degree " + std::to_string(d) + " slice has more than " +
                    std::to_string(kMaxSliceMonomials) + " monomials");
  }
}

std::size_t count_standard(const RingContext& ring, const std::vector<Monomial>& leads, unsigned d) {
  check_slice(ring, d);
  std::size_t n = 0;
  for (const Monomial& m : monomials_of_degree(ring, d)) {
    const bool in_ideal = std::any_of(leads.begin(), leads.end(),
                                      [&](const Monomial& l) { return l.divides(m); });
    if (!in_ideal) ++n;
  }
  return n;
}

using ColumnIndex = std::unordered_map<Monomial, std::uint32_t, MonomialHash>;

ColumnIndex index_columns(const std::vector<Monomial>& cols) {
  ColumnIndex idx;
  idx.reserve(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) idx.emplace(cols[i], static_cast<std::uint32_t>(i));
  return idx;
}

// Row for m*g in the degree slice indexed by `idx`. Columns follow the
// descending monomial order, so the row comes out sorted.
linalg::SparseRow row_of(const Polynomial& g, const Monomial& m, const ColumnIndex& idx) {
  linalg::SparseRow row;
  row.reserve(g.size());
  for (const Term& t : g.terms()) row.emplace_back(idx.at(t.mono * m), t.coeff);
  return row;
}

std::vector<linalg::SparseRow> macaulay_rows(const IdealHandle& ideal, unsigned d,
                                             const ColumnIndex& idx) {
  const RingContext& ring = *ideal.ring();
  std::vector<linalg::SparseRow> rows;
  for (const auto& g : ideal.generators()) {
    const unsigned dg = g.poly.degree();
    if (dg > d) continue;
    check_slice(ring, d - dg);
    for (const Monomial& m : monomials_of_degree(ring, d - dg)) {
      rows.push_back(row_of(g.poly, m, idx));
    }
  }
  return rows;
}

}  // namespace

std::size_t hf_staircase(const IdealHandle& ideal, unsigned d) {
  const auto basis = ideal.basis(d);
  return count_standard(*ideal.ring(), basis->leading_monomials(), d);
}

std::vector<std::size_t> hilbert_function_staircase(const IdealHandle& ideal, unsigned N) {
  const auto basis = ideal.basis(N);
  const auto leads = basis->leading_monomials();
  std::vector<std::size_t> out;
  out.reserve(N + 1);
  for (unsigned d = 0; d <= N; ++d) out.push_back(count_standard(*ideal.ring(), leads, d));
  return out;
}

std::size_t hf_linalg(const IdealHandle& ideal, unsigned d) {
  const RingContext& ring = *ideal.ring();
  check_slice(ring, d);
  const auto cols = monomials_of_degree(ring, d);
  const auto idx = index_columns(cols);
  return cols.size() - linalg::rank(macaulay_rows(ideal, d, idx), cols.size(), ring.field());
}

std::size_t hf_linalg_dense(const IdealHandle& ideal, unsigned d) {
  const RingContext& ring = *ideal.ring();
  check_slice(ring, d);
  const auto cols = monomials_of_degree(ring, d);
  const auto idx = index_columns(cols);
  std::vector<std::vector<Coeff>> dense;
  for (const auto& row : macaulay_rows(ideal, d, idx)) {
    std::vector<Coeff> r(cols.size(), 0);
    for (const auto& [c, v] : row) r[c] = v;
    dense.push_back(std::move(r));
  }
  return cols.size() - linalg::dense_rank(std::move(dense), ring.field());
}

std::vector<std::size_t> hilbert_function_linalg(const IdealHandle& ideal, unsigned N) {
  const RingPtr& ring = ideal.ring();
  const auto& weights = ring->weights();
  const unsigned max_w = *std::max_element(weights.begin(), weights.end());

  struct Slice {
    std::vector<Monomial> cols;
    std::vector<linalg::SparseRow> rows;  // reduced echelon basis of I_d
  };
  // slices[d % (max_w + 1)] holds degree d while it can still be needed.
  std::vector<Slice> window(max_w + 1);
  std::vector<std::size_t> out;
  out.reserve(N + 1);

  for (unsigned d = 0; d <= N; ++d) {
    check_slice(*ring, d);
    Slice cur;
    cur.cols = monomials_of_degree(*ring, d);
    const auto idx = index_columns(cur.cols);
    linalg::EchelonForm form(ring->field(), cur.cols.size());
    for (std::size_t i = 0; i < ring->num_vars(); ++i) {
      if (weights[i] > d) continue;
      const Slice& prev = window[(d - weights[i]) % (max_w + 1)];
      const Monomial xi = Monomial::variable(i);
      for (const auto& r : prev.rows) {
        linalg::SparseRow row;
        row.reserve(r.size());
        for (const auto& [c, v] : r) row.emplace_back(idx.at(prev.cols[c] * xi), v);
        form.insert(std::move(row));
      }
    }
    for (const auto& g : ideal.generators()) {
      if (g.poly.degree() == d) form.insert(row_of(g.poly, Monomial{}, idx));
    }
    form.make_reduced();
    out.push_back(cur.cols.size() - form.rank());
    cur.rows = form.rows();
    window[d % (max_w + 1)] = std::move(cur);
  }
  return out;
}

std::string to_string(HfMethod m) {
  switch (m) {
    case HfMethod::kGroebner: return "groebner";
    case HfMethod::kLinalg: return "linalg";
    case HfMethod::kBoth: return "both";
  }
  return "?";
}

HfMethod parse_hf_method(std::string_view text) {
  if (text == "groebner") return HfMethod::kGroebner;
  if (text == "linalg") return HfMethod::kLinalg;
  if (text == "both") return HfMethod::kBoth;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

std::vector<std::size_t> hilbert_function(const IdealHandle& ideal, unsigned N, HfMethod method) {
  if (method == HfMethod::kGroebner) return hilbert_function_staircase(ideal, N);
  if (method == HfMethod::kLinalg) return hilbert_function_linalg(ideal, N);
  const auto a = hilbert_function_staircase(ideal, N);
  const auto b = hilbert_function_linalg(ideal, N);
  for (unsigned d = 0; d <= N; ++d) {
    if (a[d] != b[d]) {
      std::string gens;
      for (const auto& g : ideal.generators()) gens += " " + g.name + "=" + g.poly.to_string() + ";";
      throw MethodDisagreement("Hilbert function disagreement in degree " + std::to_string(d) +
                               ": staircase " + std::to_string(a[d]) + ", linear algebra " +
                               std::to_string(b[d]) + "; generators:" + gens);
    }
  }
  return a;
}

DSeries d_series(const IdealHandle& ker, const IdealHandle& im, unsigned N, HfMethod method) {
  if (ker.ring() != im.ring() && !ker.ring()->same_as(*im.ring())) {
    throw ContextError("Ker and Im live in different rings");
  }
  unsigned top = 0;
  for (const auto& g : im.generators()) top = std::max(top, g.poly.degree());
  const auto kb = ker.basis(top);
  for (const auto& g : im.generators()) {
    if (!normal_form(g.poly, *kb).is_zero()) {
      throw ContainmentError("generator " + g.name + " = " + g.poly.to_string() +
                             " of Im is not in Ker");
    }
  }
  DSeries out;
  out.max_degree = N;
  out.hf_ker = hilbert_function(ker, N, method);
  out.hf_im = hilbert_function(im, N, method);
  out.D.resize(N + 1);
  for (unsigned d = 0; d <= N; ++d) {
    out.D[d] = static_cast<std::int64_t>(out.hf_im[d]) - static_cast<std::int64_t>(out.hf_ker[d]);
    if (out.D[d] < 0) throw std::logic_error("negative D despite containment");
  }
  return out;
}

}  // namespace chowdefect
