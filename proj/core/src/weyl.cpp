#include "chowdefect/weyl.hpp"

#include <unordered_map>

#include "chowdefect/errors.hpp"
#include "chowdefect/linalg.hpp"
#include "chowdefect/series.hpp"
#include "chowdefect/symfun.hpp"

namespace chowdefect {

GroupElement::GroupElement(RingPtr ring, const std::vector<std::vector<std::int64_t>>& matrix,
                           std::string label)
    : ring_(std::move(ring)), label_(std::move(label)) {
  const std::size_t n = ring_->num_vars();
  const PrimeField& field = ring_->field();
  if (matrix.size() != n) throw ContextError("group element matrix has the wrong size");
  for (const auto& row : matrix) {
    if (row.size() != n) throw ContextError("group element matrix is not square");
    std::vector<Coeff> r;
    for (std::int64_t v : row) r.push_back(field.reduce(v));
    matrix_.push_back(std::move(r));
  }
  if (linalg::dense_rank(matrix_, field) != n) {
    throw ContextError("group element '" + label_ + "' is not invertible mod " +
                       std::to_string(ring_->prime()));
  }
  monomial_ = true;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n; ++i) {
      if (matrix_[i][j] != 0) terms.push_back(Term{Monomial::variable(i), matrix_[i][j]});
    }
    if (terms.size() != 1) monomial_ = false;
    images_.push_back(Polynomial::from_terms(ring_, std::move(terms)));
  }
}

Polynomial GroupElement::apply(const Polynomial& f) const {
  if (f.ring() != ring_ && !f.ring()->same_as(*ring_)) {
    throw ContextError("group element applied to a polynomial from another ring");
  }
  return apply_substitution(std::span<const Polynomial>(images_), f);
}

GroupElement GroupElement::compose(const GroupElement& after) const {
  // (after o this)(t_j) = after(sum_i a_ij t_i) = sum_i a_ij sum_k b_ki t_k.
  const std::size_t n = ring_->num_vars();
  const PrimeField& field = ring_->field();
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      Coeff s = 0;
      for (std::size_t i = 0; i < n; ++i) s = field.add(s, field.mul(after.matrix_[k][i], matrix_[i][j]));
      m[k][j] = s;
    }
  }
  return GroupElement(ring_, m, after.label_ + "*" + label_);
}

bool GroupElement::is_identity() const {
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    for (std::size_t j = 0; j < matrix_.size(); ++j) {
      if (matrix_[i][j] != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

std::vector<GroupElement> signed_perm_generators(const RingPtr& ring) {
  const std::size_t n = ring->num_vars();
  auto identity = [n] {
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  };
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    auto m = identity();
    m[i][i] = m[i + 1][i + 1] = 0;
    m[i][i + 1] = m[i + 1][i] = 1;
    out.emplace_back(ring, m, "s" + std::to_string(i + 1));
  }
  if (n > 0) {
    auto m = identity();
    m[0][0] = -1;
    out.emplace_back(ring, m, "sign1");
  }
  return out;
}

GroupElement f4_reflection(const RingPtr& ring) {
  if (ring->prime() != 3 || ring->num_vars() != 4) {
    throw ContextError("the F_4 reflection needs F_3[t1..t4]");
  }
  std::vector<std::vector<std::int64_t>> m(4, std::vector<std::int64_t>(4, 1));
  for (std::size_t i = 0; i < 4; ++i) m[i][i] = 2;
  return GroupElement(ring, m, "R");
}

bool is_invariant(const Polynomial& f, const std::vector<GroupElement>& gens) {
  return std::all_of(gens.begin(), gens.end(),
                     [&](const GroupElement& g) { return g.apply(f) == f; });
}

bool is_invariant_mod_ideal(const Polynomial& f, const std::vector<GroupElement>& gens,
                            const IdealHandle& ideal) {
  return std::all_of(gens.begin(), gens.end(),
                     [&](const GroupElement& g) { return contains(ideal, g.apply(f) - f); });
}

std::size_t invariant_dimension(const RingPtr& ring, const std::vector<GroupElement>& gens,
                                unsigned d, std::size_t max_slice) {
  const std::size_t size = count_monomials(*ring, d);
  if (size > max_slice) {
    throw SizeError("invariant slice of degree " + std::to_string(d) + " has " +
                    std::to_string(size) + " monomials");
  }
  const auto cols = monomials_of_degree(*ring, d);
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> idx;
  for (std::size_t i = 0; i < cols.size(); ++i) idx.emplace(cols[i], static_cast<std::uint32_t>(i));

  // Current invariant subspace, one polynomial per basis vector. Cheap
  // monomial generators go first so dense ones act on a small space.
  std::vector<Polynomial> space;
  for (const Monomial& m : cols) space.push_back(Polynomial::monomial(ring, m));
  std::vector<const GroupElement*> order;
  for (const auto& g : gens) if (g.is_monomial()) order.push_back(&g);
  for (const auto& g : gens) if (!g.is_monomial()) order.push_back(&g);

  for (const GroupElement* g : order) {
    if (space.empty()) break;
    std::vector<linalg::SparseRow> rows;
    rows.reserve(space.size());
    for (const Polynomial& v : space) {
      const Polynomial diff = g->apply(v) - v;
      linalg::SparseRow row;
      for (const Term& t : diff.terms()) row.emplace_back(idx.at(t.mono), t.coeff);
      rows.push_back(std::move(row));
    }
    const auto kernel = linalg::null_combinations(rows, cols.size(), ring->field());
    std::vector<Polynomial> next;
    for (const auto& lambda : kernel) {
      Polynomial v(ring);
      for (std::size_t k = 0; k < lambda.size(); ++k) {
        if (lambda[k] != 0) v += space[k].scaled(lambda[k]);
      }
      next.push_back(std::move(v));
    }
    space = std::move(next);
  }
  return space.size();
}

SuiteResult f4_invariants_suite(unsigned max_degree) {
  SuiteResult s;
  s.suite = "invariants";
  const RingPtr ring = RingContext::standard(3, 4);
  const GroupElement r = f4_reflection(ring);
  std::vector<GroupElement> gens = signed_perm_generators(ring);
  gens.push_back(r);

  s.add("R^2 = id", r.compose(r).is_identity());
  const auto toda = toda_generators(ring);
  auto get = [&](const std::string& name) -> const Polynomial& {
    for (const auto& c : toda) if (c.name == name) return c.value;
    throw CatalogError(name);
  };
  for (const char* name : {"p1", "pbar2", "pbar5"}) {
    s.add(std::string(name) + " invariant", is_invariant(get(name), gens));
  }
  const IdealHandle ideal(ring, {{"p1", get("p1")}, {"pbar2", get("pbar2")}});
  for (const char* name : {"pbar9", "pbar12"}) {
    s.add(std::string(name) + " invariant mod (p1, pbar2)",
          is_invariant_mod_ideal(get(name), gens, ideal),
          is_invariant(get(name), gens) ? "exactly invariant" : "invariant only modulo the ideal");
  }
  const Polynomial rel = get("r15") - get("p1").pow(3) * get("pbar12") - get("pbar2").pow(3) * get("pbar9");
  s.add("pbar5^3 = p1^3 pbar12 + pbar2^3 pbar9", rel.is_zero());

  // Generators in degrees 2, 4, 10, 18, 24 with one relation in degree 30.
  Series relation(max_degree + 1, 0);
  relation[0] = 1;
  if (max_degree >= 30) relation[30] = -1;
  const Series expected = series_multiply(
      series_eval(SeriesExpr::poly_algebra({2, 4, 10, 18, 24}), max_degree), relation, max_degree);
  for (unsigned d = 0; d <= max_degree; ++d) {
    const std::size_t dim = invariant_dimension(ring, gens, d);
    s.add("dim invariants degree " + std::to_string(d),
          static_cast<std::int64_t>(dim) == expected[d],
          "computed " + std::to_string(dim) + ", presentation " + std::to_string(expected[d]));
  }
  return s;
}

}  // namespace chowdefect
