#pragma once

#include <string>
#include <vector>

#include "chowdefect/groebner.hpp"
#include "chowdefect/suite.hpp"

namespace chowdefect {

/// Invertible linear substitution t_j -> sum_i a[i][j] t_i.
class GroupElement {
 public:
  using Matrix = std::vector<std::vector<Coeff>>;

  /// Entries are reduced mod p; throws ContextError unless the matrix is
  /// square of the ring's size and invertible.
  GroupElement(RingPtr ring, const std::vector<std::vector<std::int64_t>>& matrix,
               std::string label);

  [[nodiscard]] const RingPtr& ring() const noexcept { return ring_; }
  [[nodiscard]] const Matrix& matrix() const noexcept { return matrix_; }
  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  /// Every column has a single nonzero entry.
  [[nodiscard]] bool is_monomial() const noexcept { return monomial_; }

  [[nodiscard]] Polynomial apply(const Polynomial& f) const;
  [[nodiscard]] GroupElement compose(const GroupElement& after) const;
  [[nodiscard]] bool is_identity() const;

 private:
  RingPtr ring_;
  Matrix matrix_;
  std::string label_;
  std::vector<Polynomial> images_;
  bool monomial_ = false;
};

/// Adjacent transpositions (i, i+1) and the sign change t1 -> -t1.
std::vector<GroupElement> signed_perm_generators(const RingPtr& ring);

/// t_i -> t_i - (t1+t2+t3+t4)/2 on F_3[t1..t4], i.e. the matrix I + J.
GroupElement f4_reflection(const RingPtr& ring);

bool is_invariant(const Polynomial& f, const std::vector<GroupElement>& gens);
bool is_invariant_mod_ideal(const Polynomial& f, const std::vector<GroupElement>& gens,
                            const IdealHandle& ideal);

inline constexpr std::size_t kMaxInvariantSlice = 50'000;

/// dim { f in S_d : g f = f for every generator }.
std::size_t invariant_dimension(const RingPtr& ring, const std::vector<GroupElement>& gens,
                                unsigned d, std::size_t max_slice = kMaxInvariantSlice);

/// F_4 mod 3 invariant checks: exact and mod (p1, pbar2) invariance of the
/// Toda generators, the r15 relation, and invariant dimensions against the
/// presentation series for d <= max_degree.
SuiteResult f4_invariants_suite(unsigned max_degree = 15);

}  // namespace chowdefect
