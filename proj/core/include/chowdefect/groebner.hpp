#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chowdefect/polynomial.hpp"

namespace chowdefect {

struct NamedPolynomial {
  std::string name;
  Polynomial poly;
};

struct GroebnerOptions {
  /// Drop S-pairs and generators of degree above the cap. The result is
  /// then a basis of the ideal in degrees <= cap only.
  std::optional<unsigned> degree_cap;
  /// Record, for every basis element, its expression in the input
  /// generators. Costly; meant for verification on small inputs.
  bool track_cofactors = false;
};

/// A reduced, monic Groebner basis, sorted by ascending leading monomial.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> elements;
  /// Set when work above this degree was discarded.
  std::optional<unsigned> truncated_at;
  /// cofactors[i][j]: elements[i] = sum_j cofactors[i][j] * inputs[j].
  /// Empty unless cofactor tracking was requested.
  std::vector<std::vector<Polynomial>> cofactors;

  [[nodiscard]] bool is_truncated() const noexcept { return truncated_at.has_value(); }
  /// True when the basis is valid for every homogeneous degree <= d.
  [[nodiscard]] bool valid_through(unsigned d) const noexcept {
    return !truncated_at || d <= *truncated_at;
  }
  [[nodiscard]] std::vector<Monomial> leading_monomials() const;
};

/// Buchberger's algorithm for homogeneous input. Pairs are handled by
/// increasing degree (normal strategy), ties broken by the order of the
/// lcm and then by index, so the output is deterministic. Zero inputs are
/// ignored.
GroebnerBasis groebner_basis(const RingPtr& ring, std::span<const Polynomial> generators,
                             const GroebnerOptions& options = {});

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Full multivariate division: f = sum quotients[k] * divisors[k] + remainder,
/// where no term of the remainder is divisible by a divisor's leading monomial.
Division divide(const Polynomial& f, std::span<const Polynomial> divisors);

/// Remainder of f on division by the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

/// Every S-polynomial (up to the truncation degree) reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis);

/// A homogeneous ideal given by named generators, with a lazily computed
/// Groebner basis. Generators that are zero are dropped. The cache is
/// guarded so a handle may be shared between threads.
class IdealHandle {
 public:
  IdealHandle(RingPtr ring, std::vector<NamedPolynomial> generators);

  [[nodiscard]] const RingPtr& ring() const noexcept { return ring_; }
  [[nodiscard]] const std::vector<NamedPolynomial>& generators() const noexcept {
    return generators_;
  }
  [[nodiscard]] std::vector<Polynomial> generator_polynomials() const;
  [[nodiscard]] unsigned max_generator_degree() const noexcept;

  /// Basis valid at least through `degree` (complete basis if nullopt).
  [[nodiscard]] std::shared_ptr<const GroebnerBasis> basis(
      std::optional<unsigned> degree = std::nullopt) const;

 private:
  RingPtr ring_;
  std::vector<NamedPolynomial> generators_;
  mutable std::mutex mutex_;
  mutable std::shared_ptr<const GroebnerBasis> cached_;
};

Polynomial normal_form(const Polynomial& f, const IdealHandle& ideal);
bool contains(const IdealHandle& ideal, const Polynomial& f);
/// True iff every generator of `inner` lies in `outer`.
bool ideal_containment(const IdealHandle& inner, const IdealHandle& outer);
/// Minimal generators of the leading-monomial ideal, ascending.
std::vector<Monomial> leading_term_ideal(const IdealHandle& ideal,
                                         std::optional<unsigned> degree = std::nullopt);

}  // namespace chowdefect
