#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "chowdefect/field.hpp"
#include "chowdefect/monomial.hpp"

namespace chowdefect {

/// Weighted-degree orders. Both refine weighted degree; ties are broken by
/// reverse lexicographic (grevlex) or lexicographic (deglex) comparison in
/// the declared variable order.
enum class MonomialOrder { kGrevlex, kDeglex };

/// A graded polynomial ring F_p[x_1..x_n]: prime, variable names, positive
/// weights and a monomial order. Immutable once built; share through
/// `RingPtr`.
class RingContext {
 public:
  RingContext(std::uint32_t prime, std::vector<std::string> names, std::vector<unsigned> weights,
              MonomialOrder order = MonomialOrder::kGrevlex);

  /// F_p[t1..tn] with all weights 1 and grevlex.
  static std::shared_ptr<const RingContext> standard(std::uint32_t prime, std::size_t n,
                                                     MonomialOrder order = MonomialOrder::kGrevlex);

  [[nodiscard]] std::uint32_t prime() const noexcept { return field_.modulus(); }
  [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t num_vars() const noexcept { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
  [[nodiscard]] const std::vector<unsigned>& weights() const noexcept { return weights_; }
  [[nodiscard]] MonomialOrder order() const noexcept { return order_; }
  [[nodiscard]] bool unit_weights() const noexcept;

  /// Index of the variable with the given name, or -1.
  [[nodiscard]] int variable_index(std::string_view name) const noexcept;

  [[nodiscard]] unsigned degree(const Monomial& m) const noexcept {
    return m.weighted_degree(weights_);
  }
  [[nodiscard]] std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept;
  [[nodiscard]] bool greater(const Monomial& a, const Monomial& b) const noexcept {
    return compare(a, b) == std::strong_ordering::greater;
  }

  /// Structural equality (prime, names, weights, order).
  [[nodiscard]] bool same_as(const RingContext& other) const noexcept;

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  std::vector<unsigned> weights_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const RingContext>;

/// All monomials of weighted degree `d`, sorted descending in the ring order.
std::vector<Monomial> monomials_of_degree(const RingContext& ring, unsigned d);

/// Number of monomials of weighted degree `d` (no enumeration).
std::size_t count_monomials(const RingContext& ring, unsigned d);

}  // namespace chowdefect
