#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chowdefect/ring.hpp"

namespace chowdefect {

struct Term {
  Monomial mono;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over F_p. Terms are kept sorted descending in the
/// ring's monomial order with no zero coefficients, so equality of values
/// is equality of representations.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, std::int64_t c = 1);
  /// Builds from arbitrary (unsorted, possibly repeated) terms.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  [[nodiscard]] const RingPtr& ring() const noexcept { return ring_; }
  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const noexcept;

  [[nodiscard]] const Term& leading_term() const;
  [[nodiscard]] const Monomial& leading_monomial() const { return leading_term().mono; }
  [[nodiscard]] Coeff leading_coeff() const { return leading_term().coeff; }

  /// Largest weighted degree of a term; 0 for the zero polynomial.
  [[nodiscard]] unsigned degree() const noexcept;
  [[nodiscard]] bool is_homogeneous() const noexcept;
  /// Coefficient of `m` (0 if absent).
  [[nodiscard]] Coeff coefficient(const Monomial& m) const noexcept;

  [[nodiscard]] Polynomial homogeneous_component(unsigned d) const;
  [[nodiscard]] Polynomial scaled(Coeff c) const;
  [[nodiscard]] Polynomial times_monomial(const Monomial& m, Coeff c = 1) const;
  [[nodiscard]] Polynomial monic() const;
  [[nodiscard]] Polynomial pow(unsigned e) const;

  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g);

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f);
  friend bool operator==(const Polynomial& f, const Polynomial& g);

  /// Human-readable and re-parseable form, e.g. "t1^2 + 2*t1*t2 + 1".
  [[nodiscard]] std::string to_string() const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);
  void require_same_ring(const Polynomial& g) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Unique ring endomorphism sending variable i to images[i], applied to f.
/// Throws SubstitutionError when an image is missing or lives elsewhere.
Polynomial apply_substitution(std::span<const std::optional<Polynomial>> images,
                              const Polynomial& f);
Polynomial apply_substitution(std::span<const Polynomial> images, const Polynomial& f);
/// Named form: every variable of f's ring must be a key.
Polynomial apply_substitution(const std::map<std::string, Polynomial>& images,
                              const Polynomial& f);

/// Polynomials all drawn from one ring? Throws ContextError otherwise.
void require_common_ring(std::span<const Polynomial> polys);

}  // namespace chowdefect
