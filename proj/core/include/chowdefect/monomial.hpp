#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

namespace chowdefect {

inline constexpr std::size_t kMaxVariables = 12;

/// Exponent vector. Entries past the ring's variable count stay zero, so
/// equality and hashing do not need the ring.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t index, unsigned power = 1);

  [[nodiscard]] Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, unsigned e);

  [[nodiscard]] unsigned total_degree() const noexcept;
  [[nodiscard]] unsigned weighted_degree(std::span<const unsigned> weights) const noexcept;
  [[nodiscard]] bool is_one() const noexcept;

  /// True when this monomial divides `other`.
  [[nodiscard]] bool divides(const Monomial& other) const noexcept;
  [[nodiscard]] bool coprime(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; `b` must divide `a`.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
  friend Monomial gcd(const Monomial& a, const Monomial& b) noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  [[nodiscard]] std::size_t hash() const noexcept;
  [[nodiscard]] const std::array<Exponent, kMaxVariables>& exponents() const noexcept {
    return exps_;
  }

 private:
  std::array<Exponent, kMaxVariables> exps_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace chowdefect
