#pragma once

#include <cstdint>
#include <iosfwd>

namespace chowdefect {

using Coeff = std::uint32_t;

/// Arithmetic in Z/p for a prime p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  [[nodiscard]] std::uint32_t modulus() const noexcept { return p_; }

  [[nodiscard]] Coeff reduce(std::int64_t v) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    return static_cast<Coeff>(r < 0 ? r + m : r);
  }
  [[nodiscard]] Coeff add(Coeff a, Coeff b) const noexcept {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p_ ? s - p_ : s);
  }
  [[nodiscard]] Coeff sub(Coeff a, Coeff b) const noexcept {
    return a >= b ? a - b : static_cast<Coeff>(std::uint64_t{a} + p_ - b);
  }
  [[nodiscard]] Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((std::uint64_t{a} * b) % p_);
  }
  [[nodiscard]] Coeff pow(Coeff a, std::uint64_t e) const noexcept;
  /// Multiplicative inverse; `a` must be nonzero.
  [[nodiscard]] Coeff inv(Coeff a) const;

  static bool is_prime(std::uint64_t n) noexcept;

 private:
  std::uint32_t p_;
};

/// A residue together with its modulus. Always fully reduced.
class FieldElement {
 public:
  FieldElement(std::int64_t value, std::uint32_t modulus);

  [[nodiscard]] Coeff value() const noexcept { return value_; }
  [[nodiscard]] std::uint32_t modulus() const noexcept { return modulus_; }
  [[nodiscard]] bool is_zero() const noexcept { return value_ == 0; }

  [[nodiscard]] FieldElement inverse() const;

  friend FieldElement operator+(FieldElement a, FieldElement b);
  friend FieldElement operator-(FieldElement a, FieldElement b);
  friend FieldElement operator*(FieldElement a, FieldElement b);
  friend FieldElement operator-(FieldElement a);
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend std::ostream& operator<<(std::ostream& os, const FieldElement& x);

 private:
  Coeff value_;
  std::uint32_t modulus_;
};

}  // namespace chowdefect
