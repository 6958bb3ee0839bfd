#include "chowdefect/field.hpp"

#include <ostream>
#include <string>

#include "chowdefect/errors.hpp"

namespace chowdefect {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > (1u << 31) || !is_prime(p)) {
    throw ContextError("coefficient modulus must be a prime <= 2^31, got " + std::to_string(p));
  }
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

bool PrimeField::is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldElement::FieldElement(std::int64_t value, std::uint32_t modulus)
    : value_(PrimeField(modulus).reduce(value)), modulus_(modulus) {}

FieldElement FieldElement::inverse() const {
  return {PrimeField(modulus_).inv(value_), modulus_};
}

namespace {
void require_same_modulus(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) throw ContextError("field elements with different moduli");
}
}  // namespace

FieldElement operator+(FieldElement a, FieldElement b) {
  require_same_modulus(a, b);
  return {std::int64_t{a.value_} + b.value_, a.modulus_};
}

FieldElement operator-(FieldElement a, FieldElement b) {
  require_same_modulus(a, b);
  return {std::int64_t{a.value_} - b.value_, a.modulus_};
}

FieldElement operator*(FieldElement a, FieldElement b) {
  require_same_modulus(a, b);
  return {static_cast<std::int64_t>((std::uint64_t{a.value_} * b.value_) % a.modulus_),
          a.modulus_};
}

FieldElement operator-(FieldElement a) { return {-std::int64_t{a.value_}, a.modulus_}; }

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
  return os << x.value_ << " (mod " << x.modulus_ << ")";
}

}  // namespace chowdefect
