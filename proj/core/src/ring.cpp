#include "chowdefect/ring.hpp"

#include <algorithm>
#include <numeric>

#include "chowdefect/errors.hpp"

namespace chowdefect {

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) {
    throw SizeError("too many variables (max " + std::to_string(kMaxVariables) + ")");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVariables) throw SizeError("variable index out of range");
  if (e > 0xFFFFu) throw SizeError("exponent overflow");
  exps_[i] = static_cast<Exponent>(e);
}

unsigned Monomial::total_degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

unsigned Monomial::weighted_degree(std::span<const unsigned> weights) const noexcept {
  unsigned d = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) d += exps_[i] * weights[i];
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
    if (e > 0xFFFFu) throw SizeError("exponent overflow");
    r.exps_[i] = static_cast<Monomial::Exponent>(e);
  }
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (b.exps_[i] > a.exps_[i]) throw std::domain_error("monomial does not divide");
    r.exps_[i] = static_cast<Monomial::Exponent>(a.exps_[i] - b.exps_[i]);
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

RingContext::RingContext(std::uint32_t prime, std::vector<std::string> names,
                         std::vector<unsigned> weights, MonomialOrder order)
    : field_(prime), names_(std::move(names)), weights_(std::move(weights)), order_(order) {
  if (names_.size() > kMaxVariables) {
    throw SizeError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  if (weights_.size() != names_.size()) throw ContextError("one weight per variable required");
  if (std::any_of(weights_.begin(), weights_.end(), [](unsigned w) { return w == 0; })) {
    throw ContextError("variable weights must be positive");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw ContextError("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw ContextError("duplicate variable name " + names_[i]);
    }
  }
}

std::shared_ptr<const RingContext> RingContext::standard(std::uint32_t prime, std::size_t n,
                                                         MonomialOrder order) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
  return std::make_shared<const RingContext>(prime, std::move(names),
                                             std::vector<unsigned>(n, 1u), order);
}

bool RingContext::unit_weights() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [](unsigned w) { return w == 1; });
}

int RingContext::variable_index(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::strong_ordering RingContext::compare(const Monomial& a, const Monomial& b) const noexcept {
  const unsigned da = degree(a);
  const unsigned db = degree(b);
  if (da != db) return da <=> db;
  const std::size_t n = names_.size();
  if (order_ == MonomialOrder::kGrevlex) {
    for (std::size_t k = n; k-- > 0;) {
      if (a[k] != b[k]) return b[k] <=> a[k];
    }
  } else {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[k] != b[k]) return a[k] <=> b[k];
    }
  }
  return std::strong_ordering::equal;
}

bool RingContext::same_as(const RingContext& other) const noexcept {
  return this == &other || (prime() == other.prime() && names_ == other.names_ &&
                            weights_ == other.weights_ && order_ == other.order_);
}

namespace {

void enumerate(const RingContext& ring, std::size_t var, unsigned remaining, Monomial& current,
               std::vector<Monomial>& out) {
  const std::size_t n = ring.num_vars();
  if (var + 1 == n) {
    const unsigned w = ring.weights()[var];
    if (remaining % w == 0) {
      current.set(var, remaining / w);
      out.push_back(current);
      current.set(var, 0);
    }
    return;
  }
  const unsigned w = ring.weights()[var];
  for (unsigned e = 0; e * w <= remaining; ++e) {
    current.set(var, e);
    enumerate(ring, var + 1, remaining - e * w, current, out);
  }
  current.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const RingContext& ring, unsigned d) {
  std::vector<Monomial> out;
  if (ring.num_vars() == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial current;
  enumerate(ring, 0, d, current, out);
  std::sort(out.begin(), out.end(),
            [&ring](const Monomial& a, const Monomial& b) { return ring.greater(a, b); });
  return out;
}

std::size_t count_monomials(const RingContext& ring, unsigned d) {
  std::vector<std::size_t> ways(d + 1, 0);
  ways[0] = 1;
  for (unsigned w : ring.weights()) {
    for (unsigned k = w; k <= d; ++k) ways[k] += ways[k - w];
  }
  return ways[d];
}

}  // namespace chowdefect
