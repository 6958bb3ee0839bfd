#include "chowdefect/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "chowdefect/errors.hpp"

namespace chowdefect {

namespace {

void sort_and_combine(const RingContext& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [&ring](const Term& a, const Term& b) { return ring.greater(a.mono, b.mono); });
  const PrimeField& field = ring.field();
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Coeff c = 0;
    std::size_t j = i;
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      c = field.add(c, terms[j].coeff % field.modulus());
      ++j;
    }
    if (c != 0) terms[out++] = Term{terms[i].mono, c};
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw ContextError("polynomial without a ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  const Coeff r = ring->field().reduce(c);
  std::vector<Term> terms;
  if (r != 0) terms.push_back(Term{Monomial{}, r});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->num_vars()) throw ContextError("variable index out of range");
  return monomial(std::move(ring), Monomial::variable(index), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, std::int64_t c) {
  const Coeff r = ring->field().reduce(c);
  std::vector<Term> terms;
  if (r != 0) terms.push_back(Term{m, r});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  sort_and_combine(*ring, terms);
  return Polynomial(std::move(ring), std::move(terms));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

unsigned Polynomial::degree() const noexcept {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, ring_->degree(t.mono));
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const unsigned d = ring_->degree(terms_.front().mono);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return ring_->degree(t.mono) == d; });
}

Coeff Polynomial::coefficient(const Monomial& m) const noexcept {
  for (const Term& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

Polynomial Polynomial::homogeneous_component(unsigned d) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    if (ring_->degree(t.mono) == d) out.push_back(t);
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scaled(Coeff c) const {
  const PrimeField& field = ring_->field();
  c %= field.modulus();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = field.mul(t.coeff, c);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times_monomial(const Monomial& m, Coeff c) const {
  const PrimeField& field = ring_->field();
  c %= field.modulus();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplication by a monomial preserves the order of terms.
  for (const Term& t : terms_) out.push_back(Term{t.mono * m, field.mul(t.coeff, c)});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

void Polynomial::require_same_ring(const Polynomial& g) const {
  if (ring_ != g.ring_ && !ring_->same_as(*g.ring_)) {
    throw ContextError("polynomials belong to different rings");
  }
}

namespace {

std::vector<Term> merge(const RingContext& ring, const std::vector<Term>& a,
                        const std::vector<Term>& b, bool subtract) {
  const PrimeField& field = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    std::strong_ordering cmp = std::strong_ordering::equal;
    if (i == a.size()) {
      cmp = std::strong_ordering::less;
    } else if (j == b.size()) {
      cmp = std::strong_ordering::greater;
    } else {
      cmp = ring.compare(a[i].mono, b[j].mono);
    }
    if (cmp == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (cmp == std::strong_ordering::less) {
      Term t = b[j++];
      if (subtract) t.coeff = field.neg(t.coeff);
      out.push_back(t);
    } else {
      const Coeff c = subtract ? field.sub(a[i].coeff, b[j].coeff)
                               : field.add(a[i].coeff, b[j].coeff);
      if (c != 0) out.push_back(Term{a[i].mono, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  require_same_ring(g);
  terms_ = merge(*ring_, terms_, g.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  require_same_ring(g);
  terms_ = merge(*ring_, terms_, g.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& g) {
  *this = *this * g;
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.require_same_ring(g);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring_);
  if (g.size() == 1) return f.times_monomial(g.terms_[0].mono, g.terms_[0].coeff);
  if (f.size() == 1) return g.times_monomial(f.terms_[0].mono, f.terms_[0].coeff);
  const PrimeField& field = f.ring_->field();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(f.size() * g.size());
  for (const Term& a : f.terms_) {
    for (const Term& b : g.terms_) {
      Coeff& slot = acc[a.mono * b.mono];
      slot = field.add(slot, field.mul(a.coeff, b.coeff));
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    if (c != 0) terms.push_back(Term{m, c});
  }
  const RingContext& ring = *f.ring_;
  std::sort(terms.begin(), terms.end(),
            [&ring](const Term& a, const Term& b) { return ring.greater(a.mono, b.mono); });
  return Polynomial(f.ring_, std::move(terms));
}

Polynomial operator-(const Polynomial& f) { return f.scaled(f.ring_->prime() - 1); }

bool operator==(const Polynomial& f, const Polynomial& g) {
  return (f.ring_ == g.ring_ || f.ring_->same_as(*g.ring_)) && f.terms_ == g.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  const auto& names = ring_->names();
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    if (t.coeff != 1 || t.mono.is_one()) {
      os << t.coeff;
      wrote = true;
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      const unsigned e = t.mono[i];
      if (e == 0) continue;
      if (wrote) os << '*';
      os << names[i];
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

void require_common_ring(std::span<const Polynomial> polys) {
  for (std::size_t i = 1; i < polys.size(); ++i) {
    if (polys[i].ring() != polys[0].ring() && !polys[i].ring()->same_as(*polys[0].ring())) {
      throw ContextError("polynomials belong to different rings");
    }
  }
}

Polynomial apply_substitution(std::span<const std::optional<Polynomial>> images,
                              const Polynomial& f) {
  const RingPtr& ring = f.ring();
  const std::size_t n = ring->num_vars();
  if (images.size() != n) {
    throw SubstitutionError("substitution must give one image per variable (" +
                            std::to_string(n) + " expected, " + std::to_string(images.size()) +
                            " given)");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!images[i]) throw SubstitutionError("no image for variable " + ring->names()[i]);
    if (images[i]->ring() != ring && !images[i]->ring()->same_as(*ring)) {
      throw SubstitutionError("image of " + ring->names()[i] + " lies in another ring");
    }
  }
  // powers[i][e] = images[i]^e, filled on demand.
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(ring, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * *images[i]);
    return cache[e];
  };
  const PrimeField& field = ring->field();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  for (const Term& t : f.terms()) {
    Polynomial prod = Polynomial::constant(ring, t.coeff);
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) {
      if (t.mono[i] != 0) prod = prod * power(i, t.mono[i]);
    }
    for (const Term& u : prod.terms()) {
      Coeff& slot = acc[u.mono];
      slot = field.add(slot, u.coeff);
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    if (c != 0) terms.push_back(Term{m, c});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial apply_substitution(std::span<const Polynomial> images, const Polynomial& f) {
  std::vector<std::optional<Polynomial>> wrapped(images.begin(), images.end());
  return apply_substitution(std::span<const std::optional<Polynomial>>(wrapped), f);
}

Polynomial apply_substitution(const std::map<std::string, Polynomial>& images,
                              const Polynomial& f) {
  std::vector<std::optional<Polynomial>> wrapped;
  for (const std::string& name : f.ring()->names()) {
    auto it = images.find(name);
    if (it == images.end()) throw SubstitutionError("no image for variable " + name);
    wrapped.emplace_back(it->second);
  }
  for (const auto& [name, _] : images) {
    if (f.ring()->variable_index(name) < 0) {
      throw SubstitutionError("substitution names unknown variable " + name);
    }
  }
  return apply_substitution(std::span<const std::optional<Polynomial>>(wrapped), f);
}

}  // namespace chowdefect
