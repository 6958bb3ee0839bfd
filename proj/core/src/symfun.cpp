#include "chowdefect/symfun.hpp"

#include <charconv>

#include "chowdefect/errors.hpp"
#include "chowdefect/parser.hpp"

namespace chowdefect {

namespace {

// e_k of the given polynomials, via the recurrence on prod (1 + s*y_i).
Polynomial elementary_of(const RingPtr& ring, const std::vector<Polynomial>& ys, unsigned k) {
  if (k > ys.size()) return Polynomial(ring);
  std::vector<Polynomial> e(k + 1, Polynomial(ring));
  e[0] = Polynomial::constant(ring, 1);
  for (const Polynomial& y : ys) {
    for (unsigned j = k; j >= 1; --j) e[j] += e[j - 1] * y;
  }
  return e[k];
}

std::vector<Polynomial> variables(const RingPtr& ring, unsigned power) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) {
    out.push_back(Polynomial::monomial(ring, Monomial::variable(i, power)));
  }
  return out;
}

std::optional<unsigned> suffix_index(std::string_view name, std::string_view prefix) {
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
  const std::string_view digits = name.substr(prefix.size());
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return v;
}

Polynomial pbar2(const RingPtr& r) { return pontryagin(r, 2) - pontryagin(r, 1).pow(2); }
Polynomial pbar5(const RingPtr& r) {
  return pontryagin(r, 4) * pontryagin(r, 1) + pontryagin(r, 3) * pbar2(r);
}

}  // namespace

Polynomial elem_symmetric(const RingPtr& ring, unsigned k) {
  return elementary_of(ring, variables(ring, 1), k);
}

Polynomial pontryagin(const RingPtr& ring, unsigned k) {
  return elementary_of(ring, variables(ring, 2), k);
}

Polynomial c1_power(const RingPtr& ring, unsigned j) { return elem_symmetric(ring, 1).pow(j); }

std::vector<NamedClass> toda_generators(const RingPtr& ring) {
  if (ring->prime() != 3 || ring->num_vars() != 4 || !ring->unit_weights()) {
    throw ContextError("Toda generators need F_3[t1..t4] with unit weights");
  }
  const Polynomial p5 = pbar5(ring);
  return {
      {"p1", pontryagin(ring, 1), 2},
      {"pbar2", pbar2(ring), 4},
      {"pbar5", p5, 10},
      {"pbar9", pontryagin(ring, 3).pow(3), 18},
      {"pbar12", pontryagin(ring, 4).pow(3), 24},
      {"r15", p5.pow(3), 30},
  };
}

RingPtr make_q_context(unsigned h) {
  std::vector<std::string> names{"z"};
  for (unsigned i = 1; i <= h; ++i) names.push_back("x" + std::to_string(i));
  return std::make_shared<const RingContext>(2, names, std::vector<unsigned>(h + 1, 1));
}

DicksonExpansion dickson_expand(unsigned h) {
  if (h == 0 || h > 4) throw SizeError("Dickson expansion supports h = 1..4");
  const RingPtr q = make_q_context(h);
  DicksonExpansion out{q, Polynomial(q), {}, false};
  const RingPtr& ring = out.ring;
  out.e = Polynomial::constant(ring, 1);
  for (unsigned mask = 0; mask < (1u << h); ++mask) {
    Polynomial factor = Polynomial::variable(ring, 0);
    for (unsigned i = 0; i < h; ++i) {
      if (mask & (1u << i)) factor += Polynomial::variable(ring, i + 1);
    }
    out.e *= factor;
  }
  std::vector<std::vector<Term>> by_power(h + 1);
  bool clean = true;
  for (const Term& t : out.e.terms()) {
    const unsigned zexp = t.mono[0];
    unsigned i = 0;
    while (i <= h && (1u << i) != zexp) ++i;
    if (i > h) {
      clean = false;
      continue;
    }
    Monomial rest = t.mono;
    rest.set(0, 0);
    by_power[i].push_back(Term{rest, t.coeff});
  }
  for (unsigned i = 0; i < h; ++i) out.d.push_back(Polynomial::from_terms(ring, by_power[i]));
  const Polynomial top = Polynomial::from_terms(ring, by_power[h]);
  out.dickson_form = clean && top == Polynomial::constant(ring, 1);
  return out;
}

std::optional<Polynomial> resolve_alias(std::string_view name, const RingPtr& ring) {
  if (name == "pbar2") return pbar2(ring);
  if (name == "pbar5") return pbar5(ring);
  if (name == "pbar9") return pontryagin(ring, 3).pow(3);
  if (name == "pbar12") return pontryagin(ring, 4).pow(3);
  if (name == "r15") return pbar5(ring).pow(3);
  if (auto k = suffix_index(name, "c")) return elem_symmetric(ring, *k);
  if (auto k = suffix_index(name, "p")) return pontryagin(ring, *k);
  if (auto k = suffix_index(name, "e")) return c1_power(ring, *k);
  return std::nullopt;
}

Polynomial parse_class_expression(std::string_view text, const RingPtr& ring) {
  return parse_polynomial(text, ring, resolve_alias);
}

}  // namespace chowdefect
