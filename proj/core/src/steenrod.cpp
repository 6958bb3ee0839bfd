#include "chowdefect/steenrod.hpp"

#include "chowdefect/errors.hpp"
#include "chowdefect/groebner.hpp"
#include "chowdefect/symfun.hpp"

namespace chowdefect {

Polynomial total_power(const Polynomial& f) {
  const RingPtr& ring = f.ring();
  if (!ring->unit_weights()) throw ContextError("total power needs unit weights");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) {
    images.push_back(Polynomial::variable(ring, i) +
                     Polynomial::monomial(ring, Monomial::variable(i, ring->prime())));
  }
  return apply_substitution(std::span<const Polynomial>(images), f);
}

Polynomial reduced_power(unsigned k, const Polynomial& f) {
  if (!f.is_homogeneous()) throw GradingError("reduced power of a non-homogeneous polynomial");
  if (k == 0) return f;
  const unsigned d = f.degree();
  if (k > d) {
    if (!f.ring()->unit_weights()) throw ContextError("total power needs unit weights");
    return Polynomial(f.ring());
  }
  return total_power(f).homogeneous_component(d + k * (f.ring()->prime() - 1));
}

Polynomial milnor_q(unsigned n, const Polynomial& f) {
  const RingPtr& ring = f.ring();
  if (ring->prime() != 2 || !ring->unit_weights()) {
    throw ContextError("Milnor operations need a mod-2 ring with unit weights");
  }
  if (n >= 14) throw SizeError("Milnor operation index too large");
  const unsigned shift = (1u << (n + 1)) - 1;
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    for (std::size_t i = 0; i < ring->num_vars(); ++i) {
      const unsigned a = t.mono[i];
      if (a % 2 == 0) continue;  // a * x^(a-1) vanishes mod 2
      Monomial m = t.mono;
      m.set(i, a + shift);
      out.push_back(Term{m, t.coeff});
    }
  }
  return Polynomial::from_terms(ring, std::move(out));
}

SuiteResult steenrod_suite() {
  SuiteResult s;
  s.suite = "steenrod";
  const RingPtr ring = RingContext::standard(3, 4);
  const auto toda = toda_generators(ring);
  auto get = [&](const char* name) {
    for (const auto& c : toda) if (c.name == name) return c.value;
    throw CatalogError(name);
  };
  const Polynomial p1 = get("p1");
  const Polynomial pb2 = get("pbar2");
  const Polynomial pb5 = get("pbar5");
  const Polynomial pb9 = get("pbar9");
  const Polynomial pb12 = get("pbar12");

  auto exact = [&](const std::string& name, const Polynomial& lhs, const Polynomial& rhs) {
    const Polynomial diff = lhs - rhs;
    s.add(name, diff.is_zero(), diff.is_zero() ? "" : "difference " + diff.to_string());
  };
  exact("P1(p1) = p1^2 - pbar2", reduced_power(1, p1), p1.pow(2) - pb2);
  exact("P1(pbar2) = p1 pbar2", reduced_power(1, pb2), p1 * pb2);
  exact("P1(pbar5) = 0", reduced_power(1, pb5), Polynomial(ring));
  exact("P3(p1) = 0", reduced_power(3, p1), Polynomial(ring));
  exact("P3(pbar2) = pbar5 - p1 pbar2^2", reduced_power(3, pb2), pb5 - p1 * pb2.pow(2));
  exact("P3(pbar5) = pbar5 p1 (-pbar2 + p1^2)", reduced_power(3, pb5),
        pb5 * p1 * (p1.pow(2) - pb2));

  const IdealHandle ideal(ring, {{"p1", p1}, {"pbar2", pb2}});
  const Polynomial rem = normal_form(reduced_power(3, pb9) - pb12, ideal);
  s.add("P3(pbar9) = pbar12 mod (p1, pbar2)", rem.is_zero(),
        rem.is_zero() ? "" : "remainder " + rem.to_string());

  for (const auto& c : toda) {
    if (c.name == "r15") continue;
    const unsigned d = c.value.degree();
    const bool ok = reduced_power(d + 1, c.value).is_zero() &&
                    reduced_power(d, c.value) == c.value.pow(3);
    s.add("instability on " + c.name, ok);
  }
  return s;
}

SuiteResult dickson_suite(unsigned h) {
  SuiteResult s;
  s.suite = "dickson h=" + std::to_string(h);
  const DicksonExpansion dx = dickson_expand(h);
  s.add("e = z^(2^h) + sum d_i z^(2^i)", dx.dickson_form);
  for (unsigned k = 0; k + 1 < h; ++k) {
    const Polynomial q = milnor_q(k, dx.e);
    s.add("Q" + std::to_string(k) + "(e) = 0", q.is_zero());
  }
  const Polynomial q = milnor_q(h - 1, dx.e);
  s.add("Q" + std::to_string(h - 1) + "(e) = d0 e", q == dx.d.front() * dx.e);
  return s;
}

}  // namespace chowdefect
