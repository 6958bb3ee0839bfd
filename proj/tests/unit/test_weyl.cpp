#include <doctest.h>

#include <map>

#include "chowdefect/errors.hpp"
#include "chowdefect/series.hpp"
#include "chowdefect/symfun.hpp"
#include "chowdefect/weyl.hpp"
#include "support/oracles.hpp"

using namespace chowdefect;

namespace {

Polynomial P(const RingPtr& r, std::string_view s) { return parse_class_expression(s, r); }

// dim of the common fixed space, from the stacked matrices (g - 1) on S_d.
std::size_t fixed_dimension(const RingPtr& r, const std::vector<GroupElement>& gens, unsigned d) {
  const auto basis = oracle::exponents_of_degree(r->weights(), d);
  std::map<oracle::Exps, std::size_t> col;
  for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = i;
  const std::uint64_t p = r->prime();
  // rows indexed by (generator, output monomial); columns by input monomial
  std::vector<std::vector<std::uint64_t>> rows(gens.size() * basis.size(),
                                               std::vector<std::uint64_t>(basis.size(), 0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto m = Polynomial::monomial(r, Monomial(basis[j]));
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const auto img = gens[g].apply(m) - m;
      for (const auto& t : img.terms())
        rows[g * basis.size() + col.at(oracle::exps_of(t.mono, r->num_vars()))][j] = t.coeff % p;
    }
  }
  return basis.size() - oracle::rank_mod_p(rows, p);
}

std::size_t partitions_at_most(unsigned n, unsigned parts) {
  std::vector<unsigned> w;
  for (unsigned i = 1; i <= parts; ++i) w.push_back(i);
  return oracle::exponents_of_degree(w, n).size();
}

}  // namespace

TEST_SUITE("weyl") {

TEST_CASE("generators") {
  auto r2 = RingContext::standard(3, 2);
  CHECK(signed_perm_generators(r2).size() == 2);
  auto r4 = RingContext::standard(3, 4);
  CHECK(signed_perm_generators(r4).size() == 4);
  for (const auto& g : signed_perm_generators(r4)) {
    CHECK(g.is_monomial());
    CHECK(g.compose(g).is_identity());
  }
  const auto R = f4_reflection(r4);
  CHECK_FALSE(R.is_monomial());
  CHECK(R.compose(R).is_identity());
  CHECK_THROWS_AS(f4_reflection(RingContext::standard(3, 3)), ContextError);
  CHECK_THROWS_AS(f4_reflection(RingContext::standard(2, 4)), ContextError);
  CHECK_THROWS_AS(GroupElement(r2, {{1, 1}, {1, 1}}, "singular"), ContextError);
}

TEST_CASE("action is a ring automorphism preserving degree") {
  auto r = RingContext::standard(3, 4);
  const auto R = f4_reflection(r);
  const auto f = P(r, "t1^2*t3 + 2*t2*t4^2");
  const auto g = P(r, "t1 + t2*t3");
  CHECK(R.apply(f * g) == R.apply(f) * R.apply(g));
  CHECK(R.apply(f).is_homogeneous());
  CHECK(R.apply(f).degree() == 3);
}

TEST_CASE("invariance") {
  auto r2 = RingContext::standard(3, 2);
  const auto sp2 = signed_perm_generators(r2);
  CHECK(is_invariant(Polynomial::constant(r2, 2), sp2));
  CHECK_FALSE(is_invariant(P(r2, "c1"), sp2));
  CHECK(is_invariant(P(r2, "p1"), sp2));

  auto r = RingContext::standard(3, 4);
  auto gens = signed_perm_generators(r);
  gens.push_back(f4_reflection(r));
  for (const char* name : {"p1", "pbar2", "pbar5"}) CHECK_MESSAGE(is_invariant(P(r, name), gens), name);
  CHECK(is_invariant(P(r, "p2"), gens));  // p2 = pbar2 + p1^2
  CHECK_FALSE(is_invariant(P(r, "t1^2"), gens));

  const IdealHandle I(r, {{"p1", P(r, "p1")}, {"pbar2", P(r, "pbar2")}});
  const std::vector<GroupElement> onlyR{f4_reflection(r)};
  CHECK(is_invariant_mod_ideal(P(r, "p3^3"), onlyR, I));
  CHECK(is_invariant_mod_ideal(P(r, "p4^3"), onlyR, I));
  CHECK(is_invariant_mod_ideal(P(r, "pbar5"), gens, I));
  CHECK_FALSE(is_invariant_mod_ideal(P(r, "t1^2"), onlyR, I));
}

TEST_CASE("invariant dimensions for signed permutations") {
  auto r2 = RingContext::standard(3, 2);
  const auto sp2 = signed_perm_generators(r2);
  CHECK(invariant_dimension(r2, sp2, 0) == 1);
  CHECK(invariant_dimension(r2, sp2, 2) == 1);
  for (std::size_t n = 2; n <= 4; ++n) {
    auto r = RingContext::standard(3, n);
    const auto sp = signed_perm_generators(r);
    for (unsigned d = 0; d <= 8; ++d) {
      const std::size_t expect = d % 2 ? 0 : partitions_at_most(d / 2, static_cast<unsigned>(n));
      CHECK(invariant_dimension(r, sp, d) == expect);
    }
  }
}

TEST_CASE("invariant dimensions with the extra reflection, by dense linear algebra") {
  auto r = RingContext::standard(3, 4);
  auto gens = signed_perm_generators(r);
  gens.push_back(f4_reflection(r));
  const auto series = series_eval(SeriesExpr::poly_algebra({2, 4, 10, 18, 24}), 8);
  for (unsigned d = 0; d <= 8; ++d) {
    const auto dim = invariant_dimension(r, gens, d);
    CHECK(dim == fixed_dimension(r, gens, d));
    CHECK(static_cast<std::int64_t>(dim) == series[d]);
  }
}

TEST_CASE("slice cap") {
  auto r = RingContext::standard(3, 4);
  CHECK_THROWS_AS(invariant_dimension(r, signed_perm_generators(r), 30, 100), SizeError);
}

TEST_CASE("suite") {
  const auto s = f4_invariants_suite(12);
  for (const auto& c : s.checks) CHECK_MESSAGE(c.passed, c.name << " " << c.detail);
}

}  // TEST_SUITE
