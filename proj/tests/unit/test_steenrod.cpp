#include <doctest.h>

#include <random>

#include "chowdefect/errors.hpp"
#include "chowdefect/groebner.hpp"
#include "chowdefect/steenrod.hpp"
#include "chowdefect/symfun.hpp"
#include "support/oracles.hpp"

using namespace chowdefect;

namespace {

Polynomial P(const RingPtr& r, std::string_view s) { return parse_class_expression(s, r); }

}  // namespace

TEST_SUITE("steenrod") {

TEST_CASE("total power of a square") {
  auto r = RingContext::standard(3, 2);
  CHECK(total_power(P(r, "t1^2")) == P(r, "t1^2 + 2*t1^4 + t1^6"));
  CHECK(total_power(P(r, "p1")).homogeneous_component(4) == reduced_power(1, P(r, "p1")));
}

TEST_CASE("powers of one variable follow binomial coefficients") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = RingContext::standard(p, 1);
    for (unsigned n = 1; n <= 9; ++n)
      for (unsigned k = 0; k <= n + 1; ++k) {
        const auto c = oracle::binomial(n, k) % p;
        const auto expect = Polynomial::monomial(r, Monomial::variable(0, n + k * (p - 1)),
                                                 static_cast<std::int64_t>(c));
        CHECK(reduced_power(k, Polynomial::monomial(r, Monomial::variable(0, n))) == expect);
      }
  }
}

TEST_CASE("Cartan formula on random products") {
  std::mt19937 rng(8);
  auto r = RingContext::standard(3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = oracle::random_homogeneous(r, 2, 3, rng);
    const auto g = oracle::random_homogeneous(r, 3, 3, rng);
    for (unsigned k = 0; k <= 4; ++k) {
      Polynomial rhs(r);
      for (unsigned i = 0; i <= k; ++i) rhs += reduced_power(i, f) * reduced_power(k - i, g);
      CHECK(reduced_power(k, f * g) == rhs);
    }
  }
}

TEST_CASE("errors") {
  auto r = RingContext::standard(3, 2);
  CHECK_THROWS_AS(reduced_power(1, P(r, "t1 + t1^2")), GradingError);
  RingContext w(3, {"a", "b"}, {1, 2});
  auto wr = std::make_shared<const RingContext>(w);
  CHECK_THROWS_AS(total_power(Polynomial::variable(wr, 0)), ContextError);
  CHECK_THROWS_AS(milnor_q(0, P(r, "t1")), ContextError);
  CHECK(reduced_power(5, P(r, "t1^2")).is_zero());
}

TEST_CASE("reduced power identities among the F4 generators") {
  auto r = RingContext::standard(3, 4);
  CHECK(reduced_power(1, P(r, "p1")) == P(r, "p1^2 - pbar2"));
  CHECK(reduced_power(1, P(r, "pbar2")) == P(r, "p1*pbar2"));
  CHECK(reduced_power(1, P(r, "pbar5")).is_zero());
  CHECK(reduced_power(3, P(r, "p1")).is_zero());
  CHECK(reduced_power(3, P(r, "pbar2")) == P(r, "pbar5 - p1*pbar2^2"));
  CHECK(reduced_power(3, P(r, "pbar5")) == P(r, "pbar5*p1*(p1^2 - pbar2)"));
  const IdealHandle I(r, {{"p1", P(r, "p1")}, {"pbar2", P(r, "pbar2")}});
  CHECK(contains(I, reduced_power(3, P(r, "pbar9")) - P(r, "pbar12")));
}

TEST_CASE("Milnor operations") {
  auto r = RingContext::standard(2, 2);
  CHECK(milnor_q(0, P(r, "t1")) == P(r, "t1^2"));
  CHECK(milnor_q(1, P(r, "t1^3")) == P(r, "t1^6"));
  CHECK(milnor_q(1, P(r, "t1^2")).is_zero());
  std::mt19937 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = oracle::random_homogeneous(r, 2, 3, rng);
    const auto g = oracle::random_homogeneous(r, 3, 2, rng);
    for (unsigned n = 0; n <= 2; ++n)
      CHECK(milnor_q(n, f * g) == milnor_q(n, f) * g + f * milnor_q(n, g));
  }
}

TEST_CASE("suites") {
  CHECK(steenrod_suite().all_passed());
  for (unsigned h = 1; h <= 4; ++h) {
    const auto s = dickson_suite(h);
    CHECK_MESSAGE(s.all_passed(), "h = " << h);
  }
  // Q_{h-1}(e) = d0 e, recomputed without the suite for h = 2
  const auto dx = dickson_expand(2);
  CHECK(milnor_q(0, dx.e).is_zero());
  CHECK(milnor_q(1, dx.e) == dx.d[0] * dx.e);
}

}  // TEST_SUITE
