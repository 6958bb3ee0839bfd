#include <doctest.h>

#include <random>

#include "chowdefect/errors.hpp"
#include "chowdefect/hilbert.hpp"
#include "chowdefect/linalg.hpp"
#include "chowdefect/series.hpp"
#include "chowdefect/symfun.hpp"
#include "support/oracles.hpp"

using namespace chowdefect;

namespace {

IdealHandle ideal(const RingPtr& r, std::vector<std::string> gens) {
  std::vector<NamedPolynomial> named;
  for (auto& g : gens) named.push_back({g, parse_class_expression(g, r)});
  return IdealHandle(r, std::move(named));
}

std::vector<std::int64_t> as_signed(const std::vector<std::size_t>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_SUITE("hilbert") {

TEST_CASE("sparse and dense rank agree") {
  std::mt19937 rng(1);
  const PrimeField F(5);
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<Coeff> val(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 3 + trial % 7, cols = 4 + trial % 5;
    std::vector<linalg::SparseRow> sparse(rows);
    std::vector<std::vector<Coeff>> dense(rows, std::vector<Coeff>(cols, 0));
    std::vector<std::vector<std::uint64_t>> ref(rows, std::vector<std::uint64_t>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::uint32_t j = 0; j < cols; ++j)
        if (coin(rng) == 0) {
          const Coeff v = val(rng);
          sparse[i].push_back({j, v});
          dense[i][j] = v;
          ref[i][j] = v;
        }
    const auto expect = oracle::rank_mod_p(ref, 5);
    CHECK(linalg::rank(sparse, cols, F) == expect);
    CHECK(linalg::dense_rank(dense, F) == expect);

    const auto nulls = linalg::null_combinations(sparse, cols, F);
    CHECK(nulls.size() == rows - expect);
    for (const auto& lam : nulls) {
      std::vector<std::uint64_t> acc(cols, 0);
      for (std::size_t i = 0; i < rows; ++i)
        for (const auto& [c, v] : sparse[i]) acc[c] = (acc[c] + std::uint64_t{lam[i]} * v) % 5;
      for (auto x : acc) CHECK(x == 0);
    }
  }
}

TEST_CASE("zero ideal counts monomials") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto r = RingContext::standard(2, n);
    IdealHandle z(r, {});
    for (unsigned d = 0; d <= 8; ++d) {
      const auto expect = static_cast<std::size_t>(oracle::binomial(d + n - 1, n - 1));
      CHECK(hf_staircase(z, d) == expect);
      CHECK(hf_linalg(z, d) == expect);
    }
  }
}

TEST_CASE("degree zero of a proper ideal") {
  auto r = RingContext::standard(3, 3);
  auto I = ideal(r, {"t1^2", "t2*t3"});
  CHECK(hf_staircase(I, 0) == 1);
  CHECK(hf_linalg(I, 0) == 1);
}

TEST_CASE("quoted slice values") {
  auto r3 = RingContext::standard(2, 3);
  auto ker7 = ideal(r3, {"c2^2", "c2*c3", "c3^2", "c1^4"});
  CHECK(hf_linalg(ker7, 4) == 13);
  CHECK(hf_staircase(ker7, 4) == 13);

  auto r4 = RingContext::standard(3, 4);
  auto F = ideal(r4, {"p1^2", "p1*pbar2", "p1*p3", "p1*p4", "pbar2^2", "pbar2*p3", "pbar2*p4",
                      "p3^2", "p3*p4", "p4^2"});
  for (unsigned d = 0; d <= 10; ++d) {
    CHECK(hf_linalg(F, d) == hf_staircase(F, d));
    CHECK(hf_linalg(F, d) == oracle::macaulay_hf(*r4, F.generator_polynomials(), d));
  }
}

TEST_CASE("100 random ideals: staircase, sparse and dense linear algebra agree") {
  std::mt19937 rng(20260915);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t p = (trial % 3 == 0) ? 2 : (trial % 3 == 1 ? 3 : 5);
    const std::size_t n = 1 + trial % 4;
    auto r = RingContext::standard(p, n);
    std::uniform_int_distribution<unsigned> deg(1, 6), count(1, 4), terms(1, 4);
    std::vector<NamedPolynomial> gens;
    const unsigned k = count(rng);
    for (unsigned i = 0; i < k; ++i)
      gens.push_back({"g" + std::to_string(i), oracle::random_homogeneous(r, deg(rng), terms(rng), rng)});
    IdealHandle I(r, gens);
    const unsigned N = n <= 2 ? 12 : 8;
    const auto st = hilbert_function_staircase(I, N);
    const auto la = hilbert_function_linalg(I, N);
    CHECK(st == la);
    for (unsigned d = 0; d <= N; ++d) {
      CHECK(hf_staircase(I, d) == st[d]);
      CHECK(hf_linalg(I, d) == st[d]);
      if (d <= 7) {
        CHECK(hf_linalg_dense(I, d) == st[d]);
        CHECK(oracle::macaulay_hf(*r, I.generator_polynomials(), d) == st[d]);
      }
    }
  }
}

TEST_CASE("monotone under inclusion") {
  std::mt19937 rng(4);
  auto r = RingContext::standard(3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<NamedPolynomial> small, big;
    for (int i = 0; i < 2; ++i) small.push_back({"a", oracle::random_homogeneous(r, 2, 3, rng)});
    big = small;
    big.push_back({"b", oracle::random_homogeneous(r, 3, 3, rng)});
    const auto hs = hilbert_function(IdealHandle(r, small), 9, HfMethod::kBoth);
    const auto hb = hilbert_function(IdealHandle(r, big), 9, HfMethod::kBoth);
    for (unsigned d = 0; d <= 9; ++d) CHECK(hs[d] >= hb[d]);
  }
}

TEST_CASE("regular sequences match their series") {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto r = RingContext::standard(3, n);
    std::vector<std::string> gens;
    std::vector<unsigned> degs;
    for (std::size_t k = 1; k <= n; ++k) {
      gens.push_back("c" + std::to_string(k));
      degs.push_back(static_cast<unsigned>(k));
    }
    auto I = ideal(r, gens);
    const unsigned N = 14;
    const auto hf = hilbert_function(I, N, HfMethod::kBoth);
    CHECK(as_signed(hf) == oracle::regseq(static_cast<unsigned>(n), degs, N));
    CHECK(as_signed(hf) == series_eval(SeriesExpr::regseq(degs), N));
    std::int64_t total = 0, prod = 1;
    for (auto v : hf) total += static_cast<std::int64_t>(v);
    for (auto d : degs) prod *= d;
    CHECK(total == prod);
  }
}

TEST_CASE("method parsing") {
  CHECK(parse_hf_method("groebner") == HfMethod::kGroebner);
  CHECK(parse_hf_method("linalg") == HfMethod::kLinalg);
  CHECK(parse_hf_method("both") == HfMethod::kBoth);
  CHECK_THROWS_AS(parse_hf_method("magic"), std::invalid_argument);
  CHECK(to_string(HfMethod::kLinalg) == "linalg");
}

TEST_CASE("d_series") {
  auto r = RingContext::standard(3, 2);
  auto ker = ideal(r, {"c1^2", "c1*c2", "c2^2"});
  auto im = ideal(r, {"c1^2", "c1^3", "c2^3"});
  const auto D = d_series(ker, im, 12, HfMethod::kBoth);
  const std::vector<std::int64_t> expect{0, 0, 0, 1, 2, 2, 1, 0, 0, 0, 0, 0, 0};
  CHECK(D.D == expect);
  CHECK(D.hf_ker[3] == D.hf_im[3] - 1);

  const auto same = d_series(ker, ker, 10, HfMethod::kLinalg);
  for (auto v : same.D) CHECK(v == 0);

  CHECK_THROWS_AS(d_series(im, ker, 6, HfMethod::kGroebner), ContainmentError);
  try {
    (void)d_series(im, ker, 6, HfMethod::kGroebner);
  } catch (const ContainmentError& e) {
    CHECK(std::string(e.what()).find("c1*c2") != std::string::npos);
  }
}

TEST_CASE("spin7 slices") {
  auto r = RingContext::standard(2, 3);
  auto ker = ideal(r, {"c2^2", "c2*c3", "c3^2", "c1^4"});
  auto im = ideal(r, {"c2^2", "c3^2", "c1^8"});
  const auto D = d_series(ker, im, 8, HfMethod::kBoth);
  CHECK(D.D[4] == 1);
  CHECK(D.D[5] == 4);
  for (auto v : D.D) CHECK(v >= 0);
}

TEST_CASE("oversized slices are refused") {
  auto r = RingContext::standard(2, 12);
  IdealHandle z(r, {});
  CHECK_THROWS_AS(hf_linalg(z, 40), SizeError);
}

}  // TEST_SUITE

TEST_SUITE("series") {

TEST_CASE("closed forms") {
  const auto ep = series_eval(SeriesExpr::exterior_plus({4, 5}), 10);
  CHECK(ep == oracle::Coeffs{0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0});

  const auto t = SeriesExpr::tensor({SeriesExpr::free_module({3, 4, 5}), SeriesExpr::regseq({1, 1}, {1, 2})});
  CHECK(series_eval(t, 8) == oracle::Coeffs{0, 0, 0, 1, 2, 2, 1, 0, 0});

  const auto flag = SeriesExpr::tensor({SeriesExpr::free_module({0, 1, 2}), SeriesExpr::regseq({1, 1}, {1, 2})});
  const auto fs = series_eval(flag, 6);
  CHECK(fs == oracle::Coeffs{1, 2, 2, 1, 0, 0, 0});
}

TEST_CASE("against direct expansion") {
  const unsigned N = 30;
  CHECK(series_eval(SeriesExpr::poly_algebra({2, 4, 10, 18, 24}), N) ==
        oracle::poly_algebra({2, 4, 10, 18, 24}, N));
  CHECK(series_eval(SeriesExpr::regseq({2, 3, 4}), N) == oracle::regseq(3, {2, 3, 4}, N));
  CHECK(series_eval(SeriesExpr::exterior_plus({1, 2, 3, 4}), N) ==
        oracle::exterior_plus({1, 2, 3, 4}, N));

  // truncated(6,3) tensor truncated(8,3), augmented
  oracle::Coeffs a(N + 1, 0), b(N + 1, 0);
  for (unsigned k = 0; k < 3; ++k) {
    a[6 * k] = 1;
    b[8 * k] = 1;
  }
  auto ab = oracle::mul(a, b, N);
  ab[0] -= 1;
  const auto e = SeriesExpr::augmentation(
      SeriesExpr::tensor({SeriesExpr::truncated(6, 3), SeriesExpr::truncated(8, 3)}));
  CHECK(series_eval(e, N) == ab);

  const auto s = SeriesExpr::sum({SeriesExpr::free_module({1, 1}), SeriesExpr::exterior({2})});
  CHECK(series_eval(s, 3) == oracle::Coeffs{1, 2, 1, 0});
}

TEST_CASE("text round trip") {
  for (const char* text : {"tensor(freemod(3,4,5), regseq(vars=2, degs=(1,2)))",
                           "aug(tensor(trunc(6,3), trunc(8,3)))",
                           "sum(extplus(1,2), ext(3), poly(2,4))",
                           "regseq(weights=(2,4,6,8), degs=(2,4,6,8))",
                           "zero"}) {
    const auto e = parse_series(text);
    CHECK(series_eval(parse_series(to_string(e)), 20) == series_eval(e, 20));
  }
}

TEST_CASE("malformed expressions") {
  CHECK_THROWS_AS(parse_series("tensor(freemod(1)"), ExpressionError);
  CHECK_THROWS_AS(parse_series("wibble(1)"), ExpressionError);
  CHECK_THROWS_AS(parse_series("regseq(vars=1, degs=(1,2))"), ExpressionError);
  CHECK_THROWS_AS(series_eval(SeriesExpr::regseq({1}, {0}), 4), ExpressionError);
  CHECK_THROWS_AS(series_eval(SeriesExpr::truncated(0, 2), 4), ExpressionError);
}

TEST_CASE("division inverts multiplication") {
  const unsigned N = 24;
  const auto b = series_eval(SeriesExpr::regseq({2, 4, 6, 8}, {2, 4, 6, 8}), N);
  const auto m = series_eval(SeriesExpr::free_module({0, 2, 4, 6, 8}), N);
  const auto prod = series_multiply(m, b, N);
  CHECK(series_divide(prod, b, N) == m);
  CHECK_THROWS(series_divide(prod, series_eval(SeriesExpr::free_module({1}), N), N));
  CHECK(series_add({1, 2}, {0, 1, 5}) == oracle::Coeffs{1, 3, 5});
}

}  // TEST_SUITE
