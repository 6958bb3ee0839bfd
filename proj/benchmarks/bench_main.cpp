#include <benchmark/benchmark.h>

#include "chowdefect/catalog.hpp"
#include "chowdefect/hilbert.hpp"
#include "chowdefect/steenrod.hpp"
#include "chowdefect/symfun.hpp"

using namespace chowdefect;

namespace {

// Fresh handle per iteration so the cached basis is not reused.
IdealHandle fresh(const IdealHandle& I) { return IdealHandle(I.ring(), I.generators()); }

const char* const kCases[] = {"pu3", "spin7", "spin9", "f4_top", "f4_chow", "spin_stable:6:12"};

void BM_GroebnerKer(benchmark::State& state) {
  const auto c = build_case(kCases[state.range(0)]);
  state.SetLabel(c.id);
  for (auto _ : state) {
    const auto I = fresh(*c.ker_ideal);
    benchmark::DoNotOptimize(I.basis(24));
  }
}
BENCHMARK(BM_GroebnerKer)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_HilbertStaircase(benchmark::State& state) {
  const auto c = build_case(kCases[state.range(0)]);
  state.SetLabel(c.id);
  for (auto _ : state) {
    const auto I = fresh(*c.im_ideal);
    benchmark::DoNotOptimize(hilbert_function_staircase(I, 24));
  }
}
BENCHMARK(BM_HilbertStaircase)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_HilbertLinalg(benchmark::State& state) {
  const auto c = build_case(kCases[state.range(0)]);
  state.SetLabel(c.id);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_function_linalg(*c.im_ideal, 24));
}
BENCHMARK(BM_HilbertLinalg)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

// One Macaulay slice, for growing degree, on the F4 Ker ideal.
void BM_MacaulaySlice(benchmark::State& state) {
  const auto c = build_case("f4_chow");
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hf_linalg(*c.ker_ideal, d));
}
BENCHMARK(BM_MacaulaySlice)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_TotalPower(benchmark::State& state) {
  const auto r = RingContext::standard(3, 4);
  const auto toda = toda_generators(r);
  const auto& f = toda[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(f.name);
  for (auto _ : state) benchmark::DoNotOptimize(total_power(f.value));
}
BENCHMARK(BM_TotalPower)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_DicksonSuite(benchmark::State& state) {
  const auto h = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dickson_suite(h));
}
BENCHMARK(BM_DicksonSuite)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
