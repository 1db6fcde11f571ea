#include <benchmark/benchmark.h>

#include "orbidiamond/sector_product.hpp"

using namespace orbidiamond;

static void BM_TheoremA(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto sweep = state.range(1) != 0 ? PairSweep::PermutationReduced : PairSweep::Full;
  std::uint64_t pairs = 0;
  for (auto _ : state) {
    const auto r = theorem_a_certificate(d, d - 1, sweep);
    pairs += r.pairs_checked;
    benchmark::DoNotOptimize(r.holds);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(pairs));
}
BENCHMARK(BM_TheoremA)->Args({5, 0})->Args({5, 1})->Args({6, 1})->Unit(benchmark::kMillisecond);

static void BM_PropIneq(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(prop_ineq_check(5, 4));
}
BENCHMARK(BM_PropIneq)->Unit(benchmark::kMillisecond);
