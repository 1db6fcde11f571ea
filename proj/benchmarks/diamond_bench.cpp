#include <benchmark/benchmark.h>

#include "orbidiamond/lg_algebra.hpp"
#include "orbidiamond/orbifold_diamond.hpp"

using namespace orbidiamond;

static void BM_CrTable(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const bool invariant = state.range(1) != 0;
  TableOptions opts;
  opts.keep_sectors = false;
  for (auto _ : state) benchmark::DoNotOptimize(cr_table(d, d - 1, invariant, opts));
}
BENCHMARK(BM_CrTable)->Args({5, 1})->Args({5, 0})->Args({6, 1})->Unit(benchmark::kMillisecond);

static void BM_StateSpace(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(state_space(d, d - 1));
}
BENCHMARK(BM_StateSpace)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
