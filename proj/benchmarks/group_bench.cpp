#include <benchmark/benchmark.h>

#include "orbidiamond/fermat_group.hpp"

using namespace orbidiamond;

static void BM_Enumerate(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(d, d - 1));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(group_order(d, d - 1)));
}
BENCHMARK(BM_Enumerate)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_CensusByEnumeration(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_by_enumeration(d, d - 1));
}
BENCHMARK(BM_CensusByEnumeration)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_CensusByCounting(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_by_counting(d, d - 1));
}
BENCHMARK(BM_CensusByCounting)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);
