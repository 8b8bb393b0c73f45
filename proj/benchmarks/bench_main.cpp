#include <benchmark/benchmark.h>

#include "posetlab/enumerate.hpp"
#include "posetlab/families.hpp"
#include "posetlab/labelling.hpp"
#include "posetlab/order_ops.hpp"
#include "posetlab/supersolvability.hpp"

using namespace posetlab;

static void BM_PartitionLattice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partition_lattice(n));
}
BENCHMARK(BM_PartitionLattice)->DenseRange(3, 6);

static void BM_NonStraddlingLattice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nonstraddling_lattice(n));
}
BENCHMARK(BM_NonStraddlingLattice)->DenseRange(3, 6);

static void BM_ElCheck(benchmark::State& state) {
  PartitionFamily f = nonstraddling_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_el_labelling(f.labelling));
}
BENCHMARK(BM_ElCheck)->DenseRange(4, 6);

static void BM_InterpolatingCheck(benchmark::State& state) {
  PartitionFamily f = nonstraddling_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_interpolating(f.labelling));
}
BENCHMARK(BM_InterpolatingCheck)->DenseRange(4, 5);

static void BM_FindLeftModularChains(benchmark::State& state) {
  PartitionFamily f = partition_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_left_modular_chains(*f.poset));
}
BENCHMARK(BM_FindLeftModularChains)->DenseRange(3, 5);

static void BM_Supersolvable(benchmark::State& state) {
  PartitionFamily f = partition_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_supersolvable(*f.poset));
}
BENCHMARK(BM_Supersolvable)->DenseRange(3, 4);

static void BM_EnumerateBounded(benchmark::State& state) {
  const auto max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_bounded_posets(max, false));
}
BENCHMARK(BM_EnumerateBounded)->DenseRange(4, 7);

BENCHMARK_MAIN();
