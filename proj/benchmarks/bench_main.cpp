#include <benchmark/benchmark.h>

#include "keyring/keyring.hpp"

using namespace keyring;

static void BM_FindLongCycleClique(benchmark::State& state) {
  Graph g = make_clique(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto cycle = find_long_cycle(g, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(cycle);
  }
}
BENCHMARK(BM_FindLongCycleClique)->Arg(8)->Arg(12)->Arg(16);

static void BM_FindLongCyclePetersenAbsent(benchmark::State& state) {
  EdgeList edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  Graph g(10, edges);
  for (auto _ : state) {
    auto cycle = find_long_cycle(g, 10);
    benchmark::DoNotOptimize(cycle);
  }
}
BENCHMARK(BM_FindLongCyclePetersenAbsent);

static void BM_CloseUnderPaths(benchmark::State& state) {
  Graph g = gen_random_dense(static_cast<int>(state.range(0)), 6, 11);
  auto seed = find_long_cycle(g, 6);
  for (auto _ : state) {
    auto cs = close_under_paths(g, *seed, 6);
    benchmark::DoNotOptimize(cs);
  }
}
BENCHMARK(BM_CloseUnderPaths)->Arg(20)->Arg(40);

static void BM_FindHeavyCycle(benchmark::State& state) {
  Graph g = gen_random_dense(static_cast<int>(state.range(0)), 6, 3);
  for (auto _ : state) {
    auto witness = find_heavy_cycle(g, 6);
    benchmark::DoNotOptimize(witness);
  }
}
BENCHMARK(BM_FindHeavyCycle)->Arg(20)->Arg(30)->Arg(40);

static void BM_Extract(benchmark::State& state) {
  Graph g = gen_random_dense(static_cast<int>(state.range(0)), 6, 5);
  for (auto _ : state) {
    Keyring kr = extract(g, 6, 3);
    benchmark::DoNotOptimize(kr);
  }
}
BENCHMARK(BM_Extract)->Arg(20)->Arg(30);

static void BM_OracleClique(benchmark::State& state) {
  Graph g = make_clique(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    bool exists = oracle_exists_keyring(g, 6, 3);
    benchmark::DoNotOptimize(exists);
  }
}
BENCHMARK(BM_OracleClique)->Arg(7)->Arg(9);

BENCHMARK_MAIN();
