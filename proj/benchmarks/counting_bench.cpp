#include <benchmark/benchmark.h>

#include "indcount/counting.hpp"
#include "indcount/generators.hpp"
#include "indcount/independence.hpp"

using namespace indcount;

static void BM_CountTriangleFree(benchmark::State& state) {
  const auto g = triangle_free_process(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(count_exact(g));
}
BENCHMARK(BM_CountTriangleFree)->Arg(30)->Arg(45)->Arg(60);

static void BM_CountCycle(benchmark::State& state) {
  const auto g = cycle_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_exact(g));
}
BENCHMARK(BM_CountCycle)->Arg(64)->Arg(256);

static void BM_CountLinearHypergraph(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = random_linear_hypergraph(n, 2, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(count_exact(h));
}
BENCHMARK(BM_CountLinearHypergraph)->Arg(20)->Arg(30)->Arg(40);

static void BM_AlphaExact(benchmark::State& state) {
  const auto g = triangle_free_process(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(alpha_exact(g));
}
BENCHMARK(BM_AlphaExact)->Arg(40)->Arg(60);

static void BM_TriangleFreeProcess(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(triangle_free_process(static_cast<std::size_t>(state.range(0)), ++seed));
  }
}
BENCHMARK(BM_TriangleFreeProcess)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
