// Optimized (OpenMP, incremental) kernels vs the serial reference paths.

#include <benchmark/benchmark.h>

#include "icint/graphgen.hpp"
#include "icint/reference.hpp"
#include "icint/seed_selection.hpp"
#include "icint/spread.hpp"

namespace {

using namespace icint;

InfluenceGraph bench_graph(std::size_t n) {
  PowerLawConfig cfg;
  cfg.n_nodes = n;
  cfg.seed = 7;
  return normalize_weighted_cascade(gen_power_law_graph(cfg));
}

void BM_SpreadParallel(benchmark::State& state) {
  InfluenceGraph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  SamplerConfig cfg{1, 2000, DiffusionMode::ICInt};
  NodeSet seeds{0, 1, 2, 3, 4};
  for (auto _ : state)
    benchmark::DoNotOptimize(estimate_spread(g, seeds, cfg));
}
BENCHMARK(BM_SpreadParallel)->Arg(500)->Arg(2000);

void BM_SpreadReference(benchmark::State& state) {
  InfluenceGraph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  SamplerConfig cfg{1, 2000, DiffusionMode::ICInt};
  NodeSet seeds{0, 1, 2, 3, 4};
  for (auto _ : state)
    benchmark::DoNotOptimize(reference_estimate_spread(g, seeds, cfg));
}
BENCHMARK(BM_SpreadReference)->Arg(500)->Arg(2000);

void BM_GreedyLazy(benchmark::State& state) {
  InfluenceGraph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  SamplerConfig cfg{1, 200, DiffusionMode::ICInt};
  for (auto _ : state) benchmark::DoNotOptimize(lazy_greedy(g, 5, cfg));
}
BENCHMARK(BM_GreedyLazy)->Arg(200)->Arg(500);

void BM_GreedyReference(benchmark::State& state) {
  InfluenceGraph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  SamplerConfig cfg{1, 200, DiffusionMode::ICInt};
  for (auto _ : state) benchmark::DoNotOptimize(reference_greedy(g, 5, cfg));
}
BENCHMARK(BM_GreedyReference)->Arg(200)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
