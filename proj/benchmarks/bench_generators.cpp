#include <benchmark/benchmark.h>

#include "cliquealpha/bounds.hpp"
#include "cliquealpha/constructions.hpp"
#include "cliquealpha/generators.hpp"

using namespace cliquealpha;

static void BM_TriangleFreeProcess(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    Rng rng(seed++);
    Graph g = triangle_free_process(n, rng);
    benchmark::DoNotOptimize(g.edge_count());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_TriangleFreeProcess)->Arg(100)->Arg(300)->Arg(1000)->Complexity();

static void BM_Gnp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    Rng rng(seed++);
    Graph g = gnp_graph(n, 0.5, rng);
    benchmark::DoNotOptimize(g.edge_count());
  }
}
BENCHMARK(BM_Gnp)->Arg(500)->Arg(2000);

static void BM_LexBlowup(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  const std::uint64_t t = static_cast<std::uint64_t>(
      20.0 * triangle_regime_threshold(n));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    Rng rng(seed++);
    auto [g, spec] = build_lex_blowup(n, t, rng, true);
    benchmark::DoNotOptimize(g.edge_count());
  }
}
BENCHMARK(BM_LexBlowup)->Arg(300)->Arg(1000);

BENCHMARK_MAIN();
