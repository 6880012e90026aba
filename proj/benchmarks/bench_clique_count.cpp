#include <benchmark/benchmark.h>

#include "cliquealpha/clique_count.hpp"
#include "cliquealpha/generators.hpp"

using namespace cliquealpha;

static void BM_CountTriangles_Gnp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  Graph g = gnp_graph(n, 0.3, rng);
  for (auto _ : state) {
    CliqueStats s = count_cliques(g, 3);
    benchmark::DoNotOptimize(s.t);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_CountTriangles_Gnp)->Arg(100)->Arg(400)->Arg(1000)->Complexity();

static void BM_CountCliques_Order(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  Rng rng(2);
  Graph g = gnp_graph(120, 0.4, rng);
  for (auto _ : state) {
    CliqueStats st = count_cliques(g, s);
    benchmark::DoNotOptimize(st.t);
  }
}
BENCHMARK(BM_CountCliques_Order)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

static void BM_CountTriangles_Subset(benchmark::State& state) {
  Rng rng(3);
  Graph g = gnp_graph(600, 0.3, rng);
  VertexSet half(600);
  for (int v = 0; v < 600; v += 2) half.set(v);
  for (auto _ : state) {
    CliqueStats st = count_cliques_in_subset(g, half, 3);
    benchmark::DoNotOptimize(st.t);
  }
}
BENCHMARK(BM_CountTriangles_Subset);

BENCHMARK_MAIN();
