#include <benchmark/benchmark.h>

#include "cliquealpha/bounds.hpp"
#include "cliquealpha/generators.hpp"
#include "cliquealpha/indep_set.hpp"

using namespace cliquealpha;

static void BM_ExactAlpha(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  Graph g = gnp_graph(n, 0.25, rng);
  for (auto _ : state) {
    ExactAlphaResult r = exact_alpha(g);
    benchmark::DoNotOptimize(r.alpha);
  }
}
BENCHMARK(BM_ExactAlpha)->Arg(30)->Arg(45)->Arg(60);

static void BM_TuranGreedy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(8);
  Graph g = gnp_graph(n, 0.1, rng);
  for (auto _ : state) {
    Certificate c = turan_greedy(g);
    benchmark::DoNotOptimize(c.vertices);
  }
}
BENCHMARK(BM_TuranGreedy)->Arg(200)->Arg(1000)->Arg(2000);

static void BM_AksGreedy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(9);
  Graph g = gnp_graph(n, 0.15, rng);
  for (auto _ : state) {
    Rng arng(1);
    Certificate c = aks_greedy(g, arng, 8);
    benchmark::DoNotOptimize(c.vertices);
  }
}
BENCHMARK(BM_AksGreedy)->Arg(100)->Arg(300);

static void BM_BestCertificate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(10);
  Graph g = gnp_graph(n, 0.3, rng);
  ConstantChain chain = solve_constant_chain(5, 1.0 / 3.0);
  for (auto _ : state) {
    Rng arng(2);
    BestCertificate b = best_certificate(g, 3, chain, arng);
    benchmark::DoNotOptimize(b.best.vertices);
  }
}
BENCHMARK(BM_BestCertificate)->Arg(60)->Arg(150);

BENCHMARK_MAIN();
