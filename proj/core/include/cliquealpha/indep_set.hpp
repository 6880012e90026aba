#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliquealpha/bounds.hpp"
#include "cliquealpha/clique_count.hpp"
#include "cliquealpha/graph.hpp"
#include "cliquealpha/rng.hpp"

namespace cliquealpha {

enum class Algorithm {
  TuranGreedy,
  PivotRecursion,
  NeighborhoodClean,
  AksGreedy,
  SparsifyRecurse,
  ExactBnb,
};

const char* algorithm_name(Algorithm a);

/// An explicit independent set plus the replayable record of how it was
/// found. Every producer re-verifies independence pairwise before emitting;
/// a violation is a logic error, never a degraded result.
struct Certificate {
  VertexSet vertices;
  Algorithm algorithm = Algorithm::TuranGreedy;
  std::uint64_t seed = 0;  // 0 for deterministic algorithms
  std::vector<std::string> trace;

  int size() const { return vertices.count(); }
};

/// Exact maximum independent set via branch and bound: branch on a
/// max-degree vertex (include/exclude), prune with a greedy clique cover,
/// fold in degree<=1 vertices for free. Refuses graphs with more than
/// `limit` vertices (and anything above 64, the bitset word width).
struct ExactAlphaResult {
  int alpha = 0;
  Certificate certificate;
  std::uint64_t nodes = 0;  // search tree size
};
ExactAlphaResult exact_alpha(const Graph& g, int limit = 64);

/// Min-degree greedy; guarantees (and asserts) size >= ceil(n/(d_avg+1)).
Certificate turan_greedy(const Graph& g);

/// X_v = d(v) - t(v)^(2/(s-1)), the derandomized vertex-selection score.
double pivot_score(const CliqueStats& stats, int s, int v);

/// Vertex maximizing X_v, ties to the lowest index. Asserts the max >= mean
/// averaging bound before returning.
int select_pivot_vertex(const Graph& g, const CliqueStats& stats, int s);

/// Low-clique-density recursion: below the density threshold
/// (1/c'_s) n^((s-2)/(s-1)) the min-degree greedy already meets the target,
/// otherwise recurse at order s-1 inside the best pivot's neighborhood.
/// Depth is at most s-2.
Certificate pivot_recursion(const Graph& g, int s, const ConstantChain& chain);

/// Picks v maximizing d(v) - 2 t(v), then deletes one endpoint per edge
/// inside N(v) until none remain. The survivor set is independent and has
/// size >= d(v) - 2 t(v) (asserted). Requires stats of order 3.
Certificate neighborhood_clean_set(const Graph& g, const CliqueStats& stats);

/// Triangle-aware heuristic: greedily delete the vertex in the most
/// triangles until triangle-free, run `repeats` random-permutation greedy
/// passes on the remainder, and return the best of that and turan_greedy on
/// the whole graph. Uncertified: quality is measured, not proven.
Certificate aks_greedy(const Graph& g, Rng& rng, int repeats = 16);

/// p = n / (t^(2/s) * 2^(1+2/s))             (order-s sparsification)
double sparsify_probability(std::uint64_t n, std::uint64_t t, int s);
/// p = (1/4) (n/t^(2/3)) (log(n/t^(1/3)))^(1/3)   (triangle variant)
double sparsify_probability_triangles(std::uint64_t n, std::uint64_t t);

/// One sampling round: S by independent inclusion with probability p, the
/// exact count T of s-cliques in G[S], and the two acceptance inequalities
/// |S| >= np/2 and T <= 2 t p^s.
struct SparsifyAttempt {
  VertexSet sample;
  std::uint64_t cliques_in_sample = 0;
  double p = 0.0;
  bool size_ok = false;
  bool markov_ok = false;
  bool accepted() const { return size_ok && markov_ok; }
};
SparsifyAttempt sparsify_attempt(const Graph& g, int s, std::uint64_t t,
                                 double p, Rng& rng);

/// High-clique-density route: sample S until both acceptance inequalities
/// hold (fresh randomness per retry), then run the low-density algorithm on
/// G[S] (order-s recursion in general, the triangle toolkit for s=3) and
/// lift the result. Requires t above the regime threshold. If the p formula
/// falls outside (0,1] the sampling step is skipped and the low-density
/// algorithm runs on G directly (recorded in the trace). Throws
/// SparsifyExhaustedError after max_retries failed rounds.
Certificate sparsify_and_recurse(const Graph& g, int s,
                                 const ConstantChain& chain, Rng& rng,
                                 int max_retries = 64);

/// Knobs of the s=3 dispatcher. epsilon and clean_factor are the case-split
/// thresholds d <= n^(1/4+epsilon) and d > clean_factor*sqrt(n log n).
struct DispatchConfig {
  double epsilon = 0.1;
  double clean_factor = 7.0;
  int aks_repeats = 16;
  int max_retries = 64;
};

struct CandidateRun {
  Algorithm algorithm = Algorithm::TuranGreedy;
  int size = 0;
  bool failed = false;
  double runtime_ms = 0.0;
  std::string note;
};

struct BestCertificate {
  Certificate best;
  std::vector<CandidateRun> candidates;
  std::string case1_route;  // which low-density route the s=3 case split picks
};

/// Runs every algorithm applicable to the (n,t) regime and keeps the largest
/// verified certificate. Ties go to the earlier candidate in the fixed run
/// order (turan, clean, pivot, aks, sparsify).
BestCertificate best_certificate(const Graph& g, int s,
                                 const ConstantChain& chain, Rng& rng,
                                 const DispatchConfig& cfg = {});

}  // namespace cliquealpha
