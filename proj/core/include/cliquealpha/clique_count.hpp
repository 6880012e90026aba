#pragma once

#include <cstdint>
#include <vector>

#include "cliquealpha/graph.hpp"

namespace cliquealpha {

/// Exact s-clique statistics. t is the global count, per_vertex_t[v] the
/// number of s-cliques containing v. The handshake identity
/// sum_v per_vertex_t[v] == s*t is asserted on construction.
struct CliqueStats {
  int s = 0;
  int universe = 0;                        // vertices considered (|subset|)
  std::uint64_t t = 0;                     // total s-cliques
  std::vector<std::uint64_t> per_vertex_t; // sized to the host graph
  std::vector<int> per_vertex_d;           // degree within the subset
  double d_avg = 0.0;                      // 2m/n over the subset

  std::uint64_t t_of(int v) const { return per_vertex_t[static_cast<size_t>(v)]; }
  int d_of(int v) const { return per_vertex_d[static_cast<size_t>(v)]; }
};

/// Exact count by neighborhood-intersection recursion over a degeneracy
/// ordering; every clique is enumerated once. Requires 2 <= s <= n. With
/// threads > 1 root vertices are partitioned across workers and the
/// per-worker accumulators merged; the result does not depend on the worker
/// count. Throws CountOverflowError if t would exceed 2^64-1.
CliqueStats count_cliques(const Graph& g, int s, int threads = 1);

/// Same counts restricted to the induced subgraph g[subset], implemented by
/// masking adjacency rows. per_vertex arrays stay indexed by the original
/// vertex ids. An empty subset yields t=0 with universe 0.
CliqueStats count_cliques_in_subset(const Graph& g, const VertexSet& subset,
                                    int s, int threads = 1);

/// C(n,k) clamped to UINT64_MAX on overflow. Handy for "t <= C(n,s)" checks
/// where saturation is the right behavior.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k);

/// Min-degree (degeneracy) elimination order, ties to the lowest index.
std::vector<int> degeneracy_order(const Graph& g);

}  // namespace cliquealpha
