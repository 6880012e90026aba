#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// here are deliberately naive (subset enumeration, full power-set scans) so
// they share no code path with the implementations they check.

#include <cstdint>
#include <utility>
#include <vector>

#include "cliquealpha/clique_count.hpp"
#include "cliquealpha/graph.hpp"

namespace testsupport {

using cliquealpha::Graph;
using cliquealpha::VertexSet;

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, i + 5);
  }
  return Graph::from_edges(10, e);
}

/// Hub 0 joined to the cycle 1..k (W_k has k+1 vertices).
inline Graph wheel(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= k; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i % k + 1);
  }
  return Graph::from_edges(k + 1, e);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edges(a + b, e);
}

/// Oracle: exact s-clique count by enumerating every s-subset.
struct NaiveCliqueCounts {
  std::uint64_t t = 0;
  std::vector<std::uint64_t> per_vertex_t;
};

inline NaiveCliqueCounts naive_count_cliques(const Graph& g, int s) {
  const int n = g.vertex_count();
  NaiveCliqueCounts out;
  out.per_vertex_t.assign(static_cast<size_t>(n), 0);
  std::vector<int> idx(static_cast<size_t>(s));
  // lexicographic s-combinations of 0..n-1
  for (int i = 0; i < s; ++i) idx[static_cast<size_t>(i)] = i;
  if (s > n) return out;
  for (;;) {
    bool clique = true;
    for (int i = 0; i < s && clique; ++i)
      for (int j = i + 1; j < s && clique; ++j)
        if (!g.has_edge(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)])) clique = false;
    if (clique) {
      ++out.t;
      for (int i = 0; i < s; ++i) ++out.per_vertex_t[static_cast<size_t>(idx[static_cast<size_t>(i)])];
    }
    int k = s - 1;
    while (k >= 0 && idx[static_cast<size_t>(k)] == n - s + k) --k;
    if (k < 0) break;
    ++idx[static_cast<size_t>(k)];
    for (int i = k + 1; i < s; ++i) idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
  }
  return out;
}

/// Oracle: exact independence number by scanning the full power set.
/// Usable up to n ~ 24.
inline int brute_force_alpha(const Graph& g) {
  const int n = g.vertex_count();
  std::uint64_t adj[24] = {};
  for (int v = 0; v < n; ++v)
    g.neighbors(v).for_each([&](int u) { adj[v] |= 1ull << u; });
  int best = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    bool ok = true;
    for (std::uint64_t w = mask; w && ok; w &= w - 1) {
      int v = std::countr_zero(w);
      if (adj[v] & mask) ok = false;
    }
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

}  // namespace testsupport
