#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cliquealpha/vertex_set.hpp"

namespace cliquealpha {

/// Immutable undirected simple graph with one bitset adjacency row per
/// vertex. Construction collapses duplicate edges and rejects self-loops;
/// after that the object never changes, so concurrent readers are safe.
class Graph {
 public:
  Graph() = default;

  /// n isolated vertices.
  explicit Graph(int n);

  /// Build from an edge list. Throws std::invalid_argument on out-of-range
  /// endpoints or self-loops. Duplicate edges collapse.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  static Graph complete(int n);

  int vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return m_; }

  int degree(int v) const { return degree_[static_cast<size_t>(v)]; }
  const VertexSet& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  bool has_edge(int u, int v) const { return adj_[static_cast<size_t>(u)].test(v); }

  /// 2m/n; 0 for the empty vertex set.
  double average_degree() const {
    return n_ == 0 ? 0.0 : 2.0 * static_cast<double>(m_) / n_;
  }

  VertexSet all_vertices() const { return VertexSet::full(n_); }

  /// Edges as (u,v) pairs with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  /// Induced subgraph on `keep`, vertices renumbered 0..k-1 in increasing
  /// order of original id. If old_ids is non-null it receives the map from
  /// new id to original id.
  Graph induced(const VertexSet& keep, std::vector<int>* old_ids = nullptr) const;

  bool is_independent(const VertexSet& s) const;

  /// Symmetry, no self-loops, m == half the popcount sum. Cheap; used by
  /// tests and debug asserts.
  bool check_invariants() const;

 private:
  friend class GraphBuilder;

  int n_ = 0;
  std::uint64_t m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<int> degree_;
};

/// Mutable edge accumulator used by generators and IO; seals into a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  /// Adds u-v if absent. Throws std::invalid_argument on self-loop or
  /// out-of-range endpoint. Returns false when the edge was already there.
  bool add_edge(int u, int v);

  bool has_edge(int u, int v) const { return g_.adj_[static_cast<size_t>(u)].test(v); }
  const VertexSet& neighbors(int v) const { return g_.adj_[static_cast<size_t>(v)]; }
  int vertex_count() const { return g_.n_; }

  Graph build();

 private:
  Graph g_;
};

/// Disjoint union: vertices of b are shifted up by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace cliquealpha
