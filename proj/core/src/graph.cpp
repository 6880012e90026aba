#include "cliquealpha/graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace cliquealpha {

Graph::Graph(int n) : n_(n), m_(0) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.assign(static_cast<size_t>(n), VertexSet(n));
  degree_.assign(static_cast<size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Graph Graph::complete(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for (int v = adj_[static_cast<size_t>(u)].next(u); v != -1;
         v = adj_[static_cast<size_t>(u)].next(v))
      out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::induced(const VertexSet& keep, std::vector<int>* old_ids) const {
  std::vector<int> ids = keep.to_vector();
  std::vector<int> new_id(static_cast<size_t>(n_), -1);
  for (size_t i = 0; i < ids.size(); ++i) new_id[static_cast<size_t>(ids[i])] = static_cast<int>(i);

  GraphBuilder b(static_cast<int>(ids.size()));
  for (size_t i = 0; i < ids.size(); ++i) {
    VertexSet row = adj_[static_cast<size_t>(ids[i])];
    row &= keep;
    row.for_each([&](int v) {
      if (v > ids[i]) b.add_edge(static_cast<int>(i), new_id[static_cast<size_t>(v)]);
    });
  }
  if (old_ids) *old_ids = std::move(ids);
  return b.build();
}

bool Graph::is_independent(const VertexSet& s) const {
  bool ok = true;
  s.for_each([&](int v) {
    if (adj_[static_cast<size_t>(v)].intersects(s)) ok = false;
  });
  return ok;
}

bool Graph::check_invariants() const {
  std::uint64_t pop = 0;
  for (int v = 0; v < n_; ++v) {
    const VertexSet& row = adj_[static_cast<size_t>(v)];
    if (row.test(v)) return false;
    if (row.count() != degree_[static_cast<size_t>(v)]) return false;
    pop += static_cast<std::uint64_t>(degree_[static_cast<size_t>(v)]);
    for (int u = row.first(); u != -1; u = row.next(u))
      if (!adj_[static_cast<size_t>(u)].test(v)) return false;
  }
  return pop == 2 * m_;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

bool GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
    throw std::invalid_argument("edge endpoint out of range: " +
                                std::to_string(u) + " " + std::to_string(v));
  if (u == v)
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (g_.adj_[static_cast<size_t>(u)].test(v)) return false;
  g_.adj_[static_cast<size_t>(u)].set(v);
  g_.adj_[static_cast<size_t>(v)].set(u);
  ++g_.degree_[static_cast<size_t>(u)];
  ++g_.degree_[static_cast<size_t>(v)];
  ++g_.m_;
  return true;
}

Graph GraphBuilder::build() {
  assert(g_.check_invariants());
  return std::move(g_);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.vertex_count();
  GraphBuilder out(na + b.vertex_count());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(na + u, na + v);
  return out.build();
}

}  // namespace cliquealpha
