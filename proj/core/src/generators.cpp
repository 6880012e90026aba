#include "cliquealpha/generators.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace cliquealpha {

Graph gnp_graph(int n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0,1]");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_bernoulli(p)) b.add_edge(u, v);
  return b.build();
}

Graph triangle_free_process(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("triangle_free_process needs n >= 1");
  GraphBuilder b(n);

  std::vector<std::pair<int, int>> open;
  open.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) open.emplace_back(u, v);

  // Uniform choice over open pairs with lazy deletion: a sampled pair that
  // would close a triangle can never become legal again, so dropping it
  // keeps the conditional choice uniform over the legal pairs.
  while (!open.empty()) {
    size_t i = static_cast<size_t>(rng.next_below(open.size()));
    auto [u, v] = open[i];
    open[i] = open.back();
    open.pop_back();
    if (!b.neighbors(u).intersects(b.neighbors(v))) b.add_edge(u, v);
  }

  Graph g = b.build();
  for (auto [u, v] : g.edges())
    if (g.neighbors(u).intersects(g.neighbors(v)))
      throw std::logic_error("triangle_free_process produced a triangle");
  return g;
}

}  // namespace cliquealpha
