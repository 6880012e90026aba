#include "cliquealpha/clique_count.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "cliquealpha/errors.hpp"

namespace cliquealpha {

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // division exact at each step
    // The partials C(n-k+i, i) are nondecreasing in i, so saturation is final.
    if (r > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<int> degeneracy_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
  VertexSet alive = VertexSet::full(n);

  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    alive.for_each([&](int v) {
      if (best == -1 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(best)]) best = v;
    });
    order.push_back(best);
    alive.reset(best);
    VertexSet nb = g.neighbors(best);
    nb &= alive;
    nb.for_each([&](int u) { --deg[static_cast<size_t>(u)]; });
  }
  return order;
}

namespace {

struct Accum {
  std::uint64_t t = 0;
  std::vector<std::uint64_t> per_vertex_t;

  explicit Accum(int n) : per_vertex_t(static_cast<size_t>(n), 0) {}

  void add_t(std::uint64_t k) {
    if (t > std::numeric_limits<std::uint64_t>::max() - k)
      throw CountOverflowError("s-clique count exceeds 64 bits");
    t += k;
  }
};

// Enumerates s-cliques rooted at `root` in the DAG given by `later` (the
// neighbors that come after each vertex in the degeneracy order). `stack`
// holds the clique so far; at depth s-1 every candidate closes one clique.
// scratch[depth] is the candidate buffer for the next level, reused across
// siblings to keep the inner loop allocation-free.
void extend(const std::vector<VertexSet>& later, int s, int depth,
            std::vector<int>& stack, const VertexSet& cand,
            std::vector<VertexSet>& scratch, Accum& acc) {
  if (depth == s - 1) {
    const std::uint64_t closed = static_cast<std::uint64_t>(cand.count());
    if (closed == 0) return;
    acc.add_t(closed);
    for (int w : stack) acc.per_vertex_t[static_cast<size_t>(w)] += closed;
    cand.for_each([&](int u) { ++acc.per_vertex_t[static_cast<size_t>(u)]; });
    return;
  }
  cand.for_each([&](int u) {
    VertexSet& next = scratch[static_cast<size_t>(depth)];
    next = cand;
    next &= later[static_cast<size_t>(u)];
    if (next.count() >= s - depth - 1) {
      stack.push_back(u);
      extend(later, s, depth + 1, stack, next, scratch, acc);
      stack.pop_back();
    }
  });
}

CliqueStats count_impl(const Graph& g, const VertexSet& subset, int s, int threads) {
  const int n = g.vertex_count();
  if (s < 2) throw std::invalid_argument("clique order must be >= 2");
  if (s > n) throw std::invalid_argument("clique order " + std::to_string(s) +
                                         " exceeds vertex count " + std::to_string(n));

  CliqueStats stats;
  stats.s = s;
  stats.universe = subset.count();
  stats.per_vertex_t.assign(static_cast<size_t>(n), 0);
  stats.per_vertex_d.assign(static_cast<size_t>(n), 0);

  std::uint64_t induced_degree_sum = 0;
  subset.for_each([&](int v) {
    int d = g.neighbors(v).and_count(subset);
    stats.per_vertex_d[static_cast<size_t>(v)] = d;
    induced_degree_sum += static_cast<std::uint64_t>(d);
  });
  stats.d_avg = stats.universe == 0
                    ? 0.0
                    : static_cast<double>(induced_degree_sum) / stats.universe;
  if (stats.universe == 0) return stats;

  // Degeneracy order of the masked graph; roots and candidate sets both live
  // inside `subset`, so no induced copy is made.
  std::vector<int> order;
  {
    std::vector<int> deg = stats.per_vertex_d;
    VertexSet alive = subset;
    const int k = stats.universe;
    order.reserve(static_cast<size_t>(k));
    for (int step = 0; step < k; ++step) {
      int best = -1;
      alive.for_each([&](int v) {
        if (best == -1 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(best)]) best = v;
      });
      order.push_back(best);
      alive.reset(best);
      VertexSet nb = g.neighbors(best);
      nb &= alive;
      nb.for_each([&](int u) { --deg[static_cast<size_t>(u)]; });
    }
  }

  std::vector<int> pos(static_cast<size_t>(n), -1);
  for (size_t i = 0; i < order.size(); ++i) pos[static_cast<size_t>(order[i])] = static_cast<int>(i);

  std::vector<VertexSet> later(static_cast<size_t>(n));
  subset.for_each([&](int v) {
    VertexSet row = g.neighbors(v);
    row &= subset;
    VertexSet filtered(n);
    row.for_each([&](int u) {
      if (pos[static_cast<size_t>(u)] > pos[static_cast<size_t>(v)]) filtered.set(u);
    });
    later[static_cast<size_t>(v)] = std::move(filtered);
  });

  auto run_roots = [&](size_t begin, size_t end, Accum& acc) {
    std::vector<int> stack;
    stack.reserve(static_cast<size_t>(s));
    std::vector<VertexSet> scratch(static_cast<size_t>(s), VertexSet(n));
    for (size_t i = begin; i < end; ++i) {
      int root = order[i];
      stack.push_back(root);
      extend(later, s, 1, stack, later[static_cast<size_t>(root)], scratch, acc);
      stack.pop_back();
    }
  };

  const size_t nroots = order.size();
  int workers = threads < 1 ? 1 : threads;
  if (static_cast<size_t>(workers) > nroots) workers = static_cast<int>(nroots);

  Accum total(n);
  if (workers <= 1) {
    run_roots(0, nroots, total);
  } else {
    std::vector<Accum> parts(static_cast<size_t>(workers), Accum(n));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      size_t lo = nroots * static_cast<size_t>(w) / static_cast<size_t>(workers);
      size_t hi = nroots * static_cast<size_t>(w + 1) / static_cast<size_t>(workers);
      pool.emplace_back([&, lo, hi, w] { run_roots(lo, hi, parts[static_cast<size_t>(w)]); });
    }
    for (auto& th : pool) th.join();
    for (const Accum& part : parts) {
      total.add_t(part.t);
      for (size_t v = 0; v < part.per_vertex_t.size(); ++v)
        total.per_vertex_t[v] += part.per_vertex_t[v];
    }
  }

  stats.t = total.t;
  stats.per_vertex_t = std::move(total.per_vertex_t);

  std::uint64_t handshake = 0;
  for (std::uint64_t x : stats.per_vertex_t) handshake += x;
  if (handshake != static_cast<std::uint64_t>(s) * stats.t)
    throw std::logic_error("clique handshake identity violated");
  return stats;
}

}  // namespace

CliqueStats count_cliques(const Graph& g, int s, int threads) {
  return count_impl(g, g.all_vertices(), s, threads);
}

CliqueStats count_cliques_in_subset(const Graph& g, const VertexSet& subset,
                                    int s, int threads) {
  if (s < 2) throw std::invalid_argument("clique order must be >= 2");
  if (subset.none()) {
    CliqueStats stats;
    stats.s = s;
    stats.universe = 0;
    stats.per_vertex_t.assign(static_cast<size_t>(g.vertex_count()), 0);
    stats.per_vertex_d.assign(static_cast<size_t>(g.vertex_count()), 0);
    return stats;
  }
  return count_impl(g, subset, s, threads);
}

}  // namespace cliquealpha
