#include "cliquealpha/indep_set.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <stdexcept>

#include "cliquealpha/errors.hpp"

namespace cliquealpha {

namespace {

std::string strf(const char* fmt, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, fmt);
  vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  return buf;
}

// Pairwise O(size^2) independence check; certificates are never emitted
// on trust.
void verify_certificate(const Graph& g, const Certificate& cert) {
  std::vector<int> vs = cert.vertices.to_vector();
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (g.has_edge(vs[i], vs[j]))
        throw std::logic_error(std::string(algorithm_name(cert.algorithm)) +
                               " emitted a dependent vertex set");
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
  return b == 0 ? 0 : (a + b - 1) / b;
}

}  // namespace

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::TuranGreedy: return "turan_greedy";
    case Algorithm::PivotRecursion: return "pivot_recursion";
    case Algorithm::NeighborhoodClean: return "neighborhood_clean";
    case Algorithm::AksGreedy: return "aks_greedy";
    case Algorithm::SparsifyRecurse: return "sparsify_recurse";
    case Algorithm::ExactBnb: return "exact_bnb";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// exact maximum independent set, n <= 64

namespace {

struct Bnb {
  int n = 0;
  std::uint64_t adj[64] = {};
  std::uint64_t best_mask = 0;
  int best_size = 0;
  std::uint64_t nodes = 0;

  static int pop(std::uint64_t w) { return std::popcount(w); }

  int cover_bound(std::uint64_t cand) const {
    // Greedy clique cover of cand; the number of cliques bounds alpha.
    std::uint64_t cliques[64];
    int k = 0;
    while (cand) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      bool placed = false;
      for (int i = 0; i < k; ++i) {
        if ((cliques[i] & ~adj[v]) == 0) {
          cliques[i] |= 1ull << v;
          placed = true;
          break;
        }
      }
      if (!placed) cliques[k++] = 1ull << v;
    }
    return k;
  }

  void solve(std::uint64_t cand, std::uint64_t cur, int cur_size) {
    ++nodes;
    // Fold in vertices with at most one candidate neighbor: always optimal.
    while (cand) {
      int take = -1;
      for (std::uint64_t w = cand; w;) {
        int v = std::countr_zero(w);
        w &= w - 1;
        if (pop(adj[v] & cand) <= 1) {
          take = v;
          break;
        }
      }
      if (take == -1) break;
      cur |= 1ull << take;
      ++cur_size;
      cand &= ~(adj[take] | (1ull << take));
    }
    if (cur_size > best_size) {
      best_size = cur_size;
      best_mask = cur;
    }
    if (!cand) return;
    if (cur_size + cover_bound(cand) <= best_size) return;

    // Branch on a maximum-degree candidate, lowest index on ties.
    int v = -1, vd = -1;
    for (std::uint64_t w = cand; w;) {
      int u = std::countr_zero(w);
      w &= w - 1;
      int d = pop(adj[u] & cand);
      if (d > vd) {
        vd = d;
        v = u;
      }
    }
    solve(cand & ~(adj[v] | (1ull << v)), cur | (1ull << v), cur_size + 1);
    solve(cand & ~(1ull << v), cur, cur_size);
  }
};

}  // namespace

ExactAlphaResult exact_alpha(const Graph& g, int limit) {
  const int n = g.vertex_count();
  const int cap = std::min(limit, 64);
  if (n > cap)
    throw std::invalid_argument("exact_alpha refused: n=" + std::to_string(n) +
                                " exceeds the oracle cap " + std::to_string(cap));
  Bnb bnb;
  bnb.n = n;
  for (int v = 0; v < n; ++v)
    g.neighbors(v).for_each([&](int u) { bnb.adj[v] |= 1ull << u; });

  if (n > 0) bnb.solve((n == 64) ? ~0ull : ((1ull << n) - 1), 0, 0);

  ExactAlphaResult res;
  res.alpha = bnb.best_size;
  res.nodes = bnb.nodes;
  res.certificate.algorithm = Algorithm::ExactBnb;
  res.certificate.vertices = VertexSet(n);
  for (int v = 0; v < n; ++v)
    if ((bnb.best_mask >> v) & 1) res.certificate.vertices.set(v);
  res.certificate.trace.push_back(
      strf("bnb n=%d alpha=%d nodes=%llu", n, res.alpha,
           static_cast<unsigned long long>(res.nodes)));
  verify_certificate(g, res.certificate);
  return res;
}

// ---------------------------------------------------------------------------
// min-degree greedy

Certificate turan_greedy(const Graph& g) {
  const int n = g.vertex_count();
  Certificate cert;
  cert.algorithm = Algorithm::TuranGreedy;
  cert.vertices = VertexSet(n);

  VertexSet alive = VertexSet::full(n);
  std::vector<int> deg(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);

  while (alive.any()) {
    int pick = -1;
    alive.for_each([&](int v) {
      if (pick == -1 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(pick)]) pick = v;
    });
    cert.vertices.set(pick);
    VertexSet closed = g.neighbors(pick);
    closed &= alive;
    closed.set(pick);
    alive -= closed;
    closed.for_each([&](int u) {
      VertexSet nb = g.neighbors(u);
      nb &= alive;
      nb.for_each([&](int w) { --deg[static_cast<size_t>(w)]; });
    });
  }

  // Guaranteed floor: size >= ceil(n/(d_avg+1)) = ceil(n^2/(2m+n)).
  if (n > 0) {
    std::uint64_t un = static_cast<std::uint64_t>(n);
    std::uint64_t floor_size = ceil_div(un * un, 2 * g.edge_count() + un);
    if (static_cast<std::uint64_t>(cert.vertices.count()) < floor_size)
      throw std::logic_error("turan_greedy fell below its guaranteed size");
    cert.trace.push_back(strf("turan n=%d m=%llu size=%d floor=%llu", n,
                              static_cast<unsigned long long>(g.edge_count()),
                              cert.vertices.count(),
                              static_cast<unsigned long long>(floor_size)));
  }
  verify_certificate(g, cert);
  return cert;
}

// ---------------------------------------------------------------------------
// pivot selection and recursion

double pivot_score(const CliqueStats& stats, int s, int v) {
  return static_cast<double>(stats.d_of(v)) -
         std::pow(static_cast<double>(stats.t_of(v)), 2.0 / (s - 1));
}

int select_pivot_vertex(const Graph& g, const CliqueStats& stats, int s) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("empty graph has no pivot");
  if (stats.s != s) throw std::invalid_argument("stats computed for a different order");
  int best = 0;
  double best_score = pivot_score(stats, s, 0);
  double sum = best_score;
  for (int v = 1; v < n; ++v) {
    double x = pivot_score(stats, s, v);
    sum += x;
    if (x > best_score) {
      best_score = x;
      best = v;
    }
  }
  // max >= mean, modulo summation rounding
  double mean = sum / n;
  if (best_score < mean - 1e-9 * (1.0 + std::abs(mean)))
    throw std::logic_error("pivot score fell below the average");
  return best;
}

namespace {

VertexSet pivot_rec_impl(const Graph& g, int s, const ConstantChain& chain,
                         int depth, std::vector<std::string>& trace) {
  const int n = g.vertex_count();
  if (n == 0) return VertexSet(0);

  bool greedy_route = s == 2 || s > n;
  double threshold = 0.0;
  if (!greedy_route) {
    threshold = 1.0 / chain.cs_prime(s) *
                std::pow(static_cast<double>(n), (s - 2.0) / (s - 1.0));
    greedy_route = g.average_degree() <= threshold;
  }
  if (greedy_route) {
    trace.push_back(strf("depth=%d s=%d route=greedy d_avg=%.6g thr=%.6g",
                         depth, s, g.average_degree(), threshold));
    return turan_greedy(g).vertices;
  }

  CliqueStats stats = count_cliques(g, s);
  int v = select_pivot_vertex(g, stats, s);
  trace.push_back(strf("depth=%d s=%d route=pivot v=%d X=%.6g d=%d tv=%llu",
                       depth, s, v, pivot_score(stats, s, v), stats.d_of(v),
                       static_cast<unsigned long long>(stats.t_of(v))));

  std::vector<int> old_ids;
  Graph h = g.induced(g.neighbors(v), &old_ids);
  VertexSet sub = pivot_rec_impl(h, s - 1, chain, depth + 1, trace);

  VertexSet lifted(n);
  sub.for_each([&](int u) { lifted.set(old_ids[static_cast<size_t>(u)]); });
  if (lifted.none()) {
    // isolated pivot: its neighborhood was empty, the pivot itself stands
    trace.push_back(strf("depth=%d singleton v=%d", depth, v));
    lifted.set(v);
  }
  return lifted;
}

}  // namespace

Certificate pivot_recursion(const Graph& g, int s, const ConstantChain& chain) {
  if (s < 2) throw std::invalid_argument("s must be >= 2");
  Certificate cert;
  cert.algorithm = Algorithm::PivotRecursion;
  cert.vertices = pivot_rec_impl(g, s, chain, 0, cert.trace);
  verify_certificate(g, cert);
  return cert;
}

// ---------------------------------------------------------------------------
// neighborhood cleaning (triangle case)

Certificate neighborhood_clean_set(const Graph& g, const CliqueStats& stats) {
  if (stats.s != 3)
    throw std::invalid_argument("neighborhood_clean_set needs order-3 stats");
  const int n = g.vertex_count();
  Certificate cert;
  cert.algorithm = Algorithm::NeighborhoodClean;
  cert.vertices = VertexSet(n);
  if (n == 0) return cert;

  int pivot = 0;
  long long best = 0;
  for (int v = 0; v < n; ++v) {
    long long score = static_cast<long long>(stats.d_of(v)) -
                      2 * static_cast<long long>(stats.t_of(v));
    if (v == 0 || score > best) {
      best = score;
      pivot = v;
    }
  }

  VertexSet survivors = g.neighbors(pivot);
  int deleted = 0;
  // Each edge inside N(pivot) is one triangle through the pivot; delete the
  // busier endpoint until no edge survives.
  for (;;) {
    int du = -1, dw = -1, eu = -1, ew = -1;
    for (int u = survivors.first(); u != -1 && eu == -1; u = survivors.next(u)) {
      VertexSet row = g.neighbors(u);
      row &= survivors;
      int w = row.next(u);
      if (w != -1) {
        eu = u;
        ew = w;
        du = g.neighbors(u).and_count(survivors);
        dw = g.neighbors(w).and_count(survivors);
      }
    }
    if (eu == -1) break;
    survivors.reset(du > dw ? eu : ew);
    ++deleted;
  }

  long long bound = std::max(0ll, best);
  if (survivors.count() < bound)
    throw std::logic_error("cleaning fell below d(v) - 2 t(v)");
  cert.vertices = survivors;
  cert.trace.push_back(strf("clean pivot=%d score=%lld tv=%llu deleted=%d size=%d",
                            pivot, best,
                            static_cast<unsigned long long>(stats.t_of(pivot)),
                            deleted, cert.vertices.count()));
  verify_certificate(g, cert);
  return cert;
}

// ---------------------------------------------------------------------------
// triangle-aware greedy

Certificate aks_greedy(const Graph& g, Rng& rng, int repeats) {
  if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
  const int n = g.vertex_count();
  Certificate cert;
  cert.algorithm = Algorithm::AksGreedy;
  cert.seed = rng.seed();
  cert.vertices = VertexSet(n);

  VertexSet alive = VertexSet::full(n);
  int deletions = 0;

  if (n >= 3) {
    CliqueStats stats = count_cliques(g, 3);
    std::vector<std::int64_t> tcount(static_cast<size_t>(n));
    std::int64_t total = static_cast<std::int64_t>(stats.t);
    for (int v = 0; v < n; ++v)
      tcount[static_cast<size_t>(v)] = static_cast<std::int64_t>(stats.t_of(v));

    VertexSet nb(n), common(n);
    while (total > 0) {
      int v = -1;
      alive.for_each([&](int u) {
        if (v == -1 || tcount[static_cast<size_t>(u)] > tcount[static_cast<size_t>(v)]) v = u;
      });
      // Triangles (v,u,w) with u,w alive vanish with v.
      nb = g.neighbors(v);
      nb &= alive;
      nb.for_each([&](int u) {
        common = g.neighbors(u);
        common &= nb;
        for (int w = common.next(u); w != -1; w = common.next(w)) {
          --tcount[static_cast<size_t>(u)];
          --tcount[static_cast<size_t>(w)];
        }
      });
      total -= tcount[static_cast<size_t>(v)];
      tcount[static_cast<size_t>(v)] = 0;
      alive.reset(v);
      ++deletions;
    }
  }

  // Repeated random-permutation greedy on the triangle-free remainder.
  std::vector<int> verts = alive.to_vector();
  VertexSet best_set(n);
  for (int r = 0; r < repeats; ++r) {
    std::vector<int> perm = verts;
    for (size_t i = perm.size(); i > 1; --i)
      std::swap(perm[i - 1], perm[static_cast<size_t>(rng.next_below(i))]);
    VertexSet cur(n);
    for (int v : perm)
      if (!g.neighbors(v).intersects(cur)) cur.set(v);
    if (cur.count() > best_set.count()) best_set = cur;
  }

  Certificate fallback = turan_greedy(g);
  bool use_fallback = fallback.size() > best_set.count();
  cert.vertices = use_fallback ? fallback.vertices : best_set;
  cert.trace.push_back(strf(
      "aks deleted=%d remaining=%d repeats=%d greedy=%d turan=%d", deletions,
      static_cast<int>(verts.size()), repeats, best_set.count(), fallback.size()));
  verify_certificate(g, cert);
  return cert;
}

// ---------------------------------------------------------------------------
// sparsification

double sparsify_probability(std::uint64_t n, std::uint64_t t, int s) {
  if (s < 2) throw std::invalid_argument("s must be >= 2");
  if (t == 0) throw std::invalid_argument("t must be positive");
  return static_cast<double>(n) /
         (std::pow(static_cast<double>(t), 2.0 / s) * std::pow(2.0, 1.0 + 2.0 / s));
}

double sparsify_probability_triangles(std::uint64_t n, std::uint64_t t) {
  if (t == 0) throw std::invalid_argument("t must be positive");
  const double nd = static_cast<double>(n);
  const double td = static_cast<double>(t);
  const double ratio = nd / std::cbrt(td);
  if (ratio <= 1.0) return 0.0;  // log nonpositive: no usable p
  return 0.25 * (nd / std::pow(td, 2.0 / 3.0)) *
         std::cbrt(std::log(ratio));
}

SparsifyAttempt sparsify_attempt(const Graph& g, int s, std::uint64_t t,
                                 double p, Rng& rng) {
  const int n = g.vertex_count();
  SparsifyAttempt a;
  a.p = p;
  a.sample = VertexSet(n);
  for (int v = 0; v < n; ++v)
    if (rng.next_bernoulli(p)) a.sample.set(v);
  a.cliques_in_sample = count_cliques_in_subset(g, a.sample, s).t;
  a.size_ok = static_cast<double>(a.sample.count()) >= n * p / 2.0;
  a.markov_ok = static_cast<double>(a.cliques_in_sample) <=
                2.0 * static_cast<double>(t) * std::pow(p, s);
  return a;
}

namespace {

// The low-clique-density algorithm Case 2 falls back on, applied to `g`
// itself (fallthrough) or to an accepted sample.
Certificate case1_on(const Graph& g, int s, const ConstantChain& chain,
                     Rng& rng) {
  if (s != 3) return pivot_recursion(g, s, chain);
  Certificate best = aks_greedy(g, rng, 16);
  if (g.vertex_count() >= 3) {
    Certificate clean = neighborhood_clean_set(g, count_cliques(g, 3));
    if (clean.size() > best.size()) best = clean;
  }
  return best;
}

}  // namespace

Certificate sparsify_and_recurse(const Graph& g, int s,
                                 const ConstantChain& chain, Rng& rng,
                                 int max_retries) {
  if (max_retries < 1) throw std::invalid_argument("max_retries must be >= 1");
  const int n = g.vertex_count();
  const std::uint64_t un = static_cast<std::uint64_t>(n);
  CliqueStats stats = count_cliques(g, s);
  const std::uint64_t t = stats.t;

  const double threshold = s == 3 ? triangle_regime_threshold(un)
                                  : std::pow(static_cast<double>(n), s / 2.0);
  if (static_cast<double>(t) <= threshold)
    throw std::invalid_argument("sparsification needs t above the regime threshold");

  Certificate cert;
  cert.algorithm = Algorithm::SparsifyRecurse;
  cert.seed = rng.seed();

  const double p = s == 3 ? sparsify_probability_triangles(un, t)
                          : sparsify_probability(un, t, s);
  if (!(p > 0.0 && p <= 1.0)) {
    cert.trace.push_back(strf("fallthrough p=%.6g", p));
    Certificate inner = case1_on(g, s, chain, rng);
    cert.vertices = inner.vertices;
    cert.trace.insert(cert.trace.end(), inner.trace.begin(), inner.trace.end());
    verify_certificate(g, cert);
    return cert;
  }

  SparsifyAttempt last;
  for (int retry = 0; retry < max_retries; ++retry) {
    last = sparsify_attempt(g, s, t, p, rng);
    if (!last.accepted()) continue;

    cert.trace.push_back(strf("sparsify p=%.6g retry=%d |S|=%d T=%llu", p,
                              retry, last.sample.count(),
                              static_cast<unsigned long long>(last.cliques_in_sample)));
    std::vector<int> old_ids;
    Graph h = g.induced(last.sample, &old_ids);
    Certificate inner = case1_on(h, s, chain, rng);
    cert.vertices = VertexSet(n);
    inner.vertices.for_each(
        [&](int u) { cert.vertices.set(old_ids[static_cast<size_t>(u)]); });
    cert.trace.insert(cert.trace.end(), inner.trace.begin(), inner.trace.end());
    verify_certificate(g, cert);
    return cert;
  }
  throw SparsifyExhaustedError(
      strf("sparsification rejected %d samples (p=%.6g); input is outside the "
           "constant-probability regime",
           max_retries, p),
      p, max_retries, last.sample.count(), last.cliques_in_sample);
}

// ---------------------------------------------------------------------------
// dispatcher

BestCertificate best_certificate(const Graph& g, int s,
                                 const ConstantChain& chain, Rng& rng,
                                 const DispatchConfig& cfg) {
  if (s < 2) throw std::invalid_argument("s must be >= 2");
  const int n = g.vertex_count();
  const std::uint64_t un = static_cast<std::uint64_t>(n);

  std::uint64_t t = 0;
  CliqueStats stats3;
  bool have3 = false;
  if (s <= n) {
    CliqueStats stats = count_cliques(g, s);
    t = stats.t;
    if (s == 3) {
      stats3 = std::move(stats);
      have3 = true;
    }
  }
  if (s == 3 && !have3 && n >= 3) {
    stats3 = count_cliques(g, 3);
    have3 = true;
  }

  const double t1_threshold = std::pow(static_cast<double>(n), s / 2.0);
  const double t2_threshold = triangle_regime_threshold(un);
  const bool large_t =
      s == 3 ? static_cast<double>(t) > t2_threshold
             : static_cast<double>(t) > t1_threshold;

  BestCertificate out;
  if (s == 3 && n > 1) {
    const double d = g.average_degree();
    const double nd = static_cast<double>(n);
    if (large_t)
      out.case1_route = "sparsify";
    else if (d <= std::pow(nd, 0.25 + cfg.epsilon))
      out.case1_route = "turan";
    else if (d > cfg.clean_factor * std::sqrt(nd * std::log(nd)))
      out.case1_route = "clean";
    else
      out.case1_route = "aks";
  }

  struct Planned {
    Algorithm alg;
    bool run;
  };
  const Planned plan[] = {
      {Algorithm::TuranGreedy, true},
      {Algorithm::NeighborhoodClean, s == 3 && have3},
      {Algorithm::PivotRecursion, static_cast<double>(t) <= t1_threshold},
      {Algorithm::AksGreedy, s == 3 && !large_t},
      {Algorithm::SparsifyRecurse, large_t},
  };

  bool have_best = false;
  for (const Planned& p : plan) {
    if (!p.run) continue;
    CandidateRun run;
    run.algorithm = p.alg;
    Rng alg_rng(rng.next_u64());
    auto t0 = std::chrono::steady_clock::now();
    try {
      Certificate cert;
      switch (p.alg) {
        case Algorithm::TuranGreedy: cert = turan_greedy(g); break;
        case Algorithm::NeighborhoodClean:
          cert = neighborhood_clean_set(g, stats3);
          break;
        case Algorithm::PivotRecursion: cert = pivot_recursion(g, s, chain); break;
        case Algorithm::AksGreedy: cert = aks_greedy(g, alg_rng, cfg.aks_repeats); break;
        case Algorithm::SparsifyRecurse:
          cert = sparsify_and_recurse(g, s, chain, alg_rng, cfg.max_retries);
          break;
        case Algorithm::ExactBnb: break;  // not a regime algorithm
      }
      run.size = cert.size();
      if (!have_best || cert.size() > out.best.size()) {
        out.best = std::move(cert);
        have_best = true;
      }
    } catch (const SparsifyExhaustedError& e) {
      run.failed = true;
      run.note = e.what();
    }
    run.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    out.candidates.push_back(std::move(run));
  }
  if (!have_best) {
    // n = 0 falls through to an empty turan certificate above; any other
    // total failure would be a logic error.
    out.best = turan_greedy(g);
  }
  return out;
}

}  // namespace cliquealpha
