#include "commands.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "cliquealpha/bounds.hpp"
#include "cliquealpha/clique_count.hpp"
#include "cliquealpha/constructions.hpp"
#include "cliquealpha/generators.hpp"
#include "cliquealpha/graph_io.hpp"
#include "cliquealpha/indep_set.hpp"
#include "cliquealpha/version.hpp"

namespace cliquealpha::cli {

namespace {

std::string strf(const char* fmt, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, fmt);
  vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  return buf;
}

std::string real(double x) { return strf("%.6g", x); }

struct RowData {
  std::string kind;
  std::uint64_t n = 0, m = 0;
  int s = 0;
  std::uint64_t t = 0;
  double d_avg = 0.0;
  std::uint64_t seed = 0;
  double bound_t1 = 0.0;
  std::optional<double> bound_t2;
  std::optional<double> bound_aks;
  std::string alg_best;
  int alg_best_size = 0;
  std::optional<int> exact_alpha;
  double runtime_ms = 0.0;  // stays 0 unless --timing
};

std::string csv_row(const RowData& r) {
  std::ostringstream out;
  out << r.kind << ',' << r.n << ',' << r.m << ',' << r.s << ',' << r.t << ','
      << real(r.d_avg) << ',' << r.seed << ',' << real(r.bound_t1) << ','
      << (r.bound_t2 ? real(*r.bound_t2) : "") << ','
      << (r.bound_aks ? real(*r.bound_aks) : "") << ',' << r.alg_best << ','
      << r.alg_best_size << ','
      << (r.exact_alpha ? std::to_string(*r.exact_alpha) : "") << ','
      << real(r.runtime_ms);
  return out.str();
}

// One full measurement of a graph: clique stats, bounds, heuristic
// certificates, exact alpha when the oracle cap allows.
struct Measurement {
  CliqueStats stats;
  BoundReport bounds;
  BestCertificate cert;
  std::optional<int> exact;
};

Measurement measure(const Graph& g, int s, const ConstantChain& chain,
                    std::uint64_t seed, int oracle_cap, int retries,
                    double t2_const, double aks_const) {
  if (s > g.vertex_count())
    throw std::invalid_argument("clique order " + std::to_string(s) +
                                " exceeds vertex count " +
                                std::to_string(g.vertex_count()));
  Measurement out;
  out.stats = count_cliques(g, s);
  out.bounds = make_bound_report(static_cast<std::uint64_t>(g.vertex_count()), s,
                                 out.stats.t, g.average_degree(), chain,
                                 t2_const, aks_const);
  Rng rng(seed);
  DispatchConfig cfg;
  cfg.max_retries = retries;
  out.cert = best_certificate(g, s, chain, rng, cfg);
  if (g.vertex_count() <= std::min(oracle_cap, 64))
    out.exact = exact_alpha(g, oracle_cap).alpha;
  return out;
}

void print_report(std::ostream& os, const std::string& name, const Graph& g,
                  int s, const Measurement& m, const ConstantChain& chain,
                  std::uint64_t seed) {
  os << "input: " << name << '\n'
     << "n: " << g.vertex_count() << "  m: " << g.edge_count()
     << "  d_avg: " << real(g.average_degree()) << '\n'
     << "s: " << s << "  t: " << m.stats.t << "  regime: "
     << (m.bounds.regime == Regime::SmallT ? "small_t" : "large_t") << '\n';
  os << "bound_t1: " << real(m.bounds.clique_bound) << "  (c_" << s << "="
     << real(chain.cs(s)) << ")\n";
  if (m.bounds.triangle_bound)
    os << "bound_t2: " << real(m.bounds.triangle_bound->value)
       << (m.bounds.triangle_bound->degenerate ? "  [degenerate log]" : "") << '\n';
  if (m.bounds.aks)
    os << "bound_aks: " << real(m.bounds.aks->value)
       << (m.bounds.aks->triangle_free_limit ? "  [triangle-free limit]" : "")
       << '\n';
  if (!m.cert.case1_route.empty())
    os << "case1_route: " << m.cert.case1_route << '\n';
  os << "candidates:\n";
  for (const auto& c : m.cert.candidates) {
    os << "  " << algorithm_name(c.algorithm);
    if (c.failed)
      os << "  FAILED (" << c.note << ")";
    else
      os << "  size=" << c.size;
    os << "  " << real(c.runtime_ms) << "ms\n";
  }
  os << "best: " << algorithm_name(m.cert.best.algorithm)
     << "  size=" << m.cert.best.size() << '\n';
  if (m.exact)
    os << "exact_alpha: " << *m.exact << '\n';
  else
    os << "exact_alpha: skipped (n above oracle cap)\n";
  os << "seed: " << seed << '\n' << "version: " << kVersion << '\n';
}

ConstantChain chain_for(int s) { return solve_constant_chain(std::max(3, s), 1.0 / 3.0); }

std::vector<std::uint64_t> log_spaced(std::uint64_t lo, std::uint64_t hi, int points) {
  if (lo < 1 || hi < lo || points < 2)
    throw std::invalid_argument("log grid needs 1 <= min <= max and points >= 2");
  std::vector<std::uint64_t> out;
  const double llo = std::log(static_cast<double>(lo));
  const double lhi = std::log(static_cast<double>(hi));
  for (int i = 0; i < points; ++i) {
    double x = std::exp(llo + (lhi - llo) * i / (points - 1));
    std::uint64_t v = static_cast<std::uint64_t>(std::llround(x));
    if (out.empty() || v > out.back()) out.push_back(v);
  }
  return out;
}

}  // namespace

int cmd_analyze(const AnalyzeOpts& o) {
  Graph g = load_graph(o.path, parse_format(o.format));
  ConstantChain chain = chain_for(o.s);
  auto t0 = std::chrono::steady_clock::now();
  Measurement m = measure(g, o.s, chain, o.seed, o.oracle_cap, o.retries,
                          o.t2_const, o.aks_const);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

  // Text goes to stderr in CSV mode so stdout stays a clean CSV stream.
  print_report(o.csv ? std::cerr : std::cout, o.path, g, o.s, m, chain, o.seed);
  if (o.csv) {
    RowData row;
    row.kind = "file";
    row.n = static_cast<std::uint64_t>(g.vertex_count());
    row.m = g.edge_count();
    row.s = o.s;
    row.t = m.stats.t;
    row.d_avg = g.average_degree();
    row.seed = o.seed;
    row.bound_t1 = m.bounds.clique_bound;
    if (m.bounds.triangle_bound) row.bound_t2 = m.bounds.triangle_bound->value;
    if (m.bounds.aks) row.bound_aks = m.bounds.aks->value;
    row.alg_best = algorithm_name(m.cert.best.algorithm);
    row.alg_best_size = m.cert.best.size();
    row.exact_alpha = m.exact;
    if (o.timing) row.runtime_ms = ms;
    std::cout << kCsvHeader << '\n' << csv_row(row) << '\n';
  }
  return 0;
}

int cmd_sweep(const SweepOpts& o) {
  if (o.n < 2) throw std::invalid_argument("sweep needs --n >= 2");
  std::vector<std::uint64_t> grid = o.t_values;
  if (!o.t_log.empty()) {
    std::uint64_t lo, hi;
    int points;
    if (std::sscanf(o.t_log.c_str(), "%llu,%llu,%d",
                    reinterpret_cast<unsigned long long*>(&lo),
                    reinterpret_cast<unsigned long long*>(&hi), &points) != 3)
      throw std::invalid_argument("--t-log wants min,max,points");
    grid = log_spaced(lo, hi, points);
  }
  if (grid.empty()) throw std::invalid_argument("empty t grid (use --t or --t-log)");

  ConstantChain chain = chain_for(o.s);
  const std::uint64_t max_t = binomial_capped(o.n, static_cast<std::uint64_t>(o.s));

  struct Cell {
    std::uint64_t t;
    int seed_index;
  };
  std::vector<Cell> cells;
  for (std::uint64_t t : grid)
    for (int j = 0; j < o.seeds; ++j) cells.push_back({t, j});

  std::vector<std::string> rows(cells.size());
  std::atomic<size_t> next{0};

  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const Cell& cell = cells[i];
      const std::uint64_t cell_seed = o.seed + static_cast<std::uint64_t>(cell.seed_index);
      auto t0 = std::chrono::steady_clock::now();
      try {
        if (cell.t > max_t)
          throw std::invalid_argument("t exceeds C(n,s)");
        Rng rng(cell_seed);
        Graph g;
        std::string kind;
        if (o.s == 3) {
          if (static_cast<double>(cell.t) <= triangle_regime_threshold(o.n)) {
            auto [graph, spec] = build_clique_plus_trianglefree(o.n, cell.t, rng, true);
            g = std::move(graph);
            kind = construction_kind_name(spec.kind);
          } else {
            auto [graph, spec] = build_lex_blowup(o.n, cell.t, rng, true);
            g = std::move(graph);
            kind = construction_kind_name(spec.kind);
          }
        } else {
          // No sharpness construction exists beyond triangles; calibrate a
          // G(n,p) so the expected K_s count is the target.
          double p = std::pow(static_cast<double>(cell.t) / static_cast<double>(max_t),
                              1.0 / binomial_capped(static_cast<std::uint64_t>(o.s), 2));
          g = gnp_graph(static_cast<int>(o.n), std::min(1.0, p), rng);
          kind = "gnp";
        }
        Measurement m = measure(g, o.s, chain, cell_seed, o.oracle_cap,
                                o.retries, o.t2_const, o.aks_const);
        RowData row;
        row.kind = kind;
        row.n = static_cast<std::uint64_t>(g.vertex_count());
        row.m = g.edge_count();
        row.s = o.s;
        row.t = m.stats.t;
        row.d_avg = g.average_degree();
        row.seed = cell_seed;
        row.bound_t1 = m.bounds.clique_bound;
        if (m.bounds.triangle_bound) row.bound_t2 = m.bounds.triangle_bound->value;
        if (m.bounds.aks) row.bound_aks = m.bounds.aks->value;
        row.alg_best = algorithm_name(m.cert.best.algorithm);
        row.alg_best_size = m.cert.best.size();
        row.exact_alpha = m.exact;
        if (o.timing)
          row.runtime_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
        rows[i] = csv_row(row);
      } catch (const std::exception& e) {
        rows[i] = strf("# skipped t=%llu seed=%llu: %s",
                       static_cast<unsigned long long>(cell.t),
                       static_cast<unsigned long long>(cell_seed), e.what());
      }
    }
  };

  const int jobs = std::max(1, o.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Rows come out in grid order no matter how the workers finished.
  std::cout << kCsvHeader << '\n';
  for (const std::string& r : rows) std::cout << r << '\n';
  return 0;
}

int cmd_construct(const ConstructOpts& o) {
  if (o.out.empty()) throw std::invalid_argument("--out is required");
  ConstructionKind kind = parse_construction_kind(o.kind);
  Rng rng(o.seed);
  auto [g, spec] = kind == ConstructionKind::CliquePlusTriangleFree
                       ? build_clique_plus_trianglefree(o.n, o.t, rng, o.exact_t)
                       : build_lex_blowup(o.n, o.t, rng, o.exact_t);

  if (kind == ConstructionKind::CliquePlusTriangleFree &&
      static_cast<double>(o.t) > triangle_regime_threshold(o.n))
    std::cerr << "warning: t above n^(3/2) sqrt(log n); the clique-plus "
                 "construction is outside its sharpness regime\n";

  save_graph(g, o.out, parse_format(o.format));
  std::ofstream side(o.out + ".spec");
  if (!side) throw std::runtime_error("cannot write " + o.out + ".spec");
  side << spec.serialize();
  side.close();

  const std::uint64_t achieved = g.vertex_count() >= 3 ? count_cliques(g, 3).t : 0;
  std::ostream& os = o.csv ? std::cerr : std::cout;
  os << "wrote: " << o.out << " (+.spec)\n"
     << "kind: " << construction_kind_name(kind) << "  n: " << g.vertex_count()
     << "  m: " << g.edge_count() << '\n'
     << "target_t: " << o.t << "  achieved_t: " << achieved;
  if (o.t > 0)
    os << "  ratio: " << real(static_cast<double>(achieved) / static_cast<double>(o.t));
  os << '\n';

  ConstantChain chain = chain_for(3);
  Rng alg_rng(o.seed);
  std::optional<int> exact;
  int measured;
  std::string best_alg;
  if (g.vertex_count() <= std::min(o.oracle_cap, 64)) {
    exact = exact_alpha(g, o.oracle_cap).alpha;
    measured = *exact;
    best_alg = "exact_bnb";
    os << "alpha: " << *exact << " (exact)\n";
  } else {
    BestCertificate bc = best_certificate(g, 3, chain, alg_rng);
    measured = bc.best.size();
    best_alg = algorithm_name(bc.best.algorithm);
    os << "alpha: >= " << measured << " (heuristic, " << best_alg << ")\n";
  }

  if (o.csv) {
    RowData row;
    row.kind = construction_kind_name(kind);
    row.n = static_cast<std::uint64_t>(g.vertex_count());
    row.m = g.edge_count();
    row.s = 3;
    row.t = achieved;
    row.d_avg = g.average_degree();
    row.seed = o.seed;
    row.bound_t1 = clique_regime_bound(row.n, 3, achieved, chain);
    row.alg_best = best_alg;
    row.alg_best_size = measured;
    row.exact_alpha = exact;
    std::cout << kCsvHeader << '\n' << csv_row(row) << '\n';
  }
  return 0;
}

int cmd_constants(const ConstantsOpts& o) {
  if (o.s_max == 2) {
    if (o.csv) {
      std::cout << "s,c_prime_sup,c_prime,c,delta,resid_eq1,resid_eq2,resid_eq3\n";
      std::cout << "2,,," << real(o.c2) << ",,,,\n";
    } else {
      std::cout << "s=2  c=" << real(o.c2) << " (base constant)\n";
    }
    return 0;
  }
  ConstantChain chain = solve_constant_chain(o.s_max, o.c2);
  if (o.csv) {
    std::cout << "s,c_prime_sup,c_prime,c,delta,resid_eq1,resid_eq2,resid_eq3\n";
    std::cout << "2,,," << real(chain.c2) << ",,,,\n";
    for (const auto& e : chain.entries)
      std::cout << e.s << ',' << real(e.cs_prime_sup) << ',' << real(e.cs_prime)
                << ',' << real(e.cs) << ','
                << (e.delta ? real(*e.delta) : std::string()) << ','
                << real(e.resid_eq1) << ',' << real(e.resid_eq2) << ','
                << real(e.resid_eq3) << '\n';
  } else {
    std::cout << "s=2  c=" << real(chain.c2) << " (base constant)\n";
    for (const auto& e : chain.entries) {
      std::cout << "s=" << e.s << "  c'_sup=" << real(e.cs_prime_sup)
                << "  c'=" << real(e.cs_prime) << "  c=" << real(e.cs);
      if (e.delta) std::cout << "  delta=" << real(*e.delta);
      std::cout << "  residuals: eq1=" << real(e.resid_eq1)
                << " eq2=" << real(e.resid_eq2) << " eq3=" << real(e.resid_eq3)
                << '\n';
    }
  }
  return 0;
}

}  // namespace cliquealpha::cli
