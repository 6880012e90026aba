#include "cliquealpha/constructions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cliquealpha/bounds.hpp"
#include "cliquealpha/clique_count.hpp"
#include "cliquealpha/generators.hpp"

namespace cliquealpha {

const char* construction_kind_name(ConstructionKind k) {
  return k == ConstructionKind::CliquePlusTriangleFree ? "clique_plus_trianglefree"
                                                       : "lex_blowup";
}

ConstructionKind parse_construction_kind(const std::string& name) {
  if (name == "clique_plus_trianglefree") return ConstructionKind::CliquePlusTriangleFree;
  if (name == "lex_blowup") return ConstructionKind::LexBlowup;
  throw std::invalid_argument("unknown construction kind: " + name);
}

std::string ConstructionSpec::serialize() const {
  std::ostringstream out;
  out << "kind " << construction_kind_name(kind) << '\n'
      << "n " << n << '\n'
      << "t " << t << '\n'
      << "a " << a << '\n'
      << "lambda " << lambda << '\n'
      << "N " << base_n << '\n'
      << "seed " << seed << '\n'
      << "exact_t " << (exact_t ? 1 : 0) << '\n';
  return out.str();
}

ConstructionSpec ConstructionSpec::deserialize(std::istream& in) {
  ConstructionSpec spec;
  std::string key;
  while (in >> key) {
    if (key == "kind") {
      std::string v;
      in >> v;
      spec.kind = parse_construction_kind(v);
    } else if (key == "n") in >> spec.n;
    else if (key == "t") in >> spec.t;
    else if (key == "a") in >> spec.a;
    else if (key == "lambda") in >> spec.lambda;
    else if (key == "N") in >> spec.base_n;
    else if (key == "seed") in >> spec.seed;
    else if (key == "exact_t") {
      int b;
      in >> b;
      spec.exact_t = b != 0;
    } else {
      throw std::invalid_argument("unknown construction spec key: " + key);
    }
    if (in.fail()) throw std::invalid_argument("malformed construction spec value for " + key);
  }
  return spec;
}

ConstructionSpec ConstructionSpec::deserialize_string(const std::string& text) {
  std::istringstream in(text);
  return deserialize(in);
}

namespace {

// Largest a with C(a,3) <= t (a <= hi).
std::uint64_t largest_clique_within(std::uint64_t t, std::uint64_t hi) {
  std::uint64_t a = 0;
  while (a < hi && binomial_capped(a + 1, 3) <= t) ++a;
  return a;
}

// residue = sum of C(k_i,2), largest k first, each k_i <= max_k.
std::vector<std::uint64_t> pair_decomposition(std::uint64_t residue,
                                              std::uint64_t max_k) {
  std::vector<std::uint64_t> ks;
  while (residue > 0) {
    if (max_k < 2)
      throw std::invalid_argument("cannot represent triangle residue: clique too small");
    std::uint64_t k = 2;
    while (k < max_k && binomial_capped(k + 1, 2) <= residue) ++k;
    ks.push_back(k);
    residue -= binomial_capped(k, 2);
  }
  return ks;
}

}  // namespace

Graph top_up_triangles(const Graph& g, const VertexSet& clique_vertices,
                       std::uint64_t residue) {
  if (residue == 0) return g;
  const int n = g.vertex_count();
  std::vector<int> clique = clique_vertices.to_vector();
  std::vector<std::uint64_t> ks =
      pair_decomposition(residue, static_cast<std::uint64_t>(clique.size()));

  std::vector<int> spares;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) spares.push_back(v);
  if (spares.size() < ks.size())
    throw std::invalid_argument(
        "top_up_triangles needs " + std::to_string(ks.size()) +
        " spare isolated vertices, found " + std::to_string(spares.size()));

  GraphBuilder b(n);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (size_t i = 0; i < ks.size(); ++i)
    for (std::uint64_t j = 0; j < ks[i]; ++j)
      b.add_edge(spares[i], clique[static_cast<size_t>(j)]);
  return b.build();
}

std::pair<Graph, ConstructionSpec> build_clique_plus_trianglefree(
    std::uint64_t n, std::uint64_t t, Rng& rng, bool exact_t) {
  if (t > binomial_capped(n, 3))
    throw std::invalid_argument("t exceeds C(n,3)");

  ConstructionSpec spec;
  spec.kind = ConstructionKind::CliquePlusTriangleFree;
  spec.n = n;
  spec.t = t;
  spec.seed = rng.seed();
  spec.exact_t = exact_t;

  const std::uint64_t a = largest_clique_within(t, n);
  spec.a = a;
  const std::uint64_t residue = exact_t ? t - binomial_capped(a, 3) : 0;
  std::vector<std::uint64_t> ks =
      residue > 0 ? pair_decomposition(residue, a) : std::vector<std::uint64_t>{};
  const std::uint64_t reserved = ks.size();

  if (a + reserved > n)
    throw std::invalid_argument("not enough vertices for the exact triangle residue");
  const std::uint64_t base_n = n - a - reserved;
  spec.base_n = base_n;

  GraphBuilder b(static_cast<int>(n));
  for (std::uint64_t u = 0; u < a; ++u)
    for (std::uint64_t v = u + 1; v < a; ++v)
      b.add_edge(static_cast<int>(u), static_cast<int>(v));
  if (base_n >= 1) {
    Graph base = triangle_free_process(static_cast<int>(base_n), rng);
    for (auto [u, v] : base.edges())
      b.add_edge(static_cast<int>(a) + u, static_cast<int>(a) + v);
  }
  Graph g = b.build();

  if (residue > 0) {
    VertexSet clique(static_cast<int>(n));
    for (std::uint64_t v = 0; v < a; ++v) clique.set(static_cast<int>(v));
    g = top_up_triangles(g, clique, residue);
  }

  const std::uint64_t expect = exact_t ? t : binomial_capped(a, 3);
  const std::uint64_t got = n >= 3 ? count_cliques(g, 3).t : 0;
  if (got != expect)
    throw std::logic_error("construction triangle recount mismatch: expected " +
                           std::to_string(expect) + ", counted " + std::to_string(got));
  return {std::move(g), spec};
}

Graph lex_product_with_clique(const Graph& base, int lambda) {
  if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  const int N = base.vertex_count();
  GraphBuilder b(N * lambda);
  for (int v = 0; v < N; ++v)
    for (int i = 0; i < lambda; ++i)
      for (int j = i + 1; j < lambda; ++j)
        b.add_edge(v * lambda + i, v * lambda + j);
  for (auto [v, w] : base.edges())
    for (int i = 0; i < lambda; ++i)
      for (int j = 0; j < lambda; ++j)
        b.add_edge(v * lambda + i, w * lambda + j);
  return b.build();
}

std::uint64_t lex_product_triangle_count(const Graph& base, int lambda) {
  const std::uint64_t N = static_cast<std::uint64_t>(base.vertex_count());
  const std::uint64_t lam = static_cast<std::uint64_t>(lambda);
  return N * binomial_capped(lam, 3) +
         2 * base.edge_count() * lam * binomial_capped(lam, 2);
}

std::pair<Graph, ConstructionSpec> build_lex_blowup(std::uint64_t n,
                                                    std::uint64_t t, Rng& rng,
                                                    bool exact_t) {
  if (t >= binomial_capped(n, 3))
    throw std::invalid_argument("t must be below C(n,3)");
  // solve_lambda enforces the lower regime threshold.
  const double lambda_real = solve_lambda(n, t);
  const std::uint64_t lambda =
      std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(lambda_real)));
  const std::uint64_t base_n = n / lambda;

  ConstructionSpec spec;
  spec.kind = ConstructionKind::LexBlowup;
  spec.n = n;
  spec.t = t;
  spec.lambda = lambda;
  spec.base_n = base_n;
  spec.seed = rng.seed();
  spec.exact_t = exact_t;

  Graph base = triangle_free_process(static_cast<int>(base_n), rng);
  Graph product = lex_product_with_clique(base, static_cast<int>(lambda));
  std::uint64_t claimed = lex_product_triangle_count(base, static_cast<int>(lambda));

  const std::uint64_t leftover = n - base_n * lambda;
  GraphBuilder b(static_cast<int>(n));
  for (auto [u, v] : product.edges()) b.add_edge(u, v);
  if (exact_t && leftover >= 2) {
    // One extra clique on the leftover vertices, sized to land the total as
    // close to t as possible without recursing into another construction.
    std::uint64_t best_k = 0;
    std::uint64_t best_err = claimed > t ? claimed - t : t - claimed;
    for (std::uint64_t k = 2; k <= leftover; ++k) {
      std::uint64_t tot = claimed + binomial_capped(k, 3);
      std::uint64_t err = tot > t ? tot - t : t - tot;
      if (err < best_err) {
        best_err = err;
        best_k = k;
      }
    }
    const std::uint64_t off = base_n * lambda;
    for (std::uint64_t u = 0; u < best_k; ++u)
      for (std::uint64_t v = u + 1; v < best_k; ++v)
        b.add_edge(static_cast<int>(off + u), static_cast<int>(off + v));
    claimed += binomial_capped(best_k, 3);
  }
  Graph g = b.build();

  const std::uint64_t got = n >= 3 ? count_cliques(g, 3).t : 0;
  if (got != claimed)
    throw std::logic_error("blowup triangle recount mismatch: closed form " +
                           std::to_string(claimed) + ", counted " + std::to_string(got));
  return {std::move(g), spec};
}

}  // namespace cliquealpha
