#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "cliquealpha/graph.hpp"
#include "cliquealpha/rng.hpp"

namespace cliquealpha {

enum class ConstructionKind { CliquePlusTriangleFree, LexBlowup };

const char* construction_kind_name(ConstructionKind k);
ConstructionKind parse_construction_kind(const std::string& name);

/// Parameters that reproduce a construction instance exactly. Serializes to
/// a small "key value" text format (one pair per line).
struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::CliquePlusTriangleFree;
  std::uint64_t n = 0;       // target vertex count
  std::uint64_t t = 0;       // target triangle count
  std::uint64_t a = 0;       // clique size (clique_plus_trianglefree)
  std::uint64_t lambda = 0;  // blowup size (lex_blowup)
  std::uint64_t base_n = 0;  // base graph size N = floor(n/lambda)
  std::uint64_t seed = 0;
  bool exact_t = false;

  std::string serialize() const;
  static ConstructionSpec deserialize(std::istream& in);
  static ConstructionSpec deserialize_string(const std::string& text);
};

/// Greedily attaches isolated spare vertices to prefixes of
/// `clique_vertices`, adding exactly C(k,2) triangles per new vertex, until
/// exactly `residue` triangles have been added (largest k first; C(2,2)=1
/// guarantees termination). Spares are the isolated vertices of g. Throws
/// std::invalid_argument when not enough spares exist, reporting the number
/// needed.
Graph top_up_triangles(const Graph& g, const VertexSet& clique_vertices,
                       std::uint64_t residue);

/// K_a disjoint-union a triangle-free sample on the remaining vertices,
/// where a is the largest integer with C(a,3) <= t. With exact_t the
/// residue t - C(a,3) is added via top_up_triangles from reserved spare
/// vertices. The achieved triangle count is recounted and checked before
/// returning. Requires t <= C(n,3).
std::pair<Graph, ConstructionSpec> build_clique_plus_trianglefree(
    std::uint64_t n, std::uint64_t t, Rng& rng, bool exact_t = true);

/// Lexicographic product of `base` with a lambda-clique: each base vertex
/// becomes a clique block of size lambda, blocks fully joined along base
/// edges. Block b occupies ids [b*lambda, (b+1)*lambda).
Graph lex_product_with_clique(const Graph& base, int lambda);

/// Closed-form triangle count of lex_product_with_clique:
/// N*C(lambda,3) + 2*|E(base)|*lambda*C(lambda,2).
std::uint64_t lex_product_triangle_count(const Graph& base, int lambda);

/// Blowup construction for the dense regime: lambda = max(1,
/// round(solve_lambda(n,t))), base = triangle-free sample on floor(n/lambda)
/// vertices, product as above. The n - N*lambda leftover vertices become one
/// extra clique sized to approach t when exact_t is set, and stay isolated
/// otherwise. The achieved count is recounted against the closed form.
/// Requires t >= n^(3/2) sqrt(log n) and t < C(n,3).
std::pair<Graph, ConstructionSpec> build_lex_blowup(std::uint64_t n,
                                                    std::uint64_t t, Rng& rng,
                                                    bool exact_t = true);

}  // namespace cliquealpha
