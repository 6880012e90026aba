#pragma once

#include "cliquealpha/graph.hpp"
#include "cliquealpha/rng.hpp"

namespace cliquealpha {

/// G(n,p): each unordered pair is an edge independently with probability p.
/// Throws std::invalid_argument unless 0 <= p <= 1.
Graph gnp_graph(int n, double p, Rng& rng);

/// Random greedy triangle-free process: repeatedly insert a uniformly random
/// non-edge that closes no triangle, until no such pair remains. The result
/// is maximal triangle-free; triangle-freeness is re-verified exhaustively
/// before returning. Requires n >= 1.
Graph triangle_free_process(int n, Rng& rng);

}  // namespace cliquealpha
