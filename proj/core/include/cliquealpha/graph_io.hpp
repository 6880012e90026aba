#pragma once

#include <iosfwd>
#include <string>

#include "cliquealpha/graph.hpp"

namespace cliquealpha {

enum class GraphFormat { Dimacs, EdgeList };

/// Parses "dimacs" / "edgelist"; throws std::invalid_argument otherwise.
GraphFormat parse_format(const std::string& name);
const char* format_name(GraphFormat f);

/// DIMACS col: "p edge <n> <m>" header, "e <u> <v>" lines, 1-indexed,
/// 'c' comment lines. The number of e-lines must match the header's m;
/// duplicates then collapse.
///
/// Edge list: "u v" per line, 0-indexed, '#' comments and blank lines
/// allowed. Ids that are not contiguous from 0 are relabeled in first-seen
/// order; already-dense inputs keep their ids, which makes save/load a
/// fixed point.
///
/// Both loaders throw ParseError with the offending line number, and reject
/// self-loops.
Graph load_graph(const std::string& path, GraphFormat format);
Graph read_graph(std::istream& in, GraphFormat format, const std::string& name);

/// Canonical output: edges sorted with u < v. DIMACS keeps isolated
/// vertices via the header; the edge list format cannot represent them.
void save_graph(const Graph& g, const std::string& path, GraphFormat format);
void write_graph(const Graph& g, std::ostream& out, GraphFormat format);

}  // namespace cliquealpha
