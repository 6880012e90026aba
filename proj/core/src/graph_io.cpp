#include "cliquealpha/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "cliquealpha/errors.hpp"

namespace cliquealpha {

GraphFormat parse_format(const std::string& name) {
  if (name == "dimacs") return GraphFormat::Dimacs;
  if (name == "edgelist") return GraphFormat::EdgeList;
  throw std::invalid_argument("unknown graph format: " + name);
}

const char* format_name(GraphFormat f) {
  return f == GraphFormat::Dimacs ? "dimacs" : "edgelist";
}

namespace {

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

Graph read_dimacs(std::istream& in, const std::string& name) {
  std::string line;
  int lineno = 0;
  long long n = -1, m_declared = -1;
  long long e_lines = 0;
  std::vector<std::pair<int, int>> edges;

  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line) || line[0] == 'c') continue;
    std::istringstream ls(line);
    char kind;
    ls >> kind;
    if (kind == 'p') {
      if (n >= 0) throw ParseError("duplicate problem line", name, lineno);
      std::string fmt;
      if (!(ls >> fmt >> n >> m_declared) || fmt != "edge" || n < 0 || m_declared < 0)
        throw ParseError("malformed problem line (want 'p edge <n> <m>')", name, lineno);
    } else if (kind == 'e') {
      if (n < 0) throw ParseError("edge before problem line", name, lineno);
      long long u, v;
      if (!(ls >> u >> v))
        throw ParseError("malformed edge line (want 'e <u> <v>')", name, lineno);
      if (u < 1 || v < 1 || u > n || v > n)
        throw ParseError("vertex id out of range 1.." + std::to_string(n), name, lineno);
      if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), name, lineno);
      ++e_lines;
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      throw ParseError(std::string("unknown line type '") + kind + "'", name, lineno);
    }
  }
  if (n < 0) throw ParseError("missing problem line", name, 0);
  if (e_lines != m_declared)
    throw ParseError("header declares m=" + std::to_string(m_declared) + " but " +
                         std::to_string(e_lines) + " edge lines found",
                     name, 0);
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph read_edgelist(std::istream& in, const std::string& name) {
  std::string line;
  int lineno = 0;
  std::vector<std::pair<long long, long long>> raw;
  long long max_id = -1;

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (blank(line)) continue;
    std::istringstream ls(line);
    long long u, v;
    std::string trailing;
    if (!(ls >> u >> v) || (ls >> trailing))
      throw ParseError("malformed edge line (want 'u v')", name, lineno);
    if (u < 0 || v < 0) throw ParseError("negative vertex id", name, lineno);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), name, lineno);
    raw.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }

  // Dense 0-based inputs keep their ids; anything else is relabeled in
  // first-seen order.
  std::vector<char> seen(static_cast<size_t>(max_id + 1), 0);
  long long distinct = 0;
  for (auto [u, v] : raw) {
    for (long long x : {u, v})
      if (!seen[static_cast<size_t>(x)]) {
        seen[static_cast<size_t>(x)] = 1;
        ++distinct;
      }
  }
  const bool dense = distinct == max_id + 1;

  std::vector<std::pair<int, int>> edges;
  edges.reserve(raw.size());
  int n = 0;
  if (dense) {
    n = static_cast<int>(max_id + 1);
    for (auto [u, v] : raw) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  } else {
    std::unordered_map<long long, int> relabel;
    relabel.reserve(raw.size() * 2);
    auto id_of = [&](long long x) {
      auto [it, inserted] = relabel.try_emplace(x, n);
      if (inserted) ++n;
      return it->second;
    };
    for (auto [u, v] : raw) {
      int a = id_of(u);
      int b = id_of(v);
      edges.emplace_back(a, b);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph read_graph(std::istream& in, GraphFormat format, const std::string& name) {
  return format == GraphFormat::Dimacs ? read_dimacs(in, name)
                                       : read_edgelist(in, name);
}

Graph load_graph(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in, format, path);
}

void write_graph(const Graph& g, std::ostream& out, GraphFormat format) {
  auto edges = g.edges();  // already u<v, sorted
  if (format == GraphFormat::Dimacs) {
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  } else {
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  }
}

void save_graph(const Graph& g, const std::string& path, GraphFormat format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_graph(g, out, format);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace cliquealpha
