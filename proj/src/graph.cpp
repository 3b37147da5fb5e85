#include "rainbow/graph.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>

namespace rainbow {

ParseError::ParseError(const std::string& path, int line, const std::string& what)
    : std::runtime_error(path + ":" + std::to_string(line) + ": " + what), line_(line) {}

// ---------------------------------------------------------------------------
// Graph

std::uint64_t Graph::key(Vertex a, Vertex b) {
  const auto e = Edge::make(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
         static_cast<std::uint32_t>(e.v);
}

Graph::Graph(Vertex n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw ParameterError("graph: negative vertex count");
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw ParameterError("graph: edge endpoint out of range");
    }
    if (e.u == e.v) throw ParameterError("graph: self-loop at " + std::to_string(e.u));
    e = Edge::make(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw ParameterError("graph: duplicate edge");
  }
  edges_ = std::move(edges);

  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const auto& e : edges_) {
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  adjacency_.resize(static_cast<std::size_t>(n));
  incidence_.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    adjacency_[static_cast<std::size_t>(v)].reserve(static_cast<std::size_t>(degree[static_cast<std::size_t>(v)]));
    incidence_[static_cast<std::size_t>(v)].reserve(static_cast<std::size_t>(degree[static_cast<std::size_t>(v)]));
  }
  // Edges are sorted by (u, v): walking them in order fills each list in
  // ascending neighbor order for the low endpoint; the high endpoint's list
  // receives u values in ascending order too since u is the primary key.
  for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
    const auto& e = edges_[static_cast<std::size_t>(id)];
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    incidence_[static_cast<std::size_t>(e.v)].push_back(id);
  }
  for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
    const auto& e = edges_[static_cast<std::size_t>(id)];
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    incidence_[static_cast<std::size_t>(e.u)].push_back(id);
  }
  index_.reserve(edges_.size());
  for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
    const auto& e = edges_[static_cast<std::size_t>(id)];
    index_.emplace(key(e.u, e.v), id);
  }
#ifndef NDEBUG
  for (Vertex v = 0; v < n; ++v) {
    assert(std::is_sorted(adjacency_[static_cast<std::size_t>(v)].begin(),
                          adjacency_[static_cast<std::size_t>(v)].end()));
  }
#endif
}

std::optional<EdgeId> Graph::edge_id(Vertex a, Vertex b) const {
  if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
  const auto it = index_.find(key(a, b));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Graph Graph::subgraph(std::span<const EdgeId> keep) const {
  std::vector<Edge> kept;
  kept.reserve(keep.size());
  for (const EdgeId id : keep) kept.push_back(edge(id));
  return Graph(n_, std::move(kept));
}

// ---------------------------------------------------------------------------
// BipartiteGraph

BipartiteGraph::BipartiteGraph(Vertex left_size, Vertex right_size, std::vector<Pair> edges)
    : a_(left_size), b_(right_size) {
  if (a_ < 0 || b_ < 0) throw ParameterError("bipartite graph: negative part size");
  for (const auto& e : edges) {
    if (e.left < 0 || e.left >= a_ || e.right < 0 || e.right >= b_) {
      throw ParameterError("bipartite graph: edge endpoint out of range");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw ParameterError("bipartite graph: duplicate edge");
  }
  edges_ = std::move(edges);
  left_adj_.resize(static_cast<std::size_t>(a_));
  right_adj_.resize(static_cast<std::size_t>(b_));
  for (const auto& e : edges_) {
    left_adj_[static_cast<std::size_t>(e.left)].push_back(e.right);
    right_adj_[static_cast<std::size_t>(e.right)].push_back(e.left);
  }
}

bool BipartiteGraph::has_edge(Vertex x, Vertex y) const {
  if (x < 0 || x >= a_ || y < 0 || y >= b_) return false;
  const auto& adj = left_adj_[static_cast<std::size_t>(x)];
  return std::binary_search(adj.begin(), adj.end(), y);
}

Graph BipartiteGraph::as_graph() const {
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.push_back(Edge{e.left, a_ + e.right});
  return Graph(a_ + b_, std::move(edges));
}

// ---------------------------------------------------------------------------
// Orientation

Orientation::Orientation(const Graph& base, const std::vector<bool>& forward) {
  if (forward.size() != base.edge_count()) {
    throw ParameterError("orientation: one direction per edge required");
  }
  arcs_.resize(base.edge_count());
  out_.resize(static_cast<std::size_t>(base.n()));
  out_ids_.resize(static_cast<std::size_t>(base.n()));
  for (Vertex x = 0; x < base.n(); ++x) {
    const auto nbrs = base.neighbors(x);
    const auto ids = base.incident(x);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const auto& e = base.edge(ids[i]);
      const bool out = forward[static_cast<std::size_t>(ids[i])] ? (e.u == x) : (e.v == x);
      if (out) {
        out_[static_cast<std::size_t>(x)].push_back(nbrs[i]);
        out_ids_[static_cast<std::size_t>(x)].push_back(ids[i]);
        arcs_[static_cast<std::size_t>(ids[i])] = Arc{x, nbrs[i]};
      }
    }
  }
}

// ---------------------------------------------------------------------------
// ColoredGraph

ColoredGraph::ColoredGraph(Graph base, std::vector<Color> colors, Color palette)
    : base_(std::move(base)), colors_(std::move(colors)), palette_(palette) {
  if (palette_ < 1) throw ParameterError("colored graph: palette must be positive");
  if (colors_.size() != base_.edge_count()) {
    throw ParameterError("colored graph: one color per edge required");
  }
  for (const Color c : colors_) {
    if (c < 1 || c > palette_) throw ParameterError("colored graph: color outside [1, palette]");
  }
}

Color ColoredGraph::color_of(Vertex a, Vertex b) const {
  const auto id = base_.edge_id(a, b);
  if (!id) throw ParameterError("colored graph: no such edge");
  return colors_[static_cast<std::size_t>(*id)];
}

// ---------------------------------------------------------------------------
// Queries and constructors

int min_degree(const Graph& g) {
  if (g.n() == 0) return 0;
  int best = g.degree(0);
  for (Vertex v = 1; v < g.n(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int min_left_degree(const BipartiteGraph& b) {
  if (b.left_size() == 0) return 0;
  int best = b.left_degree(0);
  for (Vertex x = 1; x < b.left_size(); ++x) best = std::min(best, b.left_degree(x));
  return best;
}

std::size_t edges_between(const BipartiteGraph& b, std::span<const Vertex> left_subset,
                          std::span<const Vertex> right_subset) {
  std::vector<char> in_y(static_cast<std::size_t>(b.right_size()), 0);
  for (const Vertex y : right_subset) {
    if (y < 0 || y >= b.right_size()) throw ParameterError("edges_between: right index out of range");
    in_y[static_cast<std::size_t>(y)] = 1;
  }
  std::vector<char> seen_x(static_cast<std::size_t>(b.left_size()), 0);
  std::size_t count = 0;
  for (const Vertex x : left_subset) {
    if (x < 0 || x >= b.left_size()) throw ParameterError("edges_between: left index out of range");
    if (seen_x[static_cast<std::size_t>(x)]) continue;
    seen_x[static_cast<std::size_t>(x)] = 1;
    for (const Vertex y : b.left_neighbors(x)) count += in_y[static_cast<std::size_t>(y)] ? 1 : 0;
  }
  return count;
}

Graph complete_graph(Vertex n) {
  if (n < 1) throw ParameterError("complete_graph: n must be at least 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

BipartiteGraph complete_bipartite(Vertex a, Vertex b) {
  if (a < 1 || b < 1) throw ParameterError("complete_bipartite: parts must be non-empty");
  std::vector<BipartiteGraph::Pair> edges;
  edges.reserve(static_cast<std::size_t>(a) * static_cast<std::size_t>(b));
  for (Vertex x = 0; x < a; ++x) {
    for (Vertex y = 0; y < b; ++y) edges.push_back({x, y});
  }
  return BipartiteGraph(a, b, std::move(edges));
}

Graph cycle_graph(Vertex n) {
  if (n < 3) throw ParameterError("cycle_graph: n must be at least 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(Edge::make(v, (v + 1) % n));
  return Graph(n, std::move(edges));
}

Graph path_graph(Vertex n) {
  if (n < 1) throw ParameterError("path_graph: n must be at least 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph circulant_graph(Vertex n, int degree) {
  if (degree < 0 || degree >= n) throw ParameterError("circulant_graph: need 0 <= degree < n");
  if (degree % 2 == 1 && n % 2 == 1) {
    throw ParameterError("circulant_graph: odd degree requires even n");
  }
  std::vector<Edge> edges;
  for (int offset = 1; offset <= degree / 2; ++offset) {
    for (Vertex v = 0; v < n; ++v) edges.push_back(Edge::make(v, (v + offset) % n));
  }
  if (degree % 2 == 1) {
    for (Vertex v = 0; v < n / 2; ++v) edges.push_back({v, v + n / 2});
  }
  return Graph(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Text I/O

namespace {

struct RawGraph {
  Vertex n = 0;
  std::vector<Edge> edges;
  std::vector<Color> colors;
  std::optional<Color> palette;
};

RawGraph read_raw(const std::filesystem::path& path, bool colored) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  RawGraph raw;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long expected = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream comment(line.substr(first + 1));
      std::string word;
      long long value = 0;
      if (comment >> word && word == "palette" && comment >> value) {
        raw.palette = static_cast<Color>(value);
      }
      continue;
    }
    std::istringstream fields(line);
    if (!have_header) {
      long long n = 0;
      if (!(fields >> n >> expected) || n < 0 || expected < 0) {
        throw ParseError(path.string(), line_no, "expected header 'n m'");
      }
      raw.n = static_cast<Vertex>(n);
      have_header = true;
      continue;
    }
    long long u = 0, v = 0, c = 0;
    if (!(fields >> u >> v)) throw ParseError(path.string(), line_no, "expected edge 'u v'");
    if (colored && !(fields >> c)) throw ParseError(path.string(), line_no, "expected edge color");
    std::string extra;
    if (fields >> extra) throw ParseError(path.string(), line_no, "unexpected trailing field");
    if (u < 0 || v < 0 || u >= raw.n || v >= raw.n) {
      throw ParseError(path.string(), line_no, "vertex index out of range");
    }
    if (u == v) throw ParseError(path.string(), line_no, "self-loop");
    raw.edges.push_back(Edge::make(static_cast<Vertex>(u), static_cast<Vertex>(v)));
    if (colored) {
      if (c < 1) throw ParseError(path.string(), line_no, "color must be >= 1");
      raw.colors.push_back(static_cast<Color>(c));
    }
  }
  if (!have_header) throw ParseError(path.string(), line_no, "missing header");
  if (static_cast<long long>(raw.edges.size()) != expected) {
    throw ParseError(path.string(), line_no,
                     "header declares " + std::to_string(expected) + " edges, found " +
                         std::to_string(raw.edges.size()));
  }
  return raw;
}

}  // namespace

void save_graph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void save_colored_graph(const ColoredGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# palette " << g.palette() << '\n';
  out << g.graph().n() << ' ' << g.graph().edge_count() << '\n';
  for (EdgeId id = 0; id < static_cast<EdgeId>(g.graph().edge_count()); ++id) {
    const auto& e = g.graph().edge(id);
    out << e.u << ' ' << e.v << ' ' << g.color(id) << '\n';
  }
}

Graph load_graph(const std::filesystem::path& path) {
  auto raw = read_raw(path, false);
  try {
    return Graph(raw.n, std::move(raw.edges));
  } catch (const ParameterError& err) {
    throw ParseError(path.string(), 0, err.what());
  }
}

ColoredGraph load_colored_graph(const std::filesystem::path& path) {
  auto raw = read_raw(path, true);
  // Colors are given per input line; re-key them by the sorted edge order.
  std::vector<std::pair<Edge, Color>> keyed;
  keyed.reserve(raw.edges.size());
  Color max_color = 1;
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    keyed.emplace_back(raw.edges[i], raw.colors[i]);
    max_color = std::max(max_color, raw.colors[i]);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<Color> colors;
  colors.reserve(keyed.size());
  for (const auto& kc : keyed) colors.push_back(kc.second);
  try {
    return ColoredGraph(Graph(raw.n, std::move(raw.edges)), std::move(colors),
                        raw.palette.value_or(max_color));
  } catch (const ParameterError& err) {
    throw ParseError(path.string(), 0, err.what());
  }
}

}  // namespace rainbow
