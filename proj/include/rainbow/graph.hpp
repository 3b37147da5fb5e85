#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace rainbow {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;
using Color = std::int32_t;  // 1-based, in [1, palette]

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// Unordered pair, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Edge ids are positions in the lexicographically sorted edge list, so two
/// graphs with the same edge set number their edges identically. Adjacency
/// lists are sorted ascending; the pair-keyed index is derived from them.
class Graph {
 public:
  Graph() = default;
  /// Throws ParameterError on self-loops, duplicate edges or out-of-range ends.
  Graph(Vertex n, std::vector<Edge> edges);

  Vertex n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id)]; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  /// Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident(Vertex v) const { return incidence_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }

  bool has_edge(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }
  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const;

  /// Subgraph on the same vertex set keeping the listed edge ids.
  Graph subgraph(std::span<const EdgeId> keep) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  static std::uint64_t key(Vertex a, Vertex b);

  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
};

/// Bipartite graph with left part [0, a) and right part [0, b).
class BipartiteGraph {
 public:
  struct Pair {
    Vertex left = 0;
    Vertex right = 0;
    auto operator<=>(const Pair&) const = default;
  };

  BipartiteGraph() = default;
  BipartiteGraph(Vertex left_size, Vertex right_size, std::vector<Pair> edges);

  Vertex left_size() const { return a_; }
  Vertex right_size() const { return b_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Pair>& edges() const { return edges_; }

  std::span<const Vertex> left_neighbors(Vertex x) const { return left_adj_[static_cast<std::size_t>(x)]; }
  std::span<const Vertex> right_neighbors(Vertex y) const { return right_adj_[static_cast<std::size_t>(y)]; }
  int left_degree(Vertex x) const { return static_cast<int>(left_adj_[static_cast<std::size_t>(x)].size()); }
  int right_degree(Vertex y) const { return static_cast<int>(right_adj_[static_cast<std::size_t>(y)].size()); }
  bool has_edge(Vertex x, Vertex y) const;

  /// Same graph as an ordinary Graph: left x -> x, right y -> a + y.
  Graph as_graph() const;

  bool operator==(const BipartiteGraph& other) const {
    return a_ == other.a_ && b_ == other.b_ && edges_ == other.edges_;
  }

 private:
  Vertex a_ = 0;
  Vertex b_ = 0;
  std::vector<Pair> edges_;
  std::vector<std::vector<Vertex>> left_adj_;
  std::vector<std::vector<Vertex>> right_adj_;
};

/// A direction for every edge of a base graph. Arcs are indexed by the
/// base graph's edge ids; both directions of one pair can never coexist.
class Orientation {
 public:
  struct Arc {
    Vertex tail = 0;
    Vertex head = 0;
  };

  Orientation() = default;
  /// forward[e] true means edge(e).u -> edge(e).v.
  Orientation(const Graph& base, const std::vector<bool>& forward);

  Vertex n() const { return static_cast<Vertex>(out_.size()); }
  const Arc& arc(EdgeId e) const { return arcs_[static_cast<std::size_t>(e)]; }
  std::size_t arc_count() const { return arcs_.size(); }
  std::span<const Vertex> out_neighbors(Vertex x) const { return out_[static_cast<std::size_t>(x)]; }
  /// Edge ids parallel to out_neighbors(x).
  std::span<const EdgeId> out_edges(Vertex x) const { return out_ids_[static_cast<std::size_t>(x)]; }
  int out_degree(Vertex x) const { return static_cast<int>(out_[static_cast<std::size_t>(x)].size()); }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<EdgeId>> out_ids_;
};

/// Graph with one color in [1, palette] per edge (indexed by edge id).
class ColoredGraph {
 public:
  ColoredGraph() = default;
  ColoredGraph(Graph base, std::vector<Color> colors, Color palette);

  const Graph& graph() const { return base_; }
  Color palette() const { return palette_; }
  Color color(EdgeId e) const { return colors_[static_cast<std::size_t>(e)]; }
  const std::vector<Color>& colors() const { return colors_; }
  /// Color of the edge {a, b}; throws ParameterError when absent.
  Color color_of(Vertex a, Vertex b) const;

  bool operator==(const ColoredGraph& other) const {
    return palette_ == other.palette_ && base_ == other.base_ && colors_ == other.colors_;
  }

 private:
  Graph base_;
  std::vector<Color> colors_;
  Color palette_ = 1;
};

int min_degree(const Graph& g);
int min_left_degree(const BipartiteGraph& b);

/// Number of edges with left end in X and right end in Y.
/// Throws ParameterError on an out-of-range index.
std::size_t edges_between(const BipartiteGraph& b, std::span<const Vertex> left_subset,
                          std::span<const Vertex> right_subset);

Graph complete_graph(Vertex n);
BipartiteGraph complete_bipartite(Vertex a, Vertex b);
Graph cycle_graph(Vertex n);
Graph path_graph(Vertex n);
/// d-regular circulant on n vertices (d even, or d odd with n even).
Graph circulant_graph(Vertex n, int degree);

// Text format: first non-comment line "n m", then m lines "u v" or
// "u v color". Lines starting with '#' are comments; a "# palette c"
// comment records the palette of a colored graph.
void save_graph(const Graph& g, const std::filesystem::path& path);
void save_colored_graph(const ColoredGraph& g, const std::filesystem::path& path);
Graph load_graph(const std::filesystem::path& path);
ColoredGraph load_colored_graph(const std::filesystem::path& path);

}  // namespace rainbow
