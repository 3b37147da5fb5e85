#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "rainbow/graph.hpp"

using namespace rainbow;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("rainbow-test-" + name);
}

}  // namespace

TEST_CASE("graph construction sorts and indexes edges") {
  Graph g(4, {{2, 3}, {0, 1}, {1, 2}});
  CHECK(g.edge_count() == 3);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(2) == Edge{2, 3});
  CHECK(g.degree(1) == 2);
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(*g.edge_id(3, 2) == 2);
  CHECK_FALSE(g.edge_id(0, 2).has_value());
  const auto nb = g.neighbors(1);
  CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{0, 2});
}

TEST_CASE("graph rejects malformed edge lists") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), ParameterError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ParameterError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), ParameterError);
  CHECK_THROWS_AS(Graph(-1, {}), ParameterError);
}

TEST_CASE("standard families") {
  CHECK(complete_graph(6).edge_count() == 15);
  CHECK(min_degree(complete_graph(6)) == 5);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(path_graph(5).edge_count() == 4);
  const auto kb = complete_bipartite(3, 4);
  CHECK(kb.edge_count() == 12);
  CHECK(kb.right_degree(2) == 3);
  CHECK(kb.as_graph().edge_count() == 12);
  CHECK(kb.as_graph().has_edge(0, 3 + 3));
}

TEST_CASE("circulant graphs are regular") {
  for (const auto [n, d] : std::vector<std::pair<int, int>>{{10, 4}, {10, 5}, {11, 6}, {200, 150}, {8, 7}}) {
    const auto g = circulant_graph(n, d);
    for (Vertex v = 0; v < n; ++v) CHECK(g.degree(v) == d);
  }
  CHECK_THROWS_AS(circulant_graph(11, 5), ParameterError);
}

TEST_CASE("edges_between counts crossing pairs") {
  const auto kb = complete_bipartite(3, 3);
  const std::vector<Vertex> x{0, 2};
  const std::vector<Vertex> y{1};
  CHECK(edges_between(kb, x, y) == 2);
  const std::vector<Vertex> bad{5};
  CHECK_THROWS_AS(edges_between(kb, bad, y), ParameterError);
}

TEST_CASE("orientation keeps exactly one direction per edge") {
  const auto g = complete_graph(5);
  std::vector<bool> forward(g.edge_count());
  for (std::size_t i = 0; i < forward.size(); ++i) forward[i] = i % 3 == 0;
  const Orientation o(g, forward);
  int total = 0;
  for (Vertex x = 0; x < 5; ++x) total += o.out_degree(x);
  CHECK(total == 10);
  for (EdgeId e = 0; e < 10; ++e) {
    const auto& a = o.arc(e);
    CHECK(Edge::make(a.tail, a.head) == g.edge(e));
    CHECK((a.tail == g.edge(e).u) == forward[static_cast<std::size_t>(e)]);
  }
}

TEST_CASE("colored graph validates colors") {
  const Graph g(3, {{0, 1}, {1, 2}});
  const ColoredGraph cg(g, {4, 1}, 4);
  CHECK(cg.color_of(2, 1) == 1);
  CHECK_THROWS_AS(ColoredGraph(g, {5, 1}, 4), ParameterError);
  CHECK_THROWS_AS(ColoredGraph(g, {0, 1}, 4), ParameterError);
  CHECK_THROWS_AS(ColoredGraph(g, {1}, 4), ParameterError);
  CHECK_THROWS_AS((void)cg.color_of(0, 2), ParameterError);
}

TEST_CASE("graph files round-trip") {
  const auto path = temp_file("roundtrip.txt");
  const auto g = circulant_graph(9, 4);
  save_graph(g, path);
  CHECK(load_graph(path) == g);

  const ColoredGraph cg(Graph(4, {{0, 1}, {2, 3}}), {3, 7}, 8);
  save_colored_graph(cg, path);
  CHECK(load_colored_graph(path) == cg);
  std::filesystem::remove(path);
}

TEST_CASE("parse errors carry the line number") {
  const auto path = temp_file("bad.txt");
  {
    std::ofstream out(path);
    out << "# comment\n3 2\n0 1\n1 x\n";
  }
  try {
    (void)load_graph(path);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  {
    std::ofstream out(path);
    out << "3 2\n0 1\n";
  }
  CHECK_THROWS_AS((void)load_graph(path), ParseError);
  CHECK_THROWS_AS((void)load_graph(temp_file("missing.txt")), ParseError);
  std::filesystem::remove(path);
}
