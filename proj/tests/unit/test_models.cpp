#include <doctest.h>

#include <map>

#include "rainbow/models.hpp"
#include "rainbow/stats.hpp"

using namespace rainbow;

namespace {

std::uint64_t mask_of(const Graph& host, const Graph& sub) {
  std::uint64_t m = 0;
  for (const auto& e : sub.edges()) m |= std::uint64_t{1} << *host.edge_id(e.u, e.v);
  return m;
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, edges);
}

}  // namespace

TEST_CASE("gnp extremes and per-edge frequency") {
  const auto g = complete_graph(8);
  CHECK(sample_gnp(g, 0.0, 1).edge_count() == 0);
  CHECK(sample_gnp(g, 1.0, 1) == g);
  CHECK_THROWS_AS(sample_gnp(g, 1.5, 1), ParameterError);
  std::vector<int> hits(g.edge_count());
  const int reps = 4000;
  for (int s = 0; s < reps; ++s) {
    const auto h = sample_gnp(g, 0.3, static_cast<Seed>(s));
    for (const auto& e : h.edges()) ++hits[static_cast<std::size_t>(*g.edge_id(e.u, e.v))];
  }
  for (const int h : hits) CHECK(h / double(reps) == doctest::Approx(0.3).epsilon(0.1));
}

TEST_CASE("colored samples use the whole palette uniformly") {
  const auto g = complete_graph(6);
  std::vector<std::uint64_t> counts(5);
  for (Seed s = 0; s < 3000; ++s) {
    const auto cg = sample_colored(g, 0.5, 5, s);
    for (const Color c : cg.colors()) {
      REQUIRE(c >= 1);
      REQUIRE(c <= 5);
      ++counts[static_cast<std::size_t>(c - 1)];
    }
  }
  CHECK(chi_square_uniform(counts).p_value > 1e-3);
  // Color draws never disturb which edges are kept.
  CHECK(sample_colored(g, 0.5, 5, 17).graph() == sample_gnp(g, 0.5, 17));
}

TEST_CASE("plain k-out picks k neighbors per vertex") {
  const auto g = complete_graph(10);
  const auto s = sample_kout(g, 3, 4);
  for (Vertex x = 0; x < 10; ++x) {
    const auto& c = s.chosen[static_cast<std::size_t>(x)];
    CHECK(c.size() == 3);
    for (const Vertex y : c) CHECK(s.result.has_edge(x, y));
  }
  CHECK(s.result.edge_count() >= 15);
  CHECK(s.result.edge_count() <= 30);
  CHECK_THROWS_AS(sample_kout(path_graph(4), 2, 1), ParameterError);
}

TEST_CASE("star model on K_{1,3} with k = 1 matches exact enumeration") {
  // If j leaves orient toward the centre they all pick their edge; the
  // centre picks one of its 3 - j out-edges when it has any. So three
  // edges appear exactly when j = 2 or j = 3: probability 3/8 + 1/8.
  const auto g = star_graph(3);
  int three = 0;
  const int reps = 200000;
  for (int s = 0; s < reps; ++s) three += sample_kout_star(g, 1, static_cast<Seed>(s)).result.edge_count() == 3;
  const auto ci = wilson_interval(static_cast<std::uint64_t>(three), reps);
  CHECK(ci.lo <= 0.5);
  CHECK(ci.hi >= 0.5);
}

TEST_CASE("star model picks min(k, out-degree) out-edges") {
  const auto g = complete_graph(7);
  for (Seed s = 0; s < 50; ++s) {
    const auto smp = sample_kout_star(g, 2, s);
    const auto& o = *smp.orientation;
    for (Vertex x = 0; x < 7; ++x) {
      const auto& picks = smp.chosen[static_cast<std::size_t>(x)];
      CHECK(static_cast<int>(picks.size()) == std::min(2, o.out_degree(x)));
      for (const Vertex y : picks) {
        const auto outs = o.out_neighbors(x);
        CHECK(std::find(outs.begin(), outs.end(), y) != outs.end());
      }
    }
  }
}

TEST_CASE("hat model claims min(k, unclaimed) per vertex") {
  const auto g = complete_graph(5);
  for (Seed s = 0; s < 100; ++s) {
    const auto h = sample_kout_hat(g, 1, s);
    // With k = 1 every vertex except possibly the last claims one edge.
    CHECK(h.edge_count() >= 4);
    CHECK(h.edge_count() <= 5);
  }
  CHECK(sample_kout_hat(complete_graph(2), 1, 3).edge_count() == 1);
  // K_3, k = 2: the first vertex takes both its edges, the second the one
  // left, the third finds nothing unclaimed and picks zero edges.
  for (Seed s = 0; s < 20; ++s) CHECK(sample_kout_hat(complete_graph(3), 2, s) == complete_graph(3));
}

TEST_CASE("coupled sample holds min(k, d+) claims and follows the star law") {
  const auto g = complete_graph(4);
  std::map<std::uint64_t, std::uint64_t> coupled, star;
  const int reps = 200000;
  for (int s = 0; s < reps; ++s) {
    const auto out = sample_coupled(g, 2, static_cast<Seed>(s));
    for (Vertex x = 0; x < 4; ++x) {
      REQUIRE(static_cast<int>(out.claimed[static_cast<std::size_t>(x)].size()) ==
              std::min(2, out.orientation.out_degree(x)));
    }
    CHECK(out.agreed == out.h_hat.has_value());
    ++coupled[mask_of(g, out.h_star)];
    ++star[mask_of(g, sample_kout_star(g, 2, static_cast<Seed>(s) + 1000000007ULL).result)];
  }
  CHECK(tv_distance(coupled, star) < 0.01);
}

TEST_CASE("coupled sample on K_2 is degenerate") {
  for (Seed s = 0; s < 20; ++s) {
    const auto out = sample_coupled(complete_graph(2), 1, s);
    CHECK(out.h_star.edge_count() == 1);
    CHECK(sample_kout_hat(complete_graph(2), 1, s).edge_count() == 1);
  }
}

TEST_CASE("left k-out and bipartite gnp") {
  const auto b = sample_left_kout(6, 9, 3, 2);
  for (Vertex x = 0; x < 6; ++x) CHECK(b.left_degree(x) == 3);
  CHECK_THROWS_AS(sample_left_kout(3, 2, 3, 1), ParameterError);
  CHECK(sample_bipartite_gnp(4, 5, 1.0, 1).edge_count() == 20);
  CHECK(sample_bipartite_gnp(4, 5, 0.0, 1).edge_count() == 0);
}

TEST_CASE("samplers are deterministic in the seed") {
  const auto g = complete_graph(12);
  CHECK(sample_kout(g, 2, 99).result == sample_kout(g, 2, 99).result);
  CHECK(sample_kout_star(g, 2, 99).result == sample_kout_star(g, 2, 99).result);
  CHECK(sample_kout_hat(g, 2, 99) == sample_kout_hat(g, 2, 99));
  CHECK(sample_coupled(g, 2, 99).h_star == sample_coupled(g, 2, 99).h_star);
}
