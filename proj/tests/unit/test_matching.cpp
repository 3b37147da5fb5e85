#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rainbow/matching.hpp"
#include "rainbow/models.hpp"
#include "rainbow/rng.hpp"

using namespace rainbow;

namespace {

BipartiteGraph random_bipartite(Vertex a, Vertex b, double p, Seed s) { return sample_bipartite_gnp(a, b, p, s); }

BipartiteGraph from_mask(int n, std::uint32_t mask) {
  std::vector<Pair> edges;
  for (int i = 0; i < n * n; ++i) {
    if (mask >> i & 1) edges.push_back({i / n, i % n});
  }
  return BipartiteGraph(n, n, edges);
}

// Union of r random perfect matchings that avoid each other.
BipartiteGraph random_regular(int n, int r, Seed seed) {
  Rng rng(seed);
  while (true) {
    std::set<Pair> edges;
    bool ok = true;
    for (int j = 0; j < r && ok; ++j) {
      const auto perm = rng.permutation(n);
      for (int x = 0; x < n; ++x) ok = ok && edges.insert({x, perm[static_cast<std::size_t>(x)]}).second;
    }
    if (ok) return BipartiteGraph(n, n, {edges.begin(), edges.end()});
  }
}

}  // namespace

TEST_CASE("Hopcroft-Karp agrees with brute force") {
  for (Seed s = 0; s < 300; ++s) {
    const auto b = random_bipartite(4, 5, 0.45, s);
    if (b.edge_count() > 16) continue;
    const auto m = max_matching(b);
    CHECK(is_valid_matching(m, b));
    CHECK(m.size() == oracle::max_matching_size(b));
  }
  CHECK(max_matching(complete_bipartite(30, 30)).size() == 30);
  CHECK(max_matching(BipartiteGraph(3, 3, {})).size() == 0);
}

TEST_CASE("Gale-Ryser check matches the all-pairs condition and r-factor search") {
  Rng rng(123);
  for (int rep = 0; rep < 400; ++rep) {
    const auto b = from_mask(3, static_cast<std::uint32_t>(rng.below(1u << 9)));
    for (int r = 1; r <= 3; ++r) {
      const auto gr = gale_ryser_check(b, r);
      CHECK(gr.holds == oracle::gale_ryser_all_pairs(b, r));
      CHECK(gr.holds == oracle::has_r_factor(b, r));
      CHECK(gr.holds == find_r_factor(b, r).has_value());
    }
  }
}

TEST_CASE("Gale-Ryser witness violates the condition and is minimal") {
  // Left vertex 0 is isolated: X = {0}, Y = all right vertices gives
  // e = 0 < r(1 + n - n) = r.
  const BipartiteGraph b(3, 3, {{1, 0}, {1, 1}, {2, 1}, {2, 2}});
  const auto gr = gale_ryser_check(b, 1);
  REQUIRE_FALSE(gr.holds);
  const auto e = edges_between(b, gr.witness_left, gr.witness_right);
  const auto size = static_cast<long long>(gr.witness_left.size() + gr.witness_right.size());
  CHECK(static_cast<long long>(e) < size - 3);
  // Brute force: no violating pair is smaller.
  for (std::uint32_t xs = 0; xs < 8; ++xs) {
    for (std::uint32_t ys = 0; ys < 8; ++ys) {
      std::vector<Vertex> x, y;
      for (int i = 0; i < 3; ++i) {
        if (xs >> i & 1) x.push_back(i);
        if (ys >> i & 1) y.push_back(i);
      }
      const auto s = static_cast<long long>(x.size() + y.size());
      if (static_cast<long long>(edges_between(b, x, y)) < s - 3) CHECK(s >= size);
    }
  }
}

TEST_CASE("Gale-Ryser slack identity") {
  for (long long n = 1; n <= 6; ++n) {
    for (long long x = 0; x <= n; ++x) {
      for (long long y = 0; y <= n; ++y) CHECK(gale_ryser_slack(n, x, y) == (n - x) * (n - y));
    }
  }
}

TEST_CASE("Gale-Ryser parameter errors") {
  CHECK_THROWS_AS(gale_ryser_check(complete_bipartite(2, 3), 1), ParameterError);
  CHECK_THROWS_AS(gale_ryser_check(complete_bipartite(23, 23), 1), ParameterError);
  CHECK_THROWS_AS(find_r_factor(complete_bipartite(2, 3), 1), ParameterError);
}

TEST_CASE("r-factors are spanning regular subgraphs") {
  for (Seed s = 0; s < 40; ++s) {
    const auto b = random_bipartite(12, 12, 0.6, s);
    for (int r = 1; r <= 4; ++r) {
      const auto f = find_r_factor(b, r);
      if (!f) continue;
      for (Vertex v = 0; v < 12; ++v) {
        CHECK(f->left_degree(v) == r);
        CHECK(f->right_degree(v) == r);
      }
      for (const auto& e : f->edges()) CHECK(b.has_edge(e.left, e.right));
    }
  }
  CHECK(find_r_factor(complete_bipartite(5, 5), 5).has_value());
  CHECK_FALSE(find_r_factor(complete_bipartite(5, 5), 6).has_value());
}

TEST_CASE("regular graphs split into disjoint perfect matchings") {
  for (Seed s = 0; s < 50; ++s) {
    const auto b = random_regular(8, 4, s);
    const auto ms = decompose_regular(b);
    REQUIRE(ms.size() == 4);
    std::set<Pair> seen;
    for (const auto& m : ms) {
      CHECK(is_perfect_matching(m, b));
      for (const auto& p : m.pairs) CHECK(seen.insert(p).second);
    }
    CHECK(seen.size() == b.edge_count());
  }
  CHECK_THROWS_AS(decompose_regular(BipartiteGraph(2, 2, {{0, 0}, {0, 1}, {1, 1}})), ParameterError);
}

TEST_CASE("many_matchings reaches the best r and stops at the target") {
  const auto fam = many_matchings(complete_bipartite(6, 6), 4);
  CHECK(fam.achieved() == 4);
  CHECK(fam.success());
  const auto all = many_matchings(complete_bipartite(6, 6), 10);
  CHECK(all.achieved() == 6);
  CHECK_FALSE(all.success());
  // Isolated left vertex: nothing.
  CHECK(many_matchings(BipartiteGraph(2, 2, {{0, 0}, {0, 1}}), 1).achieved() == 0);
}

TEST_CASE("k-matchings from stars and complete graphs") {
  // n disjoint K_{1,k}: star x owns x, x + n, ..., one leaf per block.
  const int n = 5, k = 3;
  std::vector<Pair> edges;
  for (int x = 0; x < n; ++x) {
    for (int j = 0; j < k; ++j) edges.push_back({x, x + j * n});
  }
  const BipartiteGraph stars(n, k * n, edges);
  const auto fam = k_matchings_with_target(stars, k, 1);
  REQUIRE(fam.achieved() == 1);
  CHECK(is_valid_k_matching(fam.k_matchings[0], stars, k));

  const auto full = k_matchings_with_target(complete_bipartite(4, 8), 2, 4);
  CHECK(full.achieved() == 4);
  std::set<Pair> seen;
  for (const auto& km : full.k_matchings) {
    CHECK(is_valid_k_matching(km, complete_bipartite(4, 8), 2));
    for (Vertex x = 0; x < 4; ++x) {
      for (const Vertex y : km.stars[static_cast<std::size_t>(x)]) CHECK(seen.insert({x, y}).second);
    }
  }
  CHECK_THROWS_AS(k_matchings_with_target(complete_bipartite(4, 7), 2, 1), ParameterError);
}

TEST_CASE("k-matchings from left k-out graphs") {
  int reached = 0;
  for (Seed s = 0; s < 20; ++s) {
    const auto b = sample_left_kout(20, 40, 10, s);
    const auto fam = k_matchings_from_left_kout(b, 2, 10, 0.5);
    CHECK(fam.target == 3);
    for (const auto& km : fam.k_matchings) CHECK(is_valid_k_matching(km, b, 2));
    reached += fam.achieved() >= 1;
    // Without the block partition the family is maximum, so never smaller.
    const auto free = k_matchings_biregular(b, 2, 3);
    CHECK(free.achieved() >= fam.achieved());
    for (const auto& km : free.k_matchings) CHECK(is_valid_k_matching(km, b, 2));
  }
  CHECK(reached >= 15);
  CHECK_THROWS_AS(k_matchings_from_left_kout(sample_left_kout(4, 8, 2, 1), 2, 3, 0.5), ParameterError);
}
