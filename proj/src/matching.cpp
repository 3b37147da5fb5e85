#include "rainbow/matching.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>

#include "rainbow/flow.hpp"

namespace rainbow {

namespace {

constexpr Vertex kFree = -1;

// Hopcroft-Karp over explicit adjacency lists, optionally warm-started.
class HopcroftKarp {
 public:
  HopcroftKarp(Vertex left, Vertex right, const std::vector<std::vector<Vertex>>& adj)
      : adj_(adj),
        mate_left_(static_cast<std::size_t>(left), kFree),
        mate_right_(static_cast<std::size_t>(right), kFree),
        dist_(static_cast<std::size_t>(left)) {}

  void seed_greedy() {
    for (Vertex x = 0; x < static_cast<Vertex>(adj_.size()); ++x) {
      for (const Vertex y : adj_[static_cast<std::size_t>(x)]) {
        if (mate_right_[static_cast<std::size_t>(y)] == kFree) {
          mate_left_[static_cast<std::size_t>(x)] = y;
          mate_right_[static_cast<std::size_t>(y)] = x;
          break;
        }
      }
    }
  }

  void run() {
    while (bfs()) {
      for (Vertex x = 0; x < static_cast<Vertex>(adj_.size()); ++x) {
        if (mate_left_[static_cast<std::size_t>(x)] == kFree) dfs(x);
      }
    }
  }

  Matching result() const {
    Matching m;
    for (Vertex x = 0; x < static_cast<Vertex>(mate_left_.size()); ++x) {
      if (mate_left_[static_cast<std::size_t>(x)] != kFree) {
        m.pairs.push_back({x, mate_left_[static_cast<std::size_t>(x)]});
      }
    }
    return m;
  }

 private:
  bool bfs() {
    std::queue<Vertex> frontier;
    bool found = false;
    for (Vertex x = 0; x < static_cast<Vertex>(adj_.size()); ++x) {
      if (mate_left_[static_cast<std::size_t>(x)] == kFree) {
        dist_[static_cast<std::size_t>(x)] = 0;
        frontier.push(x);
      } else {
        dist_[static_cast<std::size_t>(x)] = std::numeric_limits<int>::max();
      }
    }
    while (!frontier.empty()) {
      const Vertex x = frontier.front();
      frontier.pop();
      for (const Vertex y : adj_[static_cast<std::size_t>(x)]) {
        const Vertex next = mate_right_[static_cast<std::size_t>(y)];
        if (next == kFree) {
          found = true;
        } else if (dist_[static_cast<std::size_t>(next)] == std::numeric_limits<int>::max()) {
          dist_[static_cast<std::size_t>(next)] = dist_[static_cast<std::size_t>(x)] + 1;
          frontier.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(Vertex x) {
    for (const Vertex y : adj_[static_cast<std::size_t>(x)]) {
      const Vertex next = mate_right_[static_cast<std::size_t>(y)];
      if (next == kFree ||
          (dist_[static_cast<std::size_t>(next)] == dist_[static_cast<std::size_t>(x)] + 1 && dfs(next))) {
        mate_left_[static_cast<std::size_t>(x)] = y;
        mate_right_[static_cast<std::size_t>(y)] = x;
        return true;
      }
    }
    dist_[static_cast<std::size_t>(x)] = std::numeric_limits<int>::max();
    return false;
  }

  const std::vector<std::vector<Vertex>>& adj_;
  std::vector<Vertex> mate_left_;
  std::vector<Vertex> mate_right_;
  std::vector<int> dist_;
};

std::vector<std::vector<Vertex>> left_adjacency(const BipartiteGraph& b) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(b.left_size()));
  for (Vertex x = 0; x < b.left_size(); ++x) {
    const auto nbrs = b.left_neighbors(x);
    adj[static_cast<std::size_t>(x)].assign(nbrs.begin(), nbrs.end());
  }
  return adj;
}

void require_equal_parts(const BipartiteGraph& b, const char* who) {
  if (b.left_size() != b.right_size()) throw ParameterError(std::string(who) + ": parts must have equal size");
}

}  // namespace

bool is_valid_matching(const Matching& m, const BipartiteGraph& host) {
  std::vector<char> used_left(static_cast<std::size_t>(host.left_size()), 0);
  std::vector<char> used_right(static_cast<std::size_t>(host.right_size()), 0);
  for (const auto& [x, y] : m.pairs) {
    if (!host.has_edge(x, y)) return false;
    if (used_left[static_cast<std::size_t>(x)] || used_right[static_cast<std::size_t>(y)]) return false;
    used_left[static_cast<std::size_t>(x)] = used_right[static_cast<std::size_t>(y)] = 1;
  }
  return true;
}

bool is_perfect_matching(const Matching& m, const BipartiteGraph& host) {
  return host.left_size() == host.right_size() &&
         static_cast<Vertex>(m.pairs.size()) == host.left_size() && is_valid_matching(m, host);
}

bool is_valid_k_matching(const KMatching& m, const BipartiteGraph& host, int k) {
  if (static_cast<Vertex>(m.stars.size()) != host.left_size()) return false;
  std::vector<char> used(static_cast<std::size_t>(host.right_size()), 0);
  for (Vertex x = 0; x < host.left_size(); ++x) {
    const auto& star = m.stars[static_cast<std::size_t>(x)];
    if (static_cast<int>(star.size()) != k) return false;
    for (const Vertex y : star) {
      if (!host.has_edge(x, y) || used[static_cast<std::size_t>(y)]) return false;
      used[static_cast<std::size_t>(y)] = 1;
    }
  }
  return true;
}

Matching max_matching(const BipartiteGraph& b) {
  const auto adj = left_adjacency(b);
  HopcroftKarp hk(b.left_size(), b.right_size(), adj);
  hk.seed_greedy();
  hk.run();
  auto m = hk.result();
  assert(is_valid_matching(m, b));
  return m;
}

GaleRyserResult gale_ryser_check(const BipartiteGraph& b, int r) {
  require_equal_parts(b, "gale_ryser_check");
  const Vertex n = b.left_size();
  if (n > kGaleRyserMaxN) {
    throw ParameterError("gale_ryser_check: n too large for exact enumeration; use find_r_factor");
  }
  if (r < 0) throw ParameterError("gale_ryser_check: r must be non-negative");

  // Neighborhood of each right vertex as a bitmask over the left part.
  std::vector<std::uint32_t> right_mask(static_cast<std::size_t>(n), 0);
  for (const auto& e : b.edges()) right_mask[static_cast<std::size_t>(e.right)] |= 1u << e.left;

  GaleRyserResult result;
  int best_size = std::numeric_limits<int>::max();
  std::vector<std::pair<int, Vertex>> by_count(static_cast<std::size_t>(n));
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t xs = 0; xs < subsets; ++xs) {
    const auto x_mask = static_cast<std::uint32_t>(xs);
    const int x_size = std::popcount(x_mask);
    // Worst Y: every y with fewer than r neighbors in X lowers the slack.
    long long deficit = 0;
    for (Vertex y = 0; y < n; ++y) {
      const int cnt = std::popcount(right_mask[static_cast<std::size_t>(y)] & x_mask);
      by_count[static_cast<std::size_t>(y)] = {cnt, y};
      deficit += std::max(0, r - cnt);
    }
    if (deficit <= static_cast<long long>(r) * (n - x_size)) continue;
    // Violated. The smallest violating Y adds right vertices in order of
    // increasing neighbor count until e(X,Y) < r(|X| + |Y| - n).
    std::sort(by_count.begin(), by_count.end());
    long long e_xy = 0;
    int y_size = 0;
    for (; y_size < n; ++y_size) {
      if (e_xy < static_cast<long long>(r) * (x_size + y_size - n)) break;
      e_xy += by_count[static_cast<std::size_t>(y_size)].first;
    }
    assert(e_xy < static_cast<long long>(r) * (x_size + y_size - n));
    if (x_size + y_size < best_size) {
      best_size = x_size + y_size;
      result.holds = false;
      result.witness_left.clear();
      result.witness_right.clear();
      for (Vertex x = 0; x < n; ++x) {
        if (x_mask & (1u << x)) result.witness_left.push_back(x);
      }
      for (int i = 0; i < y_size; ++i) result.witness_right.push_back(by_count[static_cast<std::size_t>(i)].second);
      std::sort(result.witness_right.begin(), result.witness_right.end());
    }
  }
  return result;
}

std::optional<BipartiteGraph> find_r_factor(const BipartiteGraph& b, int r) {
  require_equal_parts(b, "find_r_factor");
  if (r < 0) throw ParameterError("find_r_factor: r must be non-negative");
  const Vertex n = b.left_size();
  if (r == 0) return BipartiteGraph(n, n, {});
  if (r > n) return std::nullopt;
  for (Vertex v = 0; v < n; ++v) {
    if (b.left_degree(v) < r || b.right_degree(v) < r) return std::nullopt;
  }
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  FlowNetwork net(2 * n + 2);
  for (Vertex v = 0; v < n; ++v) {
    net.add_arc(source, v, r);
    net.add_arc(n + v, sink, r);
  }
  std::vector<int> arc_of_edge;
  arc_of_edge.reserve(b.edge_count());
  for (const auto& e : b.edges()) arc_of_edge.push_back(net.add_arc(e.left, n + e.right, 1));
  if (net.max_flow(source, sink) != static_cast<std::int64_t>(r) * n) return std::nullopt;
  std::vector<Pair> kept;
  kept.reserve(static_cast<std::size_t>(r) * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < b.edges().size(); ++i) {
    if (net.flow_on(arc_of_edge[i]) == 1) kept.push_back(b.edges()[i]);
  }
  return BipartiteGraph(n, n, std::move(kept));
}

std::vector<Matching> decompose_regular(const BipartiteGraph& b) {
  require_equal_parts(b, "decompose_regular");
  const Vertex n = b.left_size();
  if (n == 0) return {};
  const int r = b.left_degree(0);
  for (Vertex v = 0; v < n; ++v) {
    if (b.left_degree(v) != r || b.right_degree(v) != r) {
      throw ParameterError("decompose_regular: graph is not regular");
    }
  }
  auto adj = left_adjacency(b);
  std::vector<Matching> out;
  out.reserve(static_cast<std::size_t>(r));
  for (int round = 0; round < r; ++round) {
    // The remaining graph is (r - round)-regular, so Hall's condition holds
    // and a perfect matching exists.
    HopcroftKarp hk(n, n, adj);
    hk.seed_greedy();
    hk.run();
    auto m = hk.result();
    if (static_cast<Vertex>(m.pairs.size()) != n) {
      throw std::logic_error("decompose_regular: regular bipartite graph without perfect matching");
    }
    for (const auto& [x, y] : m.pairs) {
      auto& list = adj[static_cast<std::size_t>(x)];
      list.erase(std::find(list.begin(), list.end(), y));
    }
    out.push_back(std::move(m));
  }
#ifndef NDEBUG
  for (const auto& m : out) assert(is_perfect_matching(m, b));
#endif
  return out;
}

MatchingFamily many_matchings(const BipartiteGraph& b, int target) {
  require_equal_parts(b, "many_matchings");
  MatchingFamily family;
  family.target = target;
  if (target <= 0) return family;
  // r-factors are nested (drop one matching of an r-factor), so the
  // largest feasible r can be found by bisection.
  int lo = 0;
  int hi = std::min(target, min_left_degree(b));
  std::optional<BipartiteGraph> best;
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (auto factor = find_r_factor(b, mid)) {
      lo = mid;
      best = std::move(factor);
    } else {
      hi = mid - 1;
    }
  }
  if (lo > 0) {
    if (!best || best->left_degree(0) != lo) best = find_r_factor(b, lo);
    family.matchings = decompose_regular(*best);
  }
  return family;
}

KMatchingFamily k_matchings_with_target(const BipartiteGraph& b, int k, int target) {
  if (k < 1) throw ParameterError("k_matchings: k must be positive");
  const Vertex n = b.left_size();
  if (b.right_size() != static_cast<Vertex>(k) * n) {
    throw ParameterError("k_matchings: right size must equal k times left size");
  }
  KMatchingFamily result;
  result.target = target;
  if (target <= 0 || n == 0) return result;

  std::vector<MatchingFamily> per_block;
  per_block.reserve(static_cast<std::size_t>(k));
  int achieved = target;
  for (int block = 0; block < k && achieved > 0; ++block) {
    const Vertex lo = block * n;
    std::vector<Pair> induced;
    for (const auto& e : b.edges()) {
      if (e.right >= lo && e.right < lo + n) induced.push_back({e.left, e.right - lo});
    }
    per_block.push_back(many_matchings(BipartiteGraph(n, n, std::move(induced)), achieved));
    achieved = std::min(achieved, per_block.back().achieved());
  }
  if (static_cast<int>(per_block.size()) < k) achieved = 0;

  for (int j = 0; j < achieved; ++j) {
    KMatching km;
    km.stars.assign(static_cast<std::size_t>(n), {});
    for (int block = 0; block < k; ++block) {
      for (const auto& [x, y] : per_block[static_cast<std::size_t>(block)].matchings[static_cast<std::size_t>(j)].pairs) {
        km.stars[static_cast<std::size_t>(x)].push_back(block * n + y);
      }
    }
    for (auto& star : km.stars) std::sort(star.begin(), star.end());
    if (!is_valid_k_matching(km, b, k)) throw std::logic_error("k_matchings: produced an invalid k-matching");
    result.k_matchings.push_back(std::move(km));
  }
  return result;
}

namespace {

// Subgraph with left degrees k * s and right degrees s, if one exists.
std::optional<BipartiteGraph> find_biregular(const BipartiteGraph& b, int k, int s) {
  const Vertex a = b.left_size();
  const Vertex r = b.right_size();
  const int source = a + r;
  const int sink = source + 1;
  FlowNetwork net(sink + 1);
  for (Vertex x = 0; x < a; ++x) net.add_arc(source, x, static_cast<std::int64_t>(k) * s);
  for (Vertex y = 0; y < r; ++y) net.add_arc(a + y, sink, s);
  std::vector<int> arcs;
  arcs.reserve(b.edge_count());
  for (const auto& e : b.edges()) arcs.push_back(net.add_arc(e.left, a + e.right, 1));
  if (net.max_flow(source, sink) != static_cast<std::int64_t>(k) * s * a) return std::nullopt;
  std::vector<Pair> kept;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (net.flow_on(arcs[i]) == 1) kept.push_back(b.edges()[i]);
  }
  return BipartiteGraph(a, r, std::move(kept));
}

}  // namespace

KMatchingFamily k_matchings_biregular(const BipartiteGraph& b, int k, int target) {
  if (k < 1) throw ParameterError("k_matchings: k must be positive");
  const Vertex n = b.left_size();
  if (b.right_size() != static_cast<Vertex>(k) * n) {
    throw ParameterError("k_matchings: right size must equal k times left size");
  }
  KMatchingFamily result;
  result.target = target;
  if (target <= 0 || n == 0) return result;
  int lo = 0;
  int hi = std::min(target, min_left_degree(b) / k);
  std::optional<BipartiteGraph> best;
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (auto sub = find_biregular(b, k, mid)) {
      lo = mid;
      best = std::move(sub);
    } else {
      hi = mid - 1;
    }
  }
  if (lo == 0) return result;
  if (!best || best->left_degree(0) != k * lo) best = find_biregular(b, k, lo);
  // Copy j of x (index j * n + x) takes every k-th edge of x.
  std::vector<Pair> split;
  split.reserve(best->edge_count());
  for (Vertex x = 0; x < n; ++x) {
    const auto nbrs = best->left_neighbors(x);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      split.push_back({static_cast<Vertex>(i % static_cast<std::size_t>(k)) * n + x, nbrs[i]});
    }
  }
  const auto matchings = decompose_regular(BipartiteGraph(k * n, k * n, std::move(split)));
  for (const auto& m : matchings) {
    KMatching km;
    km.stars.assign(static_cast<std::size_t>(n), {});
    for (const auto& [copy, y] : m.pairs) km.stars[static_cast<std::size_t>(copy % n)].push_back(y);
    for (auto& star : km.stars) std::sort(star.begin(), star.end());
    if (!is_valid_k_matching(km, b, k)) throw std::logic_error("k_matchings: produced an invalid k-matching");
    result.k_matchings.push_back(std::move(km));
  }
  return result;
}

KMatchingFamily k_matchings_from_left_kout(const BipartiteGraph& b, int k, int min_left_degree, double eps) {
  for (Vertex x = 0; x < b.left_size(); ++x) {
    if (b.left_degree(x) < min_left_degree) {
      throw ParameterError("k_matchings_from_left_kout: left vertex " + std::to_string(x) +
                           " has degree below s");
    }
  }
  const int target = static_cast<int>(std::ceil((1.0 - eps) * min_left_degree / k - 1e-12));
  return k_matchings_with_target(b, k, target);
}

}  // namespace rainbow
