#pragma once

// Brute-force reference implementations. Deliberately naive; only for
// tiny inputs.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "rainbow/graph.hpp"

namespace oracle {

using rainbow::BipartiteGraph;
using rainbow::Graph;
using rainbow::Vertex;

inline bool has_perfect_matching(const BipartiteGraph& b) {
  if (b.left_size() != b.right_size()) return false;
  std::vector<Vertex> perm(static_cast<std::size_t>(b.right_size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Vertex x = 0; x < b.left_size() && ok; ++x) ok = b.has_edge(x, perm[static_cast<std::size_t>(x)]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::size_t max_matching_size(const BipartiteGraph& b) {
  // Try every subset of edges, largest first. Edge count must be small.
  const auto m = b.edges().size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size <= best) continue;
    std::vector<char> l(static_cast<std::size_t>(b.left_size())), r(static_cast<std::size_t>(b.right_size()));
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      auto& lu = l[static_cast<std::size_t>(b.edges()[i].left)];
      auto& ru = r[static_cast<std::size_t>(b.edges()[i].right)];
      ok = !lu && !ru;
      lu = ru = 1;
    }
    if (ok) best = size;
  }
  return best;
}

/// Exists an r-regular spanning subgraph: search over edge subsets.
inline bool has_r_factor(const BipartiteGraph& b, int r) {
  const auto m = b.edges().size();
  const auto n = static_cast<std::size_t>(b.left_size());
  if (static_cast<std::size_t>(r) * n > m) return false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != static_cast<std::size_t>(r) * n) continue;
    std::vector<int> dl(n), dr(n);
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) {
        ++dl[static_cast<std::size_t>(b.edges()[i].left)];
        ++dr[static_cast<std::size_t>(b.edges()[i].right)];
      }
    }
    if (std::all_of(dl.begin(), dl.end(), [&](int d) { return d == r; }) &&
        std::all_of(dr.begin(), dr.end(), [&](int d) { return d == r; })) {
      return true;
    }
  }
  return false;
}

/// Gale-Ryser by enumerating every (X, Y) pair.
inline bool gale_ryser_all_pairs(const BipartiteGraph& b, int r) {
  const int n = b.left_size();
  for (std::uint32_t xs = 0; xs < (1u << n); ++xs) {
    for (std::uint32_t ys = 0; ys < (1u << n); ++ys) {
      long long e = 0;
      for (const auto& p : b.edges()) e += (xs >> p.left & 1) && (ys >> p.right & 1);
      if (e < static_cast<long long>(r) * (__builtin_popcount(xs) + __builtin_popcount(ys) - n)) return false;
    }
  }
  return true;
}

inline bool is_hamiltonian(const Graph& g) {
  const Vertex n = g.n();
  if (n < 3) return false;
  std::vector<Vertex> perm(static_cast<std::size_t>(n) - 1);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = g.has_edge(0, perm.front()) && g.has_edge(perm.back(), 0);
    for (std::size_t i = 0; i + 1 < perm.size() && ok; ++i) ok = g.has_edge(perm[i], perm[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  // Union-find.
  std::vector<Vertex> parent(static_cast<std::size_t>(g.n()));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](Vertex x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& e : g.edges()) parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
  for (Vertex v = 1; v < g.n(); ++v) {
    if (find(v) != find(0)) return false;
  }
  return true;
}

inline double binomial_coefficient(int n, int r) {
  double c = 1.0;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

/// E[m_r] by linearity: kn * P(a fixed color appears exactly r times).
inline double expected_m_r(int k, int n, int draws, int r) {
  const double q = 1.0 / (static_cast<double>(k) * n);
  double pr = binomial_coefficient(draws, r);
  for (int i = 0; i < r; ++i) pr *= q;
  for (int i = 0; i < draws - r; ++i) pr *= 1.0 - q;
  return k * n * pr;
}

}  // namespace oracle
