#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

using Pair = BipartiteGraph::Pair;

/// A set of vertex-disjoint (left, right) edges.
struct Matching {
  std::vector<Pair> pairs;

  std::size_t size() const { return pairs.size(); }
};

/// n vertex-disjoint k-stars centred on the left part; stars[x] holds the
/// right leaves of x in ascending order.
struct KMatching {
  std::vector<std::vector<Vertex>> stars;
};

bool is_valid_matching(const Matching& m, const BipartiteGraph& host);
bool is_perfect_matching(const Matching& m, const BipartiteGraph& host);
bool is_valid_k_matching(const KMatching& m, const BipartiteGraph& host, int k);

/// Maximum-cardinality matching (Hopcroft-Karp). Deterministic.
Matching max_matching(const BipartiteGraph& b);

struct GaleRyserResult {
  bool holds = true;
  /// Smallest |X| + |Y| violating e(X,Y) >= r(|X| + |Y| - n), when !holds.
  std::vector<Vertex> witness_left;
  std::vector<Vertex> witness_right;
};

/// Largest part size accepted by gale_ryser_check.
inline constexpr Vertex kGaleRyserMaxN = 22;

/// Exact r-factor criterion for equal parts. Enumerates every X and takes
/// the worst Y greedily (right vertices with fewest neighbors in X first),
/// so the cost is 2^n * n. Throws ParameterError for unequal parts or
/// n > kGaleRyserMaxN.
GaleRyserResult gale_ryser_check(const BipartiteGraph& b, int r);

/// Spanning r-regular subgraph via max-flow, or nullopt when none exists.
/// Throws ParameterError for unequal parts.
std::optional<BipartiteGraph> find_r_factor(const BipartiteGraph& b, int r);

/// Splits an r-regular bipartite graph with equal parts into r pairwise
/// edge-disjoint perfect matchings covering every edge.
/// Throws ParameterError when b is not regular or the parts differ.
std::vector<Matching> decompose_regular(const BipartiteGraph& b);

struct MatchingFamily {
  std::vector<Matching> matchings;  // pairwise edge-disjoint, all perfect
  int target = 0;
  bool success() const { return static_cast<int>(matchings.size()) >= target; }
  int achieved() const { return static_cast<int>(matchings.size()); }
};

/// Largest family (up to `target`) of edge-disjoint perfect matchings
/// obtained from an r-factor, with r found by binary search.
MatchingFamily many_matchings(const BipartiteGraph& b, int target);

struct KMatchingFamily {
  std::vector<KMatching> k_matchings;  // pairwise edge-disjoint
  int target = 0;
  bool success() const { return static_cast<int>(k_matchings.size()) >= target; }
  int achieved() const { return static_cast<int>(k_matchings.size()); }
};

/// Edge-disjoint perfect k-matchings of a graph with right size k * left
/// size. The right part is split into k consecutive blocks of size n; each
/// block-induced subgraph contributes a family of perfect matchings and the
/// j-th matchings of all blocks together form the j-th k-matching.
/// Throws ParameterError when the sizes do not match or some left vertex
/// has degree below `min_left_degree`.
KMatchingFamily k_matchings_from_left_kout(const BipartiteGraph& b, int k, int min_left_degree,
                                           double eps);

/// As above with an explicit target count instead of ceil((1 - eps) s / k).
KMatchingFamily k_matchings_with_target(const BipartiteGraph& b, int k, int target);

/// Maximum family (up to `target`) of edge-disjoint perfect k-matchings,
/// with no partition of the right side: finds the largest s such that some
/// subgraph has left degrees k*s and right degrees s (max-flow), splits
/// every left vertex into k copies of degree s and decomposes the
/// resulting s-regular graph into perfect matchings.
KMatchingFamily k_matchings_biregular(const BipartiteGraph& b, int k, int target);

/// |X||Y| - n(|X| + |Y| - n), which equals (n - |X|)(n - |Y|).
constexpr long long gale_ryser_slack(long long n, long long x, long long y) {
  return x * y - n * (x + y - n);
}

}  // namespace rainbow
