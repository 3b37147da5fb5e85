#pragma once

#include <optional>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

/// Outcome of a k-out style sampler: the deoriented graph together with
/// each vertex's picks (the digraph before orientations are dropped).
struct KOutSample {
  Graph result;
  std::vector<std::vector<Vertex>> chosen;
  /// The sampled orientation, present for the star model only.
  std::optional<Orientation> orientation;
};

/// Joint sample from the coupling between the hat model and the star model.
struct CouplingOutcome {
  Graph h_star;
  /// Equal to h_star when the coupling succeeded.
  std::optional<Graph> h_hat;
  /// True iff every vertex has out-degree at least k in `orientation`.
  bool agreed = false;
  Orientation orientation;
  /// Per-vertex claimed neighbors, in claim order.
  std::vector<std::vector<Vertex>> claimed;
};

/// Keep every edge of g independently with probability p.
Graph sample_gnp(const Graph& g, double p, Seed seed);

/// sample_gnp followed by i.i.d. uniform colors from [1, palette].
ColoredGraph sample_colored(const Graph& g, double p, Color palette, Seed seed);

/// Plain k-out: every vertex picks a uniform k-subset of its neighbors.
/// Throws ParameterError when k exceeds the minimum degree.
KOutSample sample_kout(const Graph& g, int k, Seed seed);

/// Star model: uniform orientation, then every vertex picks min(k, d+)
/// of its out-edges uniformly at random.
KOutSample sample_kout_star(const Graph& g, int k, Seed seed);

/// Hat model: vertices in uniformly random order each claim
/// min(k, #unclaimed incident edges) uniformly chosen unclaimed edges.
Graph sample_kout_hat(const Graph& g, int k, Seed seed);

/// The coupling procedure: vertices in random order sigma walk a random
/// ordering of N°(x), orienting undecided edges with fair coins X_xy and
/// claiming out-edges until k are held or N°(x) is exhausted. Undecided
/// edges are finally oriented by independent fair coins.
CouplingOutcome sample_coupled(const Graph& g, int k, Seed seed);

/// Left k-out bipartite graph: every left vertex picks a uniform k-subset
/// of the right part. Throws ParameterError when k > right_size.
BipartiteGraph sample_left_kout(Vertex left_size, Vertex right_size, int k, Seed seed);

/// Binomial random bipartite graph on left_size x right_size.
BipartiteGraph sample_bipartite_gnp(Vertex left_size, Vertex right_size, double p, Seed seed);

/// Uniform orientation of every edge.
Orientation random_orientation(const Graph& g, Rng& rng);

}  // namespace rainbow
