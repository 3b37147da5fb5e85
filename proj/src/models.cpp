#include "rainbow/models.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace rainbow {

namespace {

Graph from_edge_list(Vertex n, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, std::move(edges));
}

void check_probability(double p, const char* who) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError(std::string(who) + ": p must lie in [0, 1]");
}

}  // namespace

Orientation random_orientation(const Graph& g, Rng& rng) {
  std::vector<bool> forward(g.edge_count());
  for (std::size_t e = 0; e < forward.size(); ++e) forward[e] = rng.coin();
  return Orientation(g, forward);
}

Graph sample_gnp(const Graph& g, double p, Seed seed) {
  check_probability(p, "sample_gnp");
  Rng rng(seed, "gnp-keep");
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (rng.bernoulli(p)) kept.push_back(e);
  }
  return Graph(g.n(), std::move(kept));
}

ColoredGraph sample_colored(const Graph& g, double p, Color palette, Seed seed) {
  if (palette < 1) throw ParameterError("sample_colored: palette must be at least 1");
  Graph kept = sample_gnp(g, p, seed);
  Rng rng(seed, "gnp-color");
  std::vector<Color> colors(kept.edge_count());
  for (auto& c : colors) c = static_cast<Color>(rng.below(static_cast<std::uint64_t>(palette))) + 1;
  return ColoredGraph(std::move(kept), std::move(colors), palette);
}

KOutSample sample_kout(const Graph& g, int k, Seed seed) {
  if (k < 0) throw ParameterError("sample_kout: k must be non-negative");
  if (k > min_degree(g)) throw ParameterError("sample_kout: k exceeds the minimum degree");
  Rng rng(seed, "kout-pick");
  KOutSample out;
  out.chosen.resize(static_cast<std::size_t>(g.n()));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.n()) * static_cast<std::size_t>(k));
  std::vector<Vertex> scratch;
  for (Vertex x = 0; x < g.n(); ++x) {
    const auto nbrs = g.neighbors(x);
    scratch.assign(nbrs.begin(), nbrs.end());
    rng.partial_shuffle(std::span<Vertex>(scratch), static_cast<std::size_t>(k));
    auto& picks = out.chosen[static_cast<std::size_t>(x)];
    picks.assign(scratch.begin(), scratch.begin() + k);
    for (const Vertex y : picks) edges.push_back(Edge::make(x, y));
  }
  out.result = from_edge_list(g.n(), std::move(edges));
  return out;
}

KOutSample sample_kout_star(const Graph& g, int k, Seed seed) {
  if (k < 1) throw ParameterError("sample_kout_star: k must be positive");
  Rng orient_rng(seed, "star-orient");
  Rng pick_rng(seed, "star-pick");
  KOutSample out;
  out.orientation = random_orientation(g, orient_rng);
  out.chosen.resize(static_cast<std::size_t>(g.n()));
  std::vector<Edge> edges;
  std::vector<Vertex> scratch;
  for (Vertex x = 0; x < g.n(); ++x) {
    const auto outs = out.orientation->out_neighbors(x);
    scratch.assign(outs.begin(), outs.end());
    const auto take = std::min<std::size_t>(static_cast<std::size_t>(k), scratch.size());
    pick_rng.partial_shuffle(std::span<Vertex>(scratch), take);
    auto& picks = out.chosen[static_cast<std::size_t>(x)];
    picks.assign(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(take));
    for (const Vertex y : picks) edges.push_back(Edge::make(x, y));
  }
  // Every edge has exactly one owner, so the picks never collide.
  out.result = Graph(g.n(), std::move(edges));
  return out;
}

Graph sample_kout_hat(const Graph& g, int k, Seed seed) {
  if (k < 1) throw ParameterError("sample_kout_hat: k must be positive");
  Rng sigma_rng(seed, "hat-sigma");
  Rng pick_rng(seed, "hat-pick");
  const auto sigma = sigma_rng.permutation(g.n());
  std::vector<char> claimed(g.edge_count(), 0);
  std::vector<EdgeId> picked;
  std::vector<EdgeId> unclaimed;
  for (const Vertex x : sigma) {
    unclaimed.clear();
    for (const EdgeId id : g.incident(x)) {
      if (!claimed[static_cast<std::size_t>(id)]) unclaimed.push_back(id);
    }
    // Fewer than k unclaimed edges: take them all, possibly none.
    const auto take = std::min<std::size_t>(static_cast<std::size_t>(k), unclaimed.size());
    pick_rng.partial_shuffle(std::span<EdgeId>(unclaimed), take);
    for (std::size_t i = 0; i < take; ++i) {
      claimed[static_cast<std::size_t>(unclaimed[i])] = 1;
      picked.push_back(unclaimed[i]);
    }
  }
  std::sort(picked.begin(), picked.end());
  return g.subgraph(picked);
}

CouplingOutcome sample_coupled(const Graph& g, int k, Seed seed) {
  if (k < 1) throw ParameterError("sample_coupled: k must be positive");
  enum : std::uint8_t { kUndecided = 0, kForward = 1, kBackward = 2 };

  Rng sigma_rng(seed, "coupled-sigma");
  Rng pi_rng(seed, "coupled-pi");
  Rng completion_rng(seed, "coupled-complete");
  const Seed coin_seed = derive_seed(seed, "coupled-coins");
  const auto n = static_cast<std::uint64_t>(g.n());
  // X_xy for the ordered pair (x, y); each coin is replayable on its own.
  const auto coin = [&](Vertex x, Vertex y) {
    return (mix64(coin_seed ^ mix64(static_cast<std::uint64_t>(x) * n + static_cast<std::uint64_t>(y))) >> 63) != 0;
  };

  std::vector<std::uint8_t> dir(g.edge_count(), kUndecided);
  const auto points_out_of = [&](EdgeId id, Vertex x) {
    const auto& e = g.edge(id);
    return dir[static_cast<std::size_t>(id)] == (e.u == x ? kForward : kBackward);
  };
  const auto orient_out_of = [&](EdgeId id, Vertex x) {
    const auto& e = g.edge(id);
    dir[static_cast<std::size_t>(id)] = e.u == x ? kForward : kBackward;
  };

  CouplingOutcome out;
  out.claimed.resize(static_cast<std::size_t>(g.n()));
  std::vector<EdgeId> claimed_ids;
  const auto sigma = sigma_rng.permutation(g.n());

  struct Candidate {
    Vertex y;
    EdgeId id;
  };
  std::vector<Candidate> open;  // N°(x) at the time x is processed
  for (const Vertex x : sigma) {
    open.clear();
    const auto nbrs = g.neighbors(x);
    const auto ids = g.incident(x);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (dir[static_cast<std::size_t>(ids[i])] == kUndecided || points_out_of(ids[i], x)) {
        open.push_back({nbrs[i], ids[i]});
      }
    }
    pi_rng.shuffle(open);  // pi_x
    auto& held = out.claimed[static_cast<std::size_t>(x)];
    for (std::size_t j = 0; j < open.size() && static_cast<int>(held.size()) < k; ++j) {
      const auto [y, id] = open[j];
      if (dir[static_cast<std::size_t>(id)] != kUndecided) {
        // Already oriented x -> y by an earlier refusal of y.
        held.push_back(y);
        claimed_ids.push_back(id);
      } else if (coin(x, y)) {
        orient_out_of(id, x);
        held.push_back(y);
        claimed_ids.push_back(id);
      } else {
        orient_out_of(id, y);
      }
    }
  }

  std::vector<bool> forward(g.edge_count());
  for (std::size_t e = 0; e < forward.size(); ++e) {
    if (dir[e] == kUndecided) dir[e] = completion_rng.coin() ? kForward : kBackward;
    forward[e] = dir[e] == kForward;
  }
  out.orientation = Orientation(g, forward);

  std::sort(claimed_ids.begin(), claimed_ids.end());
  out.h_star = g.subgraph(claimed_ids);
  out.agreed = true;
  for (Vertex x = 0; x < g.n(); ++x) {
    [[maybe_unused]] const int held = static_cast<int>(out.claimed[static_cast<std::size_t>(x)].size());
    assert(held == std::min(k, out.orientation.out_degree(x)));
    if (out.orientation.out_degree(x) < k) out.agreed = false;
  }
  if (out.agreed) out.h_hat = out.h_star;
  return out;
}

BipartiteGraph sample_left_kout(Vertex left_size, Vertex right_size, int k, Seed seed) {
  if (k < 0 || k > right_size) throw ParameterError("sample_left_kout: need 0 <= k <= right_size");
  Rng rng(seed, "left-kout");
  std::vector<BipartiteGraph::Pair> edges;
  edges.reserve(static_cast<std::size_t>(left_size) * static_cast<std::size_t>(k));
  std::vector<Vertex> right(static_cast<std::size_t>(right_size));
  for (Vertex x = 0; x < left_size; ++x) {
    for (Vertex y = 0; y < right_size; ++y) right[static_cast<std::size_t>(y)] = y;
    rng.partial_shuffle(std::span<Vertex>(right), static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) edges.push_back({x, right[static_cast<std::size_t>(i)]});
  }
  return BipartiteGraph(left_size, right_size, std::move(edges));
}

BipartiteGraph sample_bipartite_gnp(Vertex left_size, Vertex right_size, double p, Seed seed) {
  check_probability(p, "sample_bipartite_gnp");
  Rng rng(seed, "bipartite-gnp");
  std::vector<BipartiteGraph::Pair> edges;
  for (Vertex x = 0; x < left_size; ++x) {
    for (Vertex y = 0; y < right_size; ++y) {
      if (rng.bernoulli(p)) edges.push_back({x, y});
    }
  }
  return BipartiteGraph(left_size, right_size, std::move(edges));
}

}  // namespace rainbow
