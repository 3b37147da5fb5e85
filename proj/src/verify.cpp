#include "rainbow/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

#include "rainbow/flow.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

namespace {

PropertyVerdict verdict(std::string name, bool holds, Witness w = {}, Method m = Method::kExact) {
  PropertyVerdict v;
  v.property = std::move(name);
  v.outcome = holds ? Outcome::kTrue : Outcome::kFalse;
  v.witness = std::move(w);
  v.method = m;
  return v;
}

std::string edge_str(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kTrue:
      return "true";
    case Outcome::kFalse:
      return "false";
    case Outcome::kUnknown:
      return "unknown";
  }
  return "?";
}

std::string to_string(Method m) { return m == Method::kExact ? "exact" : "heuristic"; }

std::string describe_witness(const Witness& w) {
  std::ostringstream out;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          out << "none";
        } else if constexpr (std::is_same_v<T, Matching>) {
          out << "matching";
          for (const auto& [l, r] : x.pairs) out << " " << l << "-" << r;
        } else if constexpr (std::is_same_v<T, KMatching>) {
          out << "k-matching";
          for (std::size_t c = 0; c < x.stars.size(); ++c) {
            out << " " << c << ":";
            for (std::size_t i = 0; i < x.stars[c].size(); ++i) out << (i ? "," : "") << x.stars[c][i];
          }
        } else if constexpr (std::is_same_v<T, CycleWitness>) {
          out << "cycle";
          for (const Vertex v : x.cycle) out << " " << v;
        } else if constexpr (std::is_same_v<T, RepeatedColor>) {
          out << "color " << x.color << " on " << edge_str(x.first) << " and " << edge_str(x.second);
        } else if constexpr (std::is_same_v<T, SharedEdge>) {
          out << "edge " << edge_str(x.edge) << " in parts " << x.first_part << " and " << x.second_part;
        } else {
          out << x.reason;
        }
      },
      w);
  return out.str();
}

PropertyVerdict has_perfect_matching(const BipartiteGraph& b) {
  if (b.left_size() != b.right_size()) throw ParameterError("has_perfect_matching: parts must have equal size");
  auto m = max_matching(b);
  if (static_cast<Vertex>(m.size()) == b.left_size()) return verdict("perfect-matching", true, std::move(m));
  return verdict("perfect-matching", false, Obstruction{"maximum matching has size " + std::to_string(m.size())});
}

PropertyVerdict has_k_matching(const BipartiteGraph& b, int k) {
  if (k < 1) throw ParameterError("has_k_matching: k must be positive");
  const Vertex a = b.left_size();
  if (b.right_size() < static_cast<Vertex>(k) * a) throw ParameterError("has_k_matching: right part smaller than k * left");
  const int source = a + b.right_size();
  const int sink = source + 1;
  FlowNetwork net(sink + 1);
  for (Vertex x = 0; x < a; ++x) net.add_arc(source, x, k);
  for (Vertex y = 0; y < b.right_size(); ++y) net.add_arc(a + y, sink, 1);
  std::vector<int> arcs;
  for (const auto& e : b.edges()) arcs.push_back(net.add_arc(e.left, a + e.right, 1));
  const auto flow = net.max_flow(source, sink);
  if (flow != static_cast<std::int64_t>(k) * a) {
    return verdict("k-matching", false, Obstruction{"max flow " + std::to_string(flow) + " < k|L|"});
  }
  KMatching km;
  km.stars.assign(static_cast<std::size_t>(a), {});
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (net.flow_on(arcs[i]) == 1) km.stars[static_cast<std::size_t>(b.edges()[i].left)].push_back(b.edges()[i].right);
  }
  for (auto& star : km.stars) std::sort(star.begin(), star.end());
  return verdict("k-matching", true, std::move(km));
}

bool is_valid_hamilton_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  if (g.n() < 3 || static_cast<Vertex>(cycle.size()) != g.n()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex v = cycle[i];
    if (v < 0 || v >= g.n() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
    if (!g.has_edge(v, cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

PropertyVerdict hamiltonian_exact(const Graph& g) {
  const Vertex n = g.n();
  if (n > 20) throw ParameterError("hamiltonian_exact: n must be at most 20");
  if (n < 3) return verdict("hamiltonian", false, Obstruction{"fewer than 3 vertices"});
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= 1u << e.v;
    adj[static_cast<std::size_t>(e.v)] |= 1u << e.u;
  }
  // ends[mask]: vertices v such that some path from 0 covers mask and ends at v.
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  ends[1] = 1;
  for (std::uint32_t mask = 1; mask <= full; mask += 2) {
    const std::uint32_t here = ends[mask];
    if (!here) continue;
    for (Vertex v = 0; v < n; ++v) {
      if (!(here >> v & 1u)) continue;
      std::uint32_t nxt = adj[static_cast<std::size_t>(v)] & ~mask;
      while (nxt) {
        const int w = std::countr_zero(nxt);
        nxt &= nxt - 1;
        ends[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  std::uint32_t closing = ends[full] & adj[0];
  PropertyVerdict v = verdict("hamiltonian", false, Obstruction{"exhaustive search found no cycle"});
  v.budget_spent = std::uint64_t{1} << n;
  if (!closing) return v;
  std::vector<Vertex> cycle;
  std::uint32_t mask = full;
  Vertex cur = std::countr_zero(closing);
  while (true) {
    cycle.push_back(cur);
    if (cur == 0) break;
    const std::uint32_t rest = mask & ~(1u << cur);
    const std::uint32_t prev = ends[rest] & adj[static_cast<std::size_t>(cur)];
    mask = rest;
    cur = std::countr_zero(prev);
  }
  std::reverse(cycle.begin(), cycle.end());
  v.outcome = Outcome::kTrue;
  v.witness = CycleWitness{std::move(cycle)};
  return v;
}

PropertyVerdict hamiltonian_heuristic(const Graph& g, std::uint64_t rotations, std::uint64_t seed) {
  const Vertex n = g.n();
  PropertyVerdict v = verdict("hamiltonian", false, {}, Method::kHeuristic);
  v.outcome = Outcome::kUnknown;
  if (n < 3) return v;
  Rng rng(seed);
  std::vector<Vertex> path;
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> scratch;
  const auto place = [&](Vertex x) {
    pos[static_cast<std::size_t>(x)] = static_cast<int>(path.size());
    path.push_back(x);
  };
  // Reverse path[from..end] so that path[from] becomes the endpoint.
  const auto reverse_tail = [&](std::size_t from) {
    std::reverse(path.begin() + static_cast<std::ptrdiff_t>(from), path.end());
    for (std::size_t i = from; i < path.size(); ++i) pos[static_cast<std::size_t>(path[i])] = static_cast<int>(i);
  };
  place(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))));

  std::uint64_t spent = 0;
  while (spent < rotations) {
    const Vertex end = path.back();
    const auto nbrs = g.neighbors(end);
    // Extension.
    scratch.clear();
    for (const Vertex w : nbrs) {
      if (pos[static_cast<std::size_t>(w)] < 0) scratch.push_back(w);
    }
    if (!scratch.empty()) {
      place(scratch[rng.below(scratch.size())]);
      continue;
    }
    if (g.has_edge(end, path.front())) {
      if (static_cast<Vertex>(path.size()) == n) {
        v.outcome = Outcome::kTrue;
        v.witness = CycleWitness{path};
        break;
      }
      // Cycle on the path: open it next to a vertex with an outside neighbor.
      bool opened = false;
      for (std::size_t i = 0; i < path.size() && !opened; ++i) {
        for (const Vertex w : g.neighbors(path[i])) {
          if (pos[static_cast<std::size_t>(w)] >= 0) continue;
          std::rotate(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(i) + 1, path.end());
          for (std::size_t j = 0; j < path.size(); ++j) pos[static_cast<std::size_t>(path[j])] = static_cast<int>(j);
          place(w);
          opened = true;
          break;
        }
      }
      ++spent;
      if (opened) continue;
      break;  // a component without a spanning path outside; give up
    }
    // Rotation about a random path neighbor other than the predecessor.
    scratch.clear();
    const Vertex pred = path.size() >= 2 ? path[path.size() - 2] : -1;
    for (const Vertex w : nbrs) {
      if (w != pred && pos[static_cast<std::size_t>(w)] >= 0) scratch.push_back(w);
    }
    ++spent;
    if (scratch.empty()) {
      // Endpoint is stuck; continue from the other end.
      std::reverse(path.begin(), path.end());
      for (std::size_t j = 0; j < path.size(); ++j) pos[static_cast<std::size_t>(path[j])] = static_cast<int>(j);
      continue;
    }
    const Vertex pivot = scratch[rng.below(scratch.size())];
    reverse_tail(static_cast<std::size_t>(pos[static_cast<std::size_t>(pivot)]) + 1);
  }
  v.budget_spent = spent;
  return v;
}

PropertyVerdict is_connected(const Graph& g) {
  const Vertex n = g.n();
  if (n <= 1) return verdict("connected", true);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  Vertex reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (const Vertex y : g.neighbors(x)) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached == n) return verdict("connected", true);
  const auto missing = static_cast<Vertex>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
  return verdict("connected", false, Obstruction{"vertex " + std::to_string(missing) + " unreachable from 0"});
}

PropertyVerdict is_hamiltonian(const Graph& g, HamiltonBudget budget) {
  const Vertex n = g.n();
  if (n < 3) return verdict("hamiltonian", false, Obstruction{"fewer than 3 vertices"});
  for (Vertex x = 0; x < n; ++x) {
    if (g.degree(x) < 2) {
      return verdict("hamiltonian", false,
                     Obstruction{"vertex " + std::to_string(x) + " has degree " + std::to_string(g.degree(x))});
    }
  }
  if (!is_connected(g).holds()) return verdict("hamiltonian", false, Obstruction{"graph is disconnected"});

  const std::uint64_t total =
      budget.rotations ? budget.rotations : 50ULL * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  const int restarts = std::max(1, budget.restarts);
  std::uint64_t spent = 0;
  for (int attempt = 0; attempt < restarts; ++attempt) {
    auto v = hamiltonian_heuristic(g, total / static_cast<std::uint64_t>(restarts),
                                   mix64(static_cast<std::uint64_t>(attempt) + 0x5eed));
    spent += v.budget_spent;
    if (v.holds()) {
      v.budget_spent = spent;
      return v;
    }
  }
  if (n <= std::min<Vertex>(budget.exact_limit, 20)) {
    auto v = hamiltonian_exact(g);
    v.budget_spent += spent;
    return v;
  }
  PropertyVerdict v = verdict("hamiltonian", false, {}, Method::kHeuristic);
  v.outcome = Outcome::kUnknown;
  v.budget_spent = spent;
  return v;
}

PropertyVerdict is_rainbow(const ColoredGraph& cg, std::span<const EdgeId> subset) {
  std::map<Color, EdgeId> seen;
  for (const EdgeId id : subset) {
    if (id < 0 || static_cast<std::size_t>(id) >= cg.graph().edge_count()) {
      throw ParameterError("is_rainbow: edge id out of range");
    }
    const auto [it, inserted] = seen.emplace(cg.color(id), id);
    if (!inserted) {
      return verdict("rainbow", false, RepeatedColor{cg.color(id), cg.graph().edge(it->second), cg.graph().edge(id)});
    }
  }
  return verdict("rainbow", true);
}

PropertyVerdict is_rainbow(const ColoredGraph& cg) {
  std::vector<EdgeId> all(cg.graph().edge_count());
  std::iota(all.begin(), all.end(), 0);
  return is_rainbow(cg, all);
}

PropertyVerdict are_edge_disjoint(std::span<const Graph> parts) {
  std::map<Edge, std::size_t> owner;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& e : parts[i].edges()) {
      const auto [it, inserted] = owner.emplace(e, i);
      if (!inserted) return verdict("edge-disjoint", false, SharedEdge{e, it->second, i});
    }
  }
  return verdict("edge-disjoint", true);
}

}  // namespace rainbow
