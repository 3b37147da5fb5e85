#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/matching.hpp"

namespace rainbow {

enum class Method { kExact, kHeuristic };

/// Hamiltonicity can stay undecided when the heuristic gives up on a
/// graph too large for exhaustive search.
enum class Outcome { kFalse, kTrue, kUnknown };

struct CycleWitness {
  std::vector<Vertex> cycle;  // each vertex once; closing edge implied
};

struct RepeatedColor {
  Color color = 0;
  Edge first;
  Edge second;
};

struct SharedEdge {
  Edge edge;
  std::size_t first_part = 0;
  std::size_t second_part = 0;
};

struct Obstruction {
  std::string reason;
};

using Witness = std::variant<std::monostate, Matching, KMatching, CycleWitness, RepeatedColor, SharedEdge, Obstruction>;

struct PropertyVerdict {
  std::string property;
  Outcome outcome = Outcome::kFalse;
  Witness witness;
  Method method = Method::kExact;
  std::uint64_t budget_spent = 0;

  bool holds() const { return outcome == Outcome::kTrue; }
};

std::string to_string(Outcome o);
std::string to_string(Method m);
std::string describe_witness(const Witness& w);

/// Throws ParameterError for unequal parts.
PropertyVerdict has_perfect_matching(const BipartiteGraph& b);

/// Throws ParameterError unless right size >= k * left size.
PropertyVerdict has_k_matching(const BipartiteGraph& b, int k);

struct HamiltonBudget {
  /// Rotation steps for the heuristic; 0 means 50 n^2.
  std::uint64_t rotations = 0;
  /// Largest n handled by the exact search.
  Vertex exact_limit = 16;
  /// Independent restarts of the heuristic.
  int restarts = 4;
};

/// Staged: necessary conditions, rotation-extension heuristic, then exact
/// search for small n. Never reports kFalse unless proven.
PropertyVerdict is_hamiltonian(const Graph& g, HamiltonBudget budget = {});

/// Exact subset dynamic program; n must be at most 20.
PropertyVerdict hamiltonian_exact(const Graph& g);

/// Rotation-extension search only; returns kTrue or kUnknown.
PropertyVerdict hamiltonian_heuristic(const Graph& g, std::uint64_t rotations, std::uint64_t seed = 0);

bool is_valid_hamilton_cycle(const Graph& g, const std::vector<Vertex>& cycle);

/// Edge ids refer to cg.graph(). An empty subset is rainbow.
PropertyVerdict is_rainbow(const ColoredGraph& cg, std::span<const EdgeId> subset);
PropertyVerdict is_rainbow(const ColoredGraph& cg);

PropertyVerdict are_edge_disjoint(std::span<const Graph> parts);

PropertyVerdict is_connected(const Graph& g);

}  // namespace rainbow
