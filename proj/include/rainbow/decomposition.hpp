#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

/// The color multiset C_x of one vertex, in its current order.
struct ColorMultiset {
  Vertex owner = 0;
  std::vector<Color> entries;

  /// m_r^x: number of colors occurring exactly r times.
  int count_with_multiplicity(int r) const;
  /// C_x^r in ascending order.
  std::vector<Color> colors_with_multiplicity(int r) const;
};

/// Steps I-IV: orientation, kept out-degrees, color multisets and the
/// random injections sigma_x.
struct Skeleton {
  Orientation orientation;
  std::vector<int> kept_out_degree;  // D_H(x)
  int s = 0;
  Color palette = 0;
  std::vector<ColorMultiset> multisets;
  /// sigma_x(1..D_H(x)) as out-neighbors of x.
  std::vector<std::vector<Vertex>> injection;
  std::optional<std::string> failure_reason;
};

/// s = floor((1 - eps/4) delta p / 2).
int decomposition_s(int min_degree, double p, double eps);

Skeleton draw_skeleton(const Graph& g, double p, int k, double eps, Seed seed);

struct PlanDiagnostics {
  int r0 = 0;
  double alpha = 0.0;
  std::vector<double> mu;   // index r, 1..r0 (index 0 unused)
  std::vector<int> d;       // d_r
  std::vector<int> s;       // s_r, target number of k-matchings in B_r
  std::vector<int> achieved;
  std::vector<int> min_m;   // min over x of m_r^x
};

struct OrderingPlan {
  int k = 0;
  int t = 0;
  Color palette = 0;
  /// Full ordering c_1^x..c_s^x of every multiset.
  std::vector<std::vector<Color>> orderings;
};

struct PlanOutcome {
  std::optional<OrderingPlan> plan;
  PlanDiagnostics diagnostics;
  std::optional<std::string> failure_reason;
};

/// B_1..B_{r0}: left part = owners, right part = colors (color c at index
/// c - 1); (x, c) is an edge of B_r iff c has multiplicity exactly r in C_x.
std::vector<BipartiteGraph> build_multiplicity_graphs(const std::vector<ColorMultiset>& multisets,
                                                      Color palette, int r0);

/// Orders every multiset so that the first t positions split into k-blocks
/// that are full palettes across all vertices. All multisets must have the
/// same size; palette is k times their number.
PlanOutcome plan_ordering(const std::vector<ColorMultiset>& multisets, int k, double eps, Seed seed);

/// True iff every k-block among the first t positions holds kn distinct colors.
bool blocks_are_palettes(const std::vector<std::vector<Color>>& orderings, int k, int t, Color palette);

struct DecompositionDiagnostics {
  int s = 0;
  std::vector<int> kept_out_degree;
  PlanDiagnostics plan;
};

struct DecompositionResult {
  ColoredGraph h;
  std::vector<Graph> parts;  // H_1..H_t
  Graph remainder;           // H_0
  Orientation orientation;
  int k = 0;
  int t_achieved = 0;
  /// Color order of every vertex; the first t_achieved positions are blocks.
  std::vector<std::vector<Color>> orderings;
  std::optional<std::string> failure_reason;
  DecompositionDiagnostics diagnostics;

  bool success() const { return !failure_reason.has_value(); }
};

/// Steps V-VI plus carving. Position i of x carries color orderings[x][i]
/// for i < s and a fresh uniform color afterwards. When the step III
/// check failed, the drawn order of C_x is used and no parts are formed.
DecompositionResult assemble_decomposition(const Graph& g, const Skeleton& sk,
                                           std::vector<std::vector<Color>> orderings, int k, int t,
                                           Seed seed);

/// The whole procedure. h is always produced and is distributed as
/// G_{kn}(g, p) whether or not the decomposition succeeds.
DecompositionResult decompose(const Graph& g, double p, int k, double eps, Seed seed);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct DecompositionReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// Checks: disjoint, union, rainbow, out-degree, blocks.
DecompositionReport verify_decomposition(const DecompositionResult& res);

}  // namespace rainbow
