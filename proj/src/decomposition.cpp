#include "rainbow/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "rainbow/bounds.hpp"
#include "rainbow/matching.hpp"
#include "rainbow/models.hpp"

namespace rainbow {

namespace {

// The parameters are reals in the analysis; a tiny slack keeps products
// such as 0.9 * 10 from rounding down to 8.
int floor_count(double x) { return static_cast<int>(std::floor(x + 1e-9)); }

std::string vertex_str(Vertex x) { return std::to_string(x); }

}  // namespace

int ColorMultiset::count_with_multiplicity(int r) const {
  return static_cast<int>(colors_with_multiplicity(r).size());
}

std::vector<Color> ColorMultiset::colors_with_multiplicity(int r) const {
  auto sorted = entries;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Color> out;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    if (static_cast<int>(j - i) == r) out.push_back(sorted[i]);
    i = j;
  }
  return out;
}

int decomposition_s(int min_degree, double p, double eps) {
  return floor_count((1.0 - eps / 4.0) * min_degree * p / 2.0);
}

Skeleton draw_skeleton(const Graph& g, double p, int k, double eps, Seed seed) {
  if (k < 2) throw ParameterError("decompose: k must be at least 2");
  if (!(p > 0.0 && p <= 1.0)) throw ParameterError("decompose: p must lie in (0, 1]");
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("decompose: eps must lie in (0, 1)");
  if (g.n() == 0 || min_degree(g) < 1) throw ParameterError("decompose: minimum degree must be at least 1");

  Skeleton sk;
  const auto n = static_cast<std::size_t>(g.n());
  Rng orient_rng(seed, "decompose-orient");
  sk.orientation = random_orientation(g, orient_rng);

  Rng keep_rng(seed, "decompose-keep");
  sk.kept_out_degree.resize(n);
  for (Vertex x = 0; x < g.n(); ++x) {
    sk.kept_out_degree[static_cast<std::size_t>(x)] = keep_rng.binomial(sk.orientation.out_degree(x), p);
  }

  sk.s = decomposition_s(min_degree(g), p, eps);
  sk.palette = static_cast<Color>(k) * g.n();
  Rng color_rng(seed, "decompose-colors");
  sk.multisets.resize(n);
  for (Vertex x = 0; x < g.n(); ++x) {
    auto& ms = sk.multisets[static_cast<std::size_t>(x)];
    ms.owner = x;
    ms.entries.resize(static_cast<std::size_t>(sk.s));
    for (auto& c : ms.entries) c = static_cast<Color>(color_rng.below(static_cast<std::uint64_t>(sk.palette))) + 1;
  }

  Rng injection_rng(seed, "decompose-injection");
  sk.injection.resize(n);
  for (Vertex x = 0; x < g.n(); ++x) {
    const auto outs = sk.orientation.out_neighbors(x);
    auto& sigma = sk.injection[static_cast<std::size_t>(x)];
    sigma.assign(outs.begin(), outs.end());
    const auto keep = static_cast<std::size_t>(sk.kept_out_degree[static_cast<std::size_t>(x)]);
    injection_rng.partial_shuffle(std::span<Vertex>(sigma), keep);
    sigma.resize(keep);
  }

  for (Vertex x = 0; x < g.n(); ++x) {
    if (sk.s > sk.kept_out_degree[static_cast<std::size_t>(x)]) {
      sk.failure_reason = "step III: s = " + std::to_string(sk.s) + " exceeds D_H(x) = " +
                          std::to_string(sk.kept_out_degree[static_cast<std::size_t>(x)]) + " at vertex " +
                          vertex_str(x);
      break;
    }
  }
  return sk;
}

std::vector<BipartiteGraph> build_multiplicity_graphs(const std::vector<ColorMultiset>& multisets, Color palette,
                                                      int r0) {
  const auto n = static_cast<Vertex>(multisets.size());
  std::vector<std::vector<Pair>> edges(static_cast<std::size_t>(std::max(r0, 0)));
  for (Vertex x = 0; x < n; ++x) {
    auto sorted = multisets[static_cast<std::size_t>(x)].entries;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      const auto r = static_cast<int>(j - i);
      if (sorted[i] < 1 || sorted[i] > palette) throw ParameterError("build_multiplicity_graphs: color out of range");
      if (r <= r0) edges[static_cast<std::size_t>(r - 1)].push_back({x, sorted[i] - 1});
      i = j;
    }
  }
  std::vector<BipartiteGraph> out;
  out.reserve(edges.size());
  for (auto& list : edges) out.emplace_back(n, palette, std::move(list));
  return out;
}

bool blocks_are_palettes(const std::vector<std::vector<Color>>& orderings, int k, int t, Color palette) {
  if (k < 1 || t % k != 0) return false;
  if (static_cast<long long>(orderings.size()) * k != palette) return false;
  std::vector<char> seen(static_cast<std::size_t>(palette) + 1);
  for (int b = 0; b < t / k; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (const auto& order : orderings) {
      if (static_cast<int>(order.size()) < t) return false;
      for (int i = b * k; i < (b + 1) * k; ++i) {
        const Color c = order[static_cast<std::size_t>(i)];
        if (c < 1 || c > palette || seen[static_cast<std::size_t>(c)]) return false;
        seen[static_cast<std::size_t>(c)] = 1;
      }
    }
  }
  return true;
}

PlanOutcome plan_ordering(const std::vector<ColorMultiset>& multisets, int k, double eps, Seed seed) {
  if (k < 2) throw ParameterError("plan_ordering: k must be at least 2");
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("plan_ordering: eps must lie in (0, 1)");
  PlanOutcome out;
  const auto n = static_cast<int>(multisets.size());
  const int s = n == 0 ? 0 : static_cast<int>(multisets[0].entries.size());
  for (const auto& ms : multisets) {
    if (static_cast<int>(ms.entries.size()) != s) throw ParameterError("plan_ordering: multisets differ in size");
  }
  OrderingPlan plan;
  plan.k = k;
  plan.palette = static_cast<Color>(k) * n;
  if (s == 0) {
    plan.orderings.assign(static_cast<std::size_t>(n), {});
    out.plan = std::move(plan);
    return out;
  }

  const double e4 = eps / 4.0;
  auto& diag = out.diagnostics;
  diag.alpha = static_cast<double>(s) / n;
  // Small alpha: r_0 = 1 already captures enough of the mass.
  diag.r0 = compute_r0_for_alpha(e4, k, diag.alpha);
  const int r0 = diag.r0;
  const auto slots = static_cast<std::size_t>(r0) + 1;
  diag.mu.assign(slots, 0.0);
  diag.d.assign(slots, 0);
  diag.s.assign(slots, 0);
  diag.achieved.assign(slots, 0);
  diag.min_m.assign(slots, 0);

  const auto graphs = build_multiplicity_graphs(multisets, plan.palette, r0);
  std::vector<KMatchingFamily> families(slots);
  const Seed subsample_seed = derive_seed(seed, "plan-subsample");
  for (int r = 1; r <= r0; ++r) {
    const auto ri = static_cast<std::size_t>(r);
    const auto& b = graphs[ri - 1];
    diag.mu[ri] = r <= s ? expected_m_r(k, n, s, r) : 0.0;
    diag.d[ri] = floor_count((1.0 - e4) * diag.mu[ri]);
    diag.s[ri] = floor_count((1.0 - e4) * diag.d[ri] / k);
    Vertex worst = 0;
    diag.min_m[ri] = b.left_degree(0);
    for (Vertex x = 1; x < n; ++x) {
      if (b.left_degree(x) < diag.min_m[ri]) {
        diag.min_m[ri] = b.left_degree(x);
        worst = x;
      }
    }
    if (diag.d[ri] >= 1 && diag.min_m[ri] < diag.d[ri]) {
      out.failure_reason = "plan: m_" + std::to_string(r) + "^x = " + std::to_string(diag.min_m[ri]) +
                           " < d_" + std::to_string(r) + " = " + std::to_string(diag.d[ri]) + " at vertex " +
                           vertex_str(worst);
      return out;
    }
    if (diag.s[ri] < 1) continue;

    // B'_r: d_r random colors of each C_x^r, a left d_r-out graph.
    Rng rng(derive_seed(subsample_seed, static_cast<std::uint64_t>(r)));
    std::vector<Pair> sub;
    std::vector<Vertex> scratch;
    for (Vertex x = 0; x < n; ++x) {
      const auto nbrs = b.left_neighbors(x);
      scratch.assign(nbrs.begin(), nbrs.end());
      rng.partial_shuffle(std::span<Vertex>(scratch), static_cast<std::size_t>(diag.d[ri]));
      for (int i = 0; i < diag.d[ri]; ++i) sub.push_back({x, scratch[static_cast<std::size_t>(i)]});
    }
    const BipartiteGraph b_sub(n, plan.palette, std::move(sub));
    families[ri] = k_matchings_with_target(b_sub, k, diag.s[ri]);
    // The block split can fall short where the whole graph still has
    // enough k-matchings; any family of full-palette blocks will do.
    if (!families[ri].success()) families[ri] = k_matchings_biregular(b_sub, k, diag.s[ri]);
    diag.achieved[ri] = families[ri].achieved();
    if (!families[ri].success()) {
      out.failure_reason = "plan: B_" + std::to_string(r) + " gave " + std::to_string(diag.achieved[ri]) +
                           " of s_" + std::to_string(r) + " = " + std::to_string(diag.s[ri]) + " k-matchings";
      return out;
    }
  }

  for (int r = 1; r <= r0; ++r) plan.t += k * r * diag.s[static_cast<std::size_t>(r)];
  if (plan.t > s) throw std::logic_error("plan_ordering: t exceeds s");

  plan.orderings.resize(static_cast<std::size_t>(n));
  std::vector<int> remaining(static_cast<std::size_t>(plan.palette) + 1);
  for (Vertex x = 0; x < n; ++x) {
    auto& order = plan.orderings[static_cast<std::size_t>(x)];
    order.reserve(static_cast<std::size_t>(s));
    std::fill(remaining.begin(), remaining.end(), 0);
    for (const Color c : multisets[static_cast<std::size_t>(x)].entries) ++remaining[static_cast<std::size_t>(c)];
    for (int r = 1; r <= r0; ++r) {
      const auto ri = static_cast<std::size_t>(r);
      std::vector<Color> a;  // a_x^r, stars in ascending color order
      for (int j = 0; j < diag.s[ri]; ++j) {
        for (const Vertex y : families[ri].k_matchings[static_cast<std::size_t>(j)].stars[static_cast<std::size_t>(x)]) {
          a.push_back(y + 1);
        }
      }
      for (int copy = 0; copy < r; ++copy) order.insert(order.end(), a.begin(), a.end());
      for (const Color c : a) remaining[static_cast<std::size_t>(c)] -= r;
    }
    // C'_x, ascending.
    for (Color c = 1; c <= plan.palette; ++c) {
      const int left = remaining[static_cast<std::size_t>(c)];
      if (left < 0) throw std::logic_error("plan_ordering: prefix is not a sub-multiset of C_x");
      order.insert(order.end(), static_cast<std::size_t>(left), c);
    }
  }
  if (!blocks_are_palettes(plan.orderings, k, plan.t, plan.palette)) {
    throw std::logic_error("plan_ordering: a block is not a full palette");
  }
  out.plan = std::move(plan);
  return out;
}

DecompositionResult assemble_decomposition(const Graph& g, const Skeleton& sk,
                                           std::vector<std::vector<Color>> orderings, int k, int t, Seed seed) {
  if (orderings.size() != static_cast<std::size_t>(g.n())) throw ParameterError("assemble: one ordering per vertex");
  DecompositionResult res;
  res.k = k;
  res.t_achieved = t;
  res.orientation = sk.orientation;
  res.diagnostics.s = sk.s;
  res.diagnostics.kept_out_degree = sk.kept_out_degree;

  Rng extra_rng(seed, "decompose-extra-colors");
  std::vector<std::pair<Edge, Color>> colored;
  std::vector<Edge> rest;
  std::vector<std::vector<Edge>> parts(static_cast<std::size_t>(t > 0 ? t / k : 0));
  for (Vertex x = 0; x < g.n(); ++x) {
    const auto& sigma = sk.injection[static_cast<std::size_t>(x)];
    const auto& order = orderings[static_cast<std::size_t>(x)];
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      const Edge e = Edge::make(x, sigma[i]);
      const Color c = i < static_cast<std::size_t>(sk.s) && i < order.size()
                          ? order[i]
                          : static_cast<Color>(extra_rng.below(static_cast<std::uint64_t>(sk.palette))) + 1;
      colored.push_back({e, c});
      if (static_cast<int>(i) < t) {
        parts[i / static_cast<std::size_t>(k)].push_back(e);
      } else {
        rest.push_back(e);
      }
    }
  }
  std::sort(colored.begin(), colored.end());
  std::vector<Edge> h_edges;
  std::vector<Color> h_colors;
  h_edges.reserve(colored.size());
  h_colors.reserve(colored.size());
  for (const auto& [e, c] : colored) {
    h_edges.push_back(e);
    h_colors.push_back(c);
  }
  res.h = ColoredGraph(Graph(g.n(), std::move(h_edges)), std::move(h_colors), sk.palette);
  for (auto& part : parts) res.parts.emplace_back(g.n(), std::move(part));
  res.remainder = Graph(g.n(), std::move(rest));
  res.orderings = std::move(orderings);
  return res;
}

DecompositionResult decompose(const Graph& g, double p, int k, double eps, Seed seed) {
  const Skeleton sk = draw_skeleton(g, p, k, eps, seed);
  const Seed assemble_seed = derive_seed(seed, "decompose-assemble");
  const auto drawn_order = [&] {
    std::vector<std::vector<Color>> out;
    out.reserve(sk.multisets.size());
    for (const auto& ms : sk.multisets) out.push_back(ms.entries);
    return out;
  };
  if (sk.failure_reason) {
    auto res = assemble_decomposition(g, sk, drawn_order(), k, 0, assemble_seed);
    res.failure_reason = sk.failure_reason;
    return res;
  }
  auto outcome = plan_ordering(sk.multisets, k, eps, derive_seed(seed, "decompose-plan"));
  DecompositionResult res;
  if (outcome.plan) {
    res = assemble_decomposition(g, sk, std::move(outcome.plan->orderings), k, outcome.plan->t, assemble_seed);
  } else {
    res = assemble_decomposition(g, sk, drawn_order(), k, 0, assemble_seed);
    res.failure_reason = outcome.failure_reason;
  }
  res.diagnostics.plan = std::move(outcome.diagnostics);
  return res;
}

bool DecompositionReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* DecompositionReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

DecompositionReport verify_decomposition(const DecompositionResult& res) {
  DecompositionReport report;
  const auto edge_str = [](const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; };

  // Owner 0 is H_0, owner i >= 1 is H_i.
  CheckResult disjoint{"disjoint", true, ""};
  std::map<Edge, std::size_t> owner;
  const auto claim = [&](const Edge& e, std::size_t who) {
    const auto [it, inserted] = owner.emplace(e, who);
    if (!inserted && disjoint.passed) {
      disjoint.passed = false;
      disjoint.detail = "edge " + edge_str(e) + " in H_" + std::to_string(it->second) + " and H_" + std::to_string(who);
    }
  };
  for (const auto& e : res.remainder.edges()) claim(e, 0);
  for (std::size_t i = 0; i < res.parts.size(); ++i) {
    for (const auto& e : res.parts[i].edges()) claim(e, i + 1);
  }
  report.checks.push_back(disjoint);

  CheckResult cover{"union", true, ""};
  std::size_t total = res.remainder.edge_count();
  for (const auto& part : res.parts) total += part.edge_count();
  if (total != res.h.graph().edge_count()) {
    cover.passed = false;
    cover.detail = "|E(h)| = " + std::to_string(res.h.graph().edge_count()) + " but parts hold " + std::to_string(total);
  }
  for (const auto& e : res.h.graph().edges()) {
    if (cover.passed && !owner.contains(e)) {
      cover.passed = false;
      cover.detail = "edge " + edge_str(e) + " of h is in no part";
    }
  }
  for (const auto& [e, who] : owner) {
    if (cover.passed && !res.h.graph().has_edge(e.u, e.v)) {
      cover.passed = false;
      cover.detail = "edge " + edge_str(e) + " of H_" + std::to_string(who) + " is not in h";
    }
  }
  report.checks.push_back(cover);

  CheckResult rainbow{"rainbow", true, ""};
  for (std::size_t i = 0; i < res.parts.size() && rainbow.passed; ++i) {
    std::map<Color, Edge> seen;
    for (const auto& e : res.parts[i].edges()) {
      if (!res.h.graph().has_edge(e.u, e.v)) continue;  // reported by union
      const Color c = res.h.color_of(e.u, e.v);
      const auto [it, inserted] = seen.emplace(c, e);
      if (!inserted) {
        rainbow.passed = false;
        rainbow.detail = "color " + std::to_string(c) + " repeated in H_" + std::to_string(i + 1) + " on " +
                         edge_str(it->second) + " and " + edge_str(e);
        break;
      }
    }
  }
  report.checks.push_back(rainbow);

  CheckResult degrees{"out-degree", true, ""};
  const Vertex n = res.orientation.n();
  std::vector<int> out_deg(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < res.parts.size() && degrees.passed; ++i) {
    std::fill(out_deg.begin(), out_deg.end(), 0);
    for (const auto& e : res.parts[i].edges()) {
      const auto outs = res.orientation.out_neighbors(e.u);
      const Vertex tail = std::find(outs.begin(), outs.end(), e.v) != outs.end() ? e.u : e.v;
      ++out_deg[static_cast<std::size_t>(tail)];
    }
    for (Vertex x = 0; x < n; ++x) {
      const int want = std::min(res.k, res.orientation.out_degree(x));
      if (out_deg[static_cast<std::size_t>(x)] != want) {
        degrees.passed = false;
        degrees.detail = "vertex " + std::to_string(x) + " has out-degree " +
                         std::to_string(out_deg[static_cast<std::size_t>(x)]) + " in H_" + std::to_string(i + 1) +
                         ", expected " + std::to_string(want);
        break;
      }
    }
  }
  report.checks.push_back(degrees);

  CheckResult blocks{"blocks", true, ""};
  if (!blocks_are_palettes(res.orderings, res.k, res.t_achieved, res.h.palette())) {
    blocks.passed = false;
    blocks.detail = "some k-block among the first " + std::to_string(res.t_achieved) + " positions repeats a color";
  }
  report.checks.push_back(blocks);
  return report;
}

}  // namespace rainbow
