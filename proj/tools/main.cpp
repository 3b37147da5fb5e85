#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbow/bounds.hpp"
#include "rainbow/decomposition.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/models.hpp"
#include "rainbow/verify.hpp"

namespace fs = std::filesystem;
using namespace rainbow;

namespace {

struct HostArgs {
  std::string graph;
  int complete = 0;

  Graph load() const {
    if (!graph.empty()) return load_graph(graph);
    if (complete > 0) return complete_graph(complete);
    throw ParameterError("give --graph <file> or --complete <n>");
  }
};

void add_host(CLI::App* cmd, HostArgs& host) {
  auto* g = cmd->add_option("--graph", host.graph, "host graph file");
  auto* c = cmd->add_option("--complete", host.complete, "use K_n as host");
  g->excludes(c);
}

BipartiteGraph split(const Graph& g, Vertex left) {
  std::vector<Pair> pairs;
  for (const auto& e : g.edges()) {
    if (e.u >= left || e.v < left) throw ParameterError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                                        " does not cross the bipartition");
    pairs.push_back({e.u, e.v - left});
  }
  return BipartiteGraph(left, g.n() - left, std::move(pairs));
}

nlohmann::json diagnostics_json(const DecompositionResult& res) {
  const auto& plan = res.diagnostics.plan;
  nlohmann::json j{{"s", res.diagnostics.s},
                   {"r0", plan.r0},
                   {"t_achieved", res.t_achieved},
                   {"failure_reason", res.failure_reason ? nlohmann::json(*res.failure_reason) : nlohmann::json()},
                   {"edges_h", res.h.graph().edge_count()},
                   {"edges_h0", res.remainder.edge_count()}};
  nlohmann::json per_r = nlohmann::json::array();
  for (std::size_t r = 1; r < plan.mu.size(); ++r) {
    per_r.push_back({{"r", r},
                     {"mu", plan.mu[r]},
                     {"d", plan.d[r]},
                     {"s", plan.s[r]},
                     {"achieved", plan.achieved[r]},
                     {"min_m", plan.min_m[r]}});
  }
  j["per_r"] = per_r;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow decompositions of random edge-colored graphs"};
  app.require_subcommand(1);

  // sample
  auto* sample = app.add_subcommand("sample", "draw from a random graph model");
  HostArgs sample_host;
  add_host(sample, sample_host);
  std::string model = "gnp";
  double p = 1.0;
  int k = 2;
  long long palette = 0;
  Seed seed = 1;
  std::string out;
  int left = 0;
  int right = 0;
  sample->add_option("--model", model, "gnp | colored | kout | star | hat | coupled | left-kout | bipartite-gnp")
      ->check(CLI::IsMember({"gnp", "colored", "kout", "star", "hat", "coupled", "left-kout", "bipartite-gnp"}));
  sample->add_option("--p", p);
  sample->add_option("--k", k);
  sample->add_option("--c", palette, "palette size for colored (default k n)");
  sample->add_option("--seed", seed);
  sample->add_option("--left", left, "left part size for bipartite models");
  sample->add_option("--right", right, "right part size for bipartite models");
  sample->add_option("--out", out, "output file (stdout if omitted)");

  // decompose
  auto* dec = app.add_subcommand("decompose", "sample h and split it into rainbow parts");
  HostArgs dec_host;
  add_host(dec, dec_host);
  double eps = 0.5;
  std::string out_dir;
  dec->add_option("--p", p)->required();
  dec->add_option("--k", k)->required();
  dec->add_option("--eps", eps)->required();
  dec->add_option("--seed", seed);
  dec->add_option("--out", out_dir)->required();

  // verify
  auto* ver = app.add_subcommand("verify", "check a property of a graph file");
  std::string graph_file;
  std::string property;
  ver->add_option("--graph", graph_file)->required();
  ver->add_option("--property", property)
      ->required()
      ->check(CLI::IsMember({"perfect-matching", "k-matching", "hamiltonian", "rainbow", "connected"}));
  ver->add_option("--left", left, "left part size; vertices below it form the left part");
  ver->add_option("--k", k);

  // bounds
  auto* bnd = app.add_subcommand("bounds", "tabulate multiplicity expectations and r0");
  int n = 100;
  double alpha = 0.5;
  int rows = 0;
  bnd->add_option("--k", k)->required();
  bnd->add_option("--n", n)->required();
  bnd->add_option("--alpha", alpha)->required();
  bnd->add_option("--eps", eps)->required();
  bnd->add_option("--rows", rows, "rows to print (default max(r0, 8))");

  // experiment
  auto* exp = app.add_subcommand("experiment", "run a Monte Carlo experiment");
  std::string config;
  int workers = 1;
  bool timing = false;
  exp->add_option("--config", config)->required()->check(CLI::ExistingFile);
  exp->add_option("--out", out_dir)->required();
  exp->add_option("--workers", workers)->check(CLI::PositiveNumber);
  exp->add_flag("--timing", timing, "record per-trial wall time");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sample) {
      std::ostringstream text;
      const auto emit = [&](const auto& save_fn) {
        const fs::path target = out.empty() ? fs::temp_directory_path() / ("rainbow-sample-" + std::to_string(seed)) : fs::path(out);
        save_fn(target);
        if (out.empty()) {
          std::ifstream in(target);
          std::cout << in.rdbuf();
          fs::remove(target);
        }
      };
      if (model == "left-kout" || model == "bipartite-gnp") {
        if (left <= 0 || right <= 0) throw ParameterError("--left and --right are required");
        const auto b = model == "left-kout" ? sample_left_kout(left, right, k, seed) : sample_bipartite_gnp(left, right, p, seed);
        emit([&](const fs::path& f) { save_graph(b.as_graph(), f); });
      } else {
        const Graph host = sample_host.load();
        if (model == "colored") {
          const auto cg = sample_colored(host, p, static_cast<Color>(palette ? palette : static_cast<long long>(k) * host.n()), seed);
          emit([&](const fs::path& f) { save_colored_graph(cg, f); });
        } else {
          Graph g;
          if (model == "gnp") g = sample_gnp(host, p, seed);
          else if (model == "kout") g = sample_kout(host, k, seed).result;
          else if (model == "star") g = sample_kout_star(host, k, seed).result;
          else if (model == "hat") g = sample_kout_hat(host, k, seed);
          else g = sample_coupled(host, k, seed).h_star;
          emit([&](const fs::path& f) { save_graph(g, f); });
        }
      }
    } else if (*dec) {
      const Graph host = dec_host.load();
      const auto res = decompose(host, p, k, eps, seed);
      fs::create_directories(out_dir);
      save_colored_graph(res.h, fs::path(out_dir) / "h.txt");
      save_graph(res.remainder, fs::path(out_dir) / "H0.txt");
      for (std::size_t i = 0; i < res.parts.size(); ++i) {
        // Parts keep h's colors.
        std::vector<Color> colors;
        for (const auto& e : res.parts[i].edges()) colors.push_back(res.h.color_of(e.u, e.v));
        save_colored_graph(ColoredGraph(res.parts[i], colors, res.h.palette()),
                           fs::path(out_dir) / ("H" + std::to_string(i + 1) + ".txt"));
      }
      const auto diag = diagnostics_json(res);
      std::ofstream(fs::path(out_dir) / "diagnostics.json") << diag.dump(2) << '\n';
      std::cout << diag.dump(2) << '\n';
      const auto report = verify_decomposition(res);
      for (const auto& c : report.checks) {
        std::cout << c.name << ": " << (c.passed ? "pass" : "FAIL") << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
      }
      return report.all_passed() ? 0 : 1;
    } else if (*ver) {
      PropertyVerdict v;
      if (property == "rainbow") {
        v = is_rainbow(load_colored_graph(graph_file));
      } else {
        const Graph g = load_graph(graph_file);
        if (property == "hamiltonian") v = is_hamiltonian(g);
        else if (property == "connected") v = is_connected(g);
        else {
          if (left <= 0) throw ParameterError("--left is required for bipartite properties");
          const auto b = split(g, left);
          v = property == "perfect-matching" ? has_perfect_matching(b) : has_k_matching(b, k);
        }
      }
      std::cout << v.property << ": " << to_string(v.outcome) << " [" << to_string(v.method) << "]\n"
                << "witness: " << describe_witness(v.witness) << '\n';
      return v.holds() ? 0 : 1;
    } else if (*bnd) {
      const int alpha_n = static_cast<int>(std::floor(alpha * n + 1e-9));
      const int r0 = compute_r0_for_alpha(eps, k, alpha);
      const auto prof = multiplicity_profile(k, n, alpha_n);
      std::cout << "k=" << k << " n=" << n << " alpha_n=" << alpha_n << " eps=" << eps << " r0=" << r0
                << " (case split on alpha <= eps/2; plain r0=" << compute_r0(eps, k) << ")\n";
      std::cout << std::setw(4) << "r" << std::setw(16) << "mu_r" << std::setw(16) << "m>=r bound" << '\n';
      const int last = std::min(alpha_n, rows > 0 ? rows : std::max(r0, 8));
      for (int r = 0; r <= last; ++r) {
        std::cout << std::setw(4) << r << std::setw(16) << std::setprecision(8) << prof.mu[static_cast<std::size_t>(r)]
                  << std::setw(16) << expected_m_geq_r_upper(k, n, alpha_n, r) << '\n';
      }
      std::cout << "sum_{r<=r0} r mu_r = " << prof.weighted_mass(r0) << "  (1-eps) alpha n = " << (1 - eps) * alpha_n
                << '\n';
    } else if (*exp) {
      return rainbow::run(config, out_dir, workers, timing ? std::optional<bool>(true) : std::nullopt);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
