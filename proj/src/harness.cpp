#include "rainbow/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "rainbow/bounds.hpp"
#include "rainbow/decomposition.hpp"
#include "rainbow/matching.hpp"
#include "rainbow/models.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

namespace {

using nlohmann::json;

bool is_decomposition(const std::string& e) { return e == "pm-packing" || e == "ham-packing" || e == "dirac-ham"; }

int floor_count(double x) { return static_cast<int>(std::floor(x + 1e-9)); }

Vertex host_order(const ExperimentConfig& cfg) { return cfg.experiment == "pm-packing" ? 2 * cfg.n : cfg.n; }

int dirac_degree(const ExperimentConfig& cfg) {
  int d = cfg.delta_fraction > 0.0 ? static_cast<int>(std::ceil(cfg.delta_fraction * cfg.n - 1e-9))
                                   : static_cast<int>(std::ceil((1.0 + cfg.eps) * cfg.n / 2.0 - 1e-9));
  if (d % 2 == 1 && cfg.n % 2 == 1) ++d;  // odd-degree circulants need even n
  return std::min(d, cfg.n - 1);
}

double dirac_bound(const ExperimentConfig& cfg) { return (1.0 + cfg.eps) * cfg.n / 2.0; }

int target_parts(const ExperimentConfig& cfg, const Graph& host) {
  return floor_count((1.0 - cfg.eps) * min_degree(host) * cfg.p / (2.0 * cfg.effective_k()));
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

BipartiteGraph split_bipartite(const Graph& g, Vertex half) {
  std::vector<Pair> pairs;
  pairs.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    if (e.u >= half || e.v < half) throw std::logic_error("split_bipartite: edge inside one part");
    pairs.push_back({e.u, e.v - half});
  }
  return BipartiteGraph(half, half, std::move(pairs));
}

std::uint64_t edge_mask(const Graph& host, const Graph& sub) {
  std::uint64_t mask = 0;
  for (const auto& e : sub.edges()) mask |= std::uint64_t{1} << *host.edge_id(e.u, e.v);
  return mask;
}

bool rainbow_under(const ColoredGraph& h, const std::vector<Edge>& edges) {
  std::set<Color> seen;
  for (const auto& e : edges) {
    if (!seen.insert(h.color_of(e.u, e.v)).second) return false;
  }
  return true;
}

HamiltonBudget ham_budget(const ExperimentConfig& cfg) {
  HamiltonBudget b;
  b.rotations = cfg.rotations;
  return b;
}

void trial_walkup(const ExperimentConfig& cfg, TrialRecord& rec) {
  const int k = cfg.effective_k();
  BipartiteGraph b;
  if (cfg.model == "left") {
    b = sample_left_kout(cfg.n, cfg.n, k, rec.seed);
  } else {
    static thread_local std::optional<std::pair<int, Graph>> cached;
    if (!cached || cached->first != cfg.n) cached.emplace(cfg.n, complete_bipartite(cfg.n, cfg.n).as_graph());
    b = split_bipartite(sample_kout(cached->second, k, rec.seed).result, cfg.n);
  }
  rec.property = "perfect-matching";
  const auto v = has_perfect_matching(b);
  rec.holds = v.holds() && is_perfect_matching(std::get<Matching>(v.witness), b);
  if (!rec.holds) rec.failure_reason = "no perfect matching";
}

void trial_fenner(const ExperimentConfig& cfg, const Graph& host, TrialRecord& rec) {
  rec.property = "hamiltonian";
  const auto g = sample_kout(host, cfg.effective_k(), rec.seed).result;
  const auto v = is_hamiltonian(g, ham_budget(cfg));
  rec.holds = v.holds() && is_valid_hamilton_cycle(g, std::get<CycleWitness>(v.witness).cycle);
  if (v.outcome == Outcome::kUnknown) rec.failure_reason = "hamiltonicity undecided";
  if (v.outcome == Outcome::kFalse) rec.failure_reason = "not hamiltonian";
}

void trial_packing(const ExperimentConfig& cfg, const Graph& host, TrialRecord& rec) {
  const bool matchings = cfg.experiment == "pm-packing";
  rec.property = matchings ? "rainbow-perfect-matching" : "rainbow-hamilton-cycle";
  rec.t_target = target_parts(cfg, host);
  if (cfg.p == 0.0) {
    rec.holds = rec.t_target == 0;
    return;
  }
  const auto res = decompose(host, cfg.p, cfg.effective_k(), cfg.eps, rec.seed);
  rec.flag = res.success();
  rec.value = res.t_achieved;
  if (res.failure_reason) rec.failure_reason = *res.failure_reason;
  const auto report = verify_decomposition(res);
  if (!report.all_passed()) {
    for (const auto& c : report.checks) {
      if (!c.passed) {
        rec.failure_reason = "validation: " + c.name + ": " + c.detail;
        break;
      }
    }
    rec.t_achieved = 0;
    rec.holds = false;
    return;
  }
  int count = 0;
  for (const auto& part : res.parts) {
    if (matchings) {
      const auto b = split_bipartite(part, cfg.n);
      const auto v = has_perfect_matching(b);
      if (!v.holds()) continue;
      const auto& m = std::get<Matching>(v.witness);
      std::vector<Edge> edges;
      for (const auto& [l, r] : m.pairs) edges.push_back(Edge::make(l, r + cfg.n));
      if (is_perfect_matching(m, b) && rainbow_under(res.h, edges)) ++count;
    } else {
      const auto v = is_hamiltonian(part, ham_budget(cfg));
      if (!v.holds()) continue;
      const auto& cycle = std::get<CycleWitness>(v.witness).cycle;
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < cycle.size(); ++i) edges.push_back(Edge::make(cycle[i], cycle[(i + 1) % cycle.size()]));
      if (is_valid_hamilton_cycle(part, cycle) && rainbow_under(res.h, edges)) ++count;
    }
  }
  rec.t_achieved = count;
  rec.holds = count >= rec.t_target;
}

void trial_coupling(const ExperimentConfig& cfg, const Graph& host, TrialRecord& rec) {
  rec.property = "agreement";
  const int k = cfg.effective_k();
  const auto hat = sample_kout_hat(host, k, derive_seed(rec.seed, "tv-hat"));
  const auto coupled = sample_coupled(host, k, derive_seed(rec.seed, "tv-coupled"));
  rec.holds = coupled.agreed;
  rec.flag = coupled.agreed;
  if (!coupled.agreed) rec.failure_reason = "some vertex has out-degree below k";
  if (host.edge_count() <= 64) {
    rec.outcome_a = edge_mask(host, hat);
    rec.outcome_b = edge_mask(host, coupled.h_star);
  } else {
    rec.outcome_a = is_connected(hat).holds() ? 1 : 0;
    rec.outcome_b = is_connected(coupled.h_star).holds() ? 1 : 0;
  }
}

int multiplicity_size(const ExperimentConfig& cfg) { return floor_count(cfg.alpha * cfg.n); }

int multiplicity_r0(const ExperimentConfig& cfg) {
  return compute_r0_for_alpha(cfg.eps, cfg.effective_k(), static_cast<double>(multiplicity_size(cfg)) / cfg.n);
}

void trial_multiplicity(const ExperimentConfig& cfg, TrialRecord& rec) {
  rec.property = "concentration";
  const int k = cfg.effective_k();
  const int size = multiplicity_size(cfg);
  const int r0 = multiplicity_r0(cfg);
  const auto palette = static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(cfg.n);
  Rng rng(rec.seed, "multiset");
  std::vector<int> hits(palette, 0);
  for (int i = 0; i < size; ++i) ++hits[rng.below(palette)];
  std::vector<int> m(static_cast<std::size_t>(r0) + 1, 0);
  for (const int h : hits) {
    if (h >= 1 && h <= r0) ++m[static_cast<std::size_t>(h)];
  }
  double worst = 0.0;
  std::uint64_t exceed_mask = 0;
  for (int r = 1; r <= std::min(r0, size); ++r) {
    const double mu = expected_m_r(k, cfg.n, size, r);
    const double dev = std::fabs(m[static_cast<std::size_t>(r)] - mu) / mu;
    worst = std::max(worst, dev);
    if (dev > cfg.eps && r <= 63) exceed_mask |= std::uint64_t{1} << r;
  }
  rec.value = worst;
  rec.outcome_a = exceed_mask;
  rec.holds = worst <= cfg.eps;
  if (!rec.holds) rec.failure_reason = "relative deviation " + format_double(worst) + " exceeds eps";
}

std::string failure_category(const std::string& reason) {
  for (const char* prefix : {"step III", "plan: m_", "plan: B_", "validation", "error"}) {
    if (reason.starts_with(prefix)) return prefix;
  }
  return reason;
}

}  // namespace

int ExperimentConfig::effective_k() const {
  if (experiment == "dirac-ham") return k_eps;
  if (k > 0) return k;
  if (experiment == "walkup-pm" || experiment == "fenner-ham" || experiment == "pm-packing") return 3;
  if (experiment == "ham-packing") return 23;
  return 2;
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"walkup-pm",  "fenner-ham",  "pm-packing",       "ham-packing",
                                              "dirac-ham", "coupling-tv", "multiplicity-conc"};
  return names;
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ParameterError("config: expected a JSON object");
  ExperimentConfig cfg;
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "experiment") cfg.experiment = value.get<std::string>();
      else if (key == "n") cfg.n = value.get<int>();
      else if (key == "p") cfg.p = value.get<double>();
      else if (key == "k") cfg.k = value.get<int>();
      else if (key == "c") cfg.c = value.get<long long>();
      else if (key == "eps") cfg.eps = value.get<double>();
      else if (key == "k_eps") cfg.k_eps = value.get<int>();
      else if (key == "delta_fraction") cfg.delta_fraction = value.get<double>();
      else if (key == "host_file") cfg.host_file = value.get<std::string>();
      else if (key == "alpha") cfg.alpha = value.get<double>();
      else if (key == "model") cfg.model = value.get<std::string>();
      else if (key == "trials") cfg.trials = value.get<int>();
      else if (key == "seed" || key == "master_seed") cfg.seed = value.get<Seed>();
      else if (key == "rotations") cfg.rotations = value.get<std::uint64_t>();
      else if (key == "timing") cfg.timing = value.get<bool>();
      else throw ParameterError("config: unknown field '" + key + "'");
    } catch (const json::exception& e) {
      throw ParameterError("config: bad value for '" + key + "': " + e.what());
    }
  }
  return cfg;
}

json config_to_json(const ExperimentConfig& cfg) {
  json j{{"experiment", cfg.experiment}, {"n", cfg.n},         {"p", cfg.p},         {"k", cfg.effective_k()},
         {"eps", cfg.eps},               {"trials", cfg.trials}, {"seed", cfg.seed}, {"rotations", cfg.rotations}};
  if (cfg.c) j["c"] = cfg.c;
  if (cfg.experiment == "dirac-ham") {
    j["k_eps"] = cfg.k_eps;
    j["delta_fraction"] = cfg.delta_fraction;
    if (!cfg.host_file.empty()) j["host_file"] = cfg.host_file;
  }
  if (cfg.experiment == "multiplicity-conc") j["alpha"] = cfg.alpha;
  if (cfg.experiment == "walkup-pm") j["model"] = cfg.model;
  return j;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("config: cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParameterError("config: " + path.string() + ": " + e.what());
  }
  return config_from_json(j);
}

Graph host_graph(const ExperimentConfig& cfg) {
  if (cfg.experiment == "pm-packing") return complete_bipartite(cfg.n, cfg.n).as_graph();
  if (cfg.experiment == "dirac-ham") {
    Graph g = cfg.host_file.empty() ? circulant_graph(cfg.n, dirac_degree(cfg)) : load_graph(cfg.host_file);
    if (g.n() != cfg.n) throw ParameterError("dirac-ham: host has " + std::to_string(g.n()) + " vertices, expected n");
    if (min_degree(g) < dirac_bound(cfg)) {
      throw ParameterError("dirac-ham: host minimum degree " + std::to_string(min_degree(g)) +
                           " is below (1 + eps) n / 2 = " + format_double(dirac_bound(cfg)));
    }
    return g;
  }
  return complete_graph(cfg.n);
}

void validate(const ExperimentConfig& cfg) {
  const auto& names = experiment_names();
  if (std::find(names.begin(), names.end(), cfg.experiment) == names.end()) {
    throw ParameterError("config: unknown experiment '" + cfg.experiment + "'");
  }
  if (cfg.trials < 1) throw ParameterError("config: trials must be at least 1");
  if (cfg.n < 1) throw ParameterError("config: n must be positive");
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw ParameterError("config: p must lie in [0, 1]");
  const int k = cfg.effective_k();
  const std::string& e = cfg.experiment;
  if (e == "walkup-pm") {
    if (k < 1 || k > cfg.n) throw ParameterError("walkup-pm: need 1 <= k <= n");
    if (cfg.model != "two-sided" && cfg.model != "left") throw ParameterError("walkup-pm: model must be two-sided or left");
  } else if (e == "fenner-ham") {
    if (cfg.n < 3 || k < 1 || k > cfg.n - 1) throw ParameterError("fenner-ham: need n >= 3 and 1 <= k <= n - 1");
  } else if (e == "coupling-tv") {
    if (cfg.n < 2 || k < 1) throw ParameterError("coupling-tv: need n >= 2 and k >= 1");
  } else if (e == "multiplicity-conc") {
    if (k < 2) throw ParameterError("multiplicity-conc: k must be at least 2");
    if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0)) throw ParameterError("multiplicity-conc: alpha must lie in (0, 1]");
    if (multiplicity_size(cfg) < 1) throw ParameterError("multiplicity-conc: alpha n must be at least 1");
  }
  if (e == "multiplicity-conc" || is_decomposition(e)) {
    if (!(cfg.eps > 0.0 && cfg.eps < 1.0)) throw ParameterError("config: eps must lie in (0, 1)");
  }
  if (is_decomposition(e)) {
    if (k < 2) throw ParameterError(e + ": k must be at least 2");
    if (cfg.n < 2) throw ParameterError(e + ": n must be at least 2");
    const long long palette = static_cast<long long>(k) * host_order(cfg);
    if (cfg.c != 0 && cfg.c != palette) {
      throw ParameterError(e + ": c must equal k |V(G)| = " + std::to_string(palette));
    }
    if (e == "dirac-ham") (void)host_graph(cfg);
  }
}

TrialRecord run_trial(const ExperimentConfig& cfg, const Graph* host, int trial) {
  TrialRecord rec;
  rec.trial = trial;
  rec.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(trial));
  rec.experiment = cfg.experiment;
  rec.n = cfg.n;
  rec.p = cfg.p;
  rec.k = cfg.effective_k();
  rec.c = is_decomposition(cfg.experiment) ? static_cast<long long>(rec.k) * host_order(cfg) : cfg.c;
  rec.eps = cfg.eps;
  const auto start = std::chrono::steady_clock::now();
  try {
    const std::string& e = cfg.experiment;
    if (e == "walkup-pm") trial_walkup(cfg, rec);
    else if (e == "fenner-ham") trial_fenner(cfg, *host, rec);
    else if (is_decomposition(e)) trial_packing(cfg, *host, rec);
    else if (e == "coupling-tv") trial_coupling(cfg, *host, rec);
    else if (e == "multiplicity-conc") trial_multiplicity(cfg, rec);
  } catch (const std::exception& ex) {
    rec.holds = false;
    rec.t_achieved = 0;
    rec.failure_reason = std::string("error: ") + ex.what();
  }
  if (cfg.timing) {
    rec.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return rec;
}

json AggregateReport::to_json() const {
  return json{{"experiment", experiment},
              {"trials", trials},
              {"successes", successes},
              {"probability", probability},
              {"ci99", {ci.lo, ci.hi}},
              {"t_target", t_target},
              {"asymptotic_target", asymptotic_target},
              {"mean_t_achieved", mean_t},
              {"min_t_achieved", min_t},
              {"max_t_achieved", max_t},
              {"fraction_t_positive", fraction_t_positive},
              {"extras", extras}};
}

AggregateReport aggregate(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records) {
  AggregateReport rep;
  rep.experiment = cfg.experiment;
  rep.trials = records.size();
  if (records.empty()) return rep;
  long long t_sum = 0;
  std::uint64_t positive = 0;
  rep.min_t = records.front().t_achieved;
  rep.max_t = records.front().t_achieved;
  std::map<std::string, std::uint64_t> failures;
  for (const auto& r : records) {
    if (r.holds) ++rep.successes;
    t_sum += r.t_achieved;
    rep.min_t = std::min(rep.min_t, r.t_achieved);
    rep.max_t = std::max(rep.max_t, r.t_achieved);
    if (r.t_achieved >= 1) ++positive;
    if (!r.failure_reason.empty()) ++failures[failure_category(r.failure_reason)];
    rep.t_target = std::max(rep.t_target, r.t_target);
  }
  const double n = static_cast<double>(rep.trials);
  rep.probability = static_cast<double>(rep.successes) / n;
  rep.ci = wilson_interval(rep.successes, rep.trials);
  rep.mean_t = static_cast<double>(t_sum) / n;
  rep.fraction_t_positive = static_cast<double>(positive) / n;
  rep.extras["failure_reasons"] = failures;

  const std::string& e = cfg.experiment;
  if (is_decomposition(e)) {
    const Graph host = host_graph(cfg);
    rep.asymptotic_target = min_degree(host) * cfg.p / (2.0 * cfg.effective_k());
    std::uint64_t decomposed = 0;
    double parts = 0.0;
    for (const auto& r : records) {
      decomposed += r.flag ? 1 : 0;
      parts += r.value;
    }
    rep.extras["decomposition_success_rate"] = static_cast<double>(decomposed) / n;
    rep.extras["mean_parts"] = parts / n;
    rep.extras["s"] = decomposition_s(min_degree(host), cfg.p, cfg.eps);
  } else if (e == "coupling-tv") {
    std::map<std::uint64_t, std::uint64_t> hat;
    std::map<std::uint64_t, std::uint64_t> star;
    for (const auto& r : records) {
      ++hat[r.outcome_a];
      ++star[r.outcome_b];
    }
    rep.extras["agreement_rate"] = rep.probability;
    if (complete_graph(cfg.n).edge_count() <= 64) {
      rep.extras["mode"] = "exact";
      rep.extras["tv_distance"] = tv_distance(hat, star);
      rep.extras["outcomes_hat"] = hat.size();
      rep.extras["outcomes_star"] = star.size();
    } else {
      rep.extras["mode"] = "frequency";
      const double fa = static_cast<double>(hat[1]) / n;
      const double fb = static_cast<double>(star[1]) / n;
      rep.extras["connected_hat"] = fa;
      rep.extras["connected_star"] = fb;
      rep.extras["connected_gap"] = fa - fb;
    }
  } else if (e == "multiplicity-conc") {
    std::vector<double> devs;
    for (const auto& r : records) devs.push_back(r.value);
    std::sort(devs.begin(), devs.end());
    const auto q = [&](double f) {
      return devs[std::min(devs.size() - 1, static_cast<std::size_t>(std::floor(f * (devs.size() - 1) + 0.5)))];
    };
    const int size = multiplicity_size(cfg);
    const int r0 = multiplicity_r0(cfg);
    const auto prof = multiplicity_profile(cfg.effective_k(), cfg.n, size);
    rep.extras["r0"] = r0;
    rep.extras["alpha_n"] = size;
    rep.extras["exceedance_fraction"] = 1.0 - rep.probability;
    rep.extras["quantiles"] = {{"median", q(0.5)}, {"q90", q(0.9)}, {"q99", q(0.99)}, {"max", devs.back()}};
    std::vector<double> mu;
    std::vector<double> exceed;
    for (int r = 1; r <= std::min(r0, size); ++r) {
      mu.push_back(prof.mu[static_cast<std::size_t>(r)]);
      std::uint64_t count = 0;
      for (const auto& rec : records) count += (rec.outcome_a >> r) & 1u;
      exceed.push_back(static_cast<double>(count) / n);
    }
    rep.extras["mu"] = mu;
    rep.extras["exceedance_by_r"] = exceed;
    const double mass = prof.weighted_mass(r0);
    rep.extras["mass_sum"] = mass;
    rep.extras["mass_required"] = (1.0 - cfg.eps) * size;
    rep.extras["mass_holds"] = mass >= (1.0 - cfg.eps) * size;
  }
  return rep;
}

ExperimentRun run_experiment(const ExperimentConfig& cfg, int workers) {
  validate(cfg);
  ExperimentRun run;
  run.config = cfg;
  std::optional<Graph> host;
  if (cfg.experiment != "walkup-pm" && cfg.experiment != "multiplicity-conc") host = host_graph(cfg);
  run.records.resize(static_cast<std::size_t>(cfg.trials));
  std::atomic<int> next{0};
  const auto work = [&] {
    for (int i = next.fetch_add(1); i < cfg.trials; i = next.fetch_add(1)) {
      run.records[static_cast<std::size_t>(i)] = run_trial(cfg, host ? &*host : nullptr, i);
    }
  };
  const int threads = std::clamp(workers, 1, cfg.trials);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work);
  }
  run.report = aggregate(cfg, run.records);
  return run;
}

std::string records_to_csv(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  out << "trial,seed,experiment,n,p,k,c,eps,t_target,t_achieved,property,holds,runtime_ms,failure_reason\n";
  for (const auto& r : records) {
    out << r.trial << ',' << r.seed << ',' << csv_field(r.experiment) << ',' << r.n << ',' << format_double(r.p)
        << ',' << r.k << ',' << r.c << ',' << format_double(r.eps) << ',' << r.t_target << ',' << r.t_achieved << ','
        << csv_field(r.property) << ',' << (r.holds ? 1 : 0) << ',' << format_double(r.runtime_ms) << ','
        << csv_field(r.failure_reason) << '\n';
  }
  return out.str();
}

void write_outputs(const ExperimentRun& run, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  {
    std::ofstream csv(dir / "trials.csv", std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write " + (dir / "trials.csv").string());
    csv << records_to_csv(run.records);
  }
  std::ofstream rep(dir / "report.json", std::ios::binary);
  if (!rep) throw std::runtime_error("cannot write " + (dir / "report.json").string());
  json j = run.report.to_json();
  j["config"] = config_to_json(run.config);
  rep << j.dump(2) << '\n';
}

int run(const std::filesystem::path& config_path, const std::filesystem::path& out_dir, int workers,
        std::optional<bool> timing) {
  try {
    auto cfg = load_config(config_path);
    if (timing) cfg.timing = *timing;
    const auto result = run_experiment(cfg, workers);
    write_outputs(result, out_dir);
    std::cout << result.report.to_json().dump(2) << '\n';
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace rainbow
