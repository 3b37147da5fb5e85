#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rainbow/graph.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/stats.hpp"

namespace rainbow {

struct ExperimentConfig {
  std::string experiment;
  int n = 0;
  double p = 1.0;
  /// 0 picks the experiment default (3 for walkup-pm/fenner-ham and
  /// pm-packing, 23 for ham-packing, 2 otherwise).
  int k = 0;
  /// Palette size; 0 means k * |V(host)|, any other value must match it.
  long long c = 0;
  double eps = 0.5;
  int k_eps = 23;
  /// Dirac host degree as a fraction of n; 0 means ceil((1 + eps) n / 2).
  double delta_fraction = 0.0;
  std::string host_file;
  /// Multiset size over n for multiplicity-conc.
  double alpha = 0.5;
  /// walkup-pm: "two-sided" (both parts pick) or "left".
  std::string model = "two-sided";
  int trials = 1;
  Seed seed = 1;
  /// Hamiltonicity rotation budget; 0 means 50 n^2.
  std::uint64_t rotations = 0;
  /// Record wall-clock time per trial (makes trials.csv non-reproducible).
  bool timing = false;

  int effective_k() const;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Throws ParameterError on any invalid field.
void validate(const ExperimentConfig& cfg);

struct TrialRecord {
  int trial = 0;
  Seed seed = 0;
  std::string experiment;
  int n = 0;
  double p = 0.0;
  int k = 0;
  long long c = 0;
  double eps = 0.0;
  int t_target = 0;
  int t_achieved = 0;
  std::string property;
  bool holds = false;
  double runtime_ms = 0.0;
  std::string failure_reason;

  // Not part of the CSV; used for aggregation.
  double value = 0.0;
  std::uint64_t outcome_a = 0;
  std::uint64_t outcome_b = 0;
  bool flag = false;
};

struct AggregateReport {
  std::string experiment;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double probability = 0.0;
  Interval ci;
  int t_target = 0;
  /// Real-valued asymptotic target delta p / (2k).
  double asymptotic_target = 0.0;
  double mean_t = 0.0;
  int min_t = 0;
  int max_t = 0;
  double fraction_t_positive = 0.0;
  /// Experiment-specific figures (TV distance, quantiles, ...).
  nlohmann::json extras = nlohmann::json::object();

  nlohmann::json to_json() const;
};

struct ExperimentRun {
  ExperimentConfig config;
  std::vector<TrialRecord> records;
  AggregateReport report;
};

/// The host graph of a decomposition experiment.
Graph host_graph(const ExperimentConfig& cfg);

/// Runs one trial. Exceptions inside the trial are caught and recorded.
TrialRecord run_trial(const ExperimentConfig& cfg, const Graph* host, int trial);

/// Deterministic fold of records in trial order.
AggregateReport aggregate(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records);

/// Validates, then runs every trial on `workers` threads.
ExperimentRun run_experiment(const ExperimentConfig& cfg, int workers);

std::string records_to_csv(const std::vector<TrialRecord>& records);
void write_outputs(const ExperimentRun& run, const std::filesystem::path& dir);

/// Loads, runs and writes trials.csv and report.json. Returns 0 on
/// completion and 2 on configuration or IO errors.
int run(const std::filesystem::path& config_path, const std::filesystem::path& out_dir, int workers,
        std::optional<bool> timing = std::nullopt);

/// Experiment names accepted by the harness.
const std::vector<std::string>& experiment_names();

}  // namespace rainbow
