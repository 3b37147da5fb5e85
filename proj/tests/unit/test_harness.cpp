#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rainbow/harness.hpp"

using namespace rainbow;
namespace fs = std::filesystem;

namespace {

ExperimentConfig walkup(int trials) {
  ExperimentConfig cfg;
  cfg.experiment = "walkup-pm";
  cfg.n = 30;
  cfg.trials = trials;
  cfg.seed = 77;
  return cfg;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("rainbow-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("config parsing and validation") {
  const auto cfg = config_from_json(nlohmann::json{{"experiment", "fenner-ham"}, {"n", 20}, {"master_seed", 5}});
  CHECK(cfg.seed == 5);
  CHECK(cfg.effective_k() == 3);
  CHECK_NOTHROW(validate(cfg));
  CHECK(config_from_json(config_to_json(cfg)).n == 20);

  CHECK_THROWS_AS(config_from_json(nlohmann::json{{"experiment", "walkup-pm"}, {"bogus", 1}}), ParameterError);
  auto bad = cfg;
  bad.experiment = "nope";
  CHECK_THROWS_AS(validate(bad), ParameterError);
  bad = cfg;
  bad.p = 1.5;
  CHECK_THROWS_AS(validate(bad), ParameterError);
  bad = cfg;
  bad.experiment = "ham-packing";
  bad.eps = 0.0;
  CHECK_THROWS_AS(validate(bad), ParameterError);
  bad = cfg;
  bad.n = 0;
  CHECK_THROWS_AS(validate(bad), ParameterError);
  bad = cfg;
  bad.trials = 0;
  CHECK_THROWS_AS(validate(bad), ParameterError);
  CHECK(experiment_names().size() == 7);
}

TEST_CASE("one CSV row per trial and fixed header") {
  const auto run = run_experiment(walkup(12), 2);
  const auto csv = records_to_csv(run.records);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 13);
  CHECK(csv.rfind("trial,seed,experiment,n,p,k,c,eps,t_target,t_achieved,property,holds,runtime_ms,failure_reason\n", 0) ==
        0);
  CHECK(run.report.trials == 12);
}

TEST_CASE("outputs are identical across worker counts and reruns") {
  auto cfg = walkup(40);
  const auto a = run_experiment(cfg, 1);
  const auto b = run_experiment(cfg, 8);
  const auto c = run_experiment(cfg, 3);
  CHECK(records_to_csv(a.records) == records_to_csv(b.records));
  CHECK(records_to_csv(a.records) == records_to_csv(c.records));
  CHECK(a.report.to_json().dump() == b.report.to_json().dump());

  cfg.experiment = "coupling-tv";
  cfg.n = 4;
  CHECK(records_to_csv(run_experiment(cfg, 1).records) == records_to_csv(run_experiment(cfg, 6).records));
}

TEST_CASE("run writes files byte-identically and reports errors with exit code 2") {
  const auto dir = scratch("run");
  const auto cfg_path = dir / "cfg.json";
  {
    std::ofstream out(cfg_path);
    out << config_to_json(walkup(20)).dump();
  }
  REQUIRE(run(cfg_path, dir / "a", 1) == 0);
  REQUIRE(run(cfg_path, dir / "b", 4) == 0);
  CHECK(slurp(dir / "a" / "trials.csv") == slurp(dir / "b" / "trials.csv"));
  CHECK(slurp(dir / "a" / "report.json") == slurp(dir / "b" / "report.json"));
  CHECK_FALSE(slurp(dir / "a" / "trials.csv").empty());

  CHECK(run(dir / "missing.json", dir / "c", 1) == 2);
  {
    std::ofstream out(dir / "bad.json");
    out << R"({"experiment": "teleport", "n": 4})";
  }
  CHECK(run(dir / "bad.json", dir / "d", 1) == 2);
  {
    std::ofstream out(dir / "garbled.json");
    out << "{ not json";
  }
  CHECK(run(dir / "garbled.json", dir / "e", 1) == 2);
  fs::remove_all(dir);
}

TEST_CASE("pm-packing with p = 0 has a vacuous target") {
  ExperimentConfig cfg;
  cfg.experiment = "pm-packing";
  cfg.n = 10;
  cfg.p = 0.0;
  cfg.trials = 3;
  const auto run = run_experiment(cfg, 2);
  for (const auto& r : run.records) {
    CHECK(r.holds);
    CHECK(r.t_achieved == 0);
    CHECK(r.t_target == 0);
  }
}

TEST_CASE("experiments produce records of the right property") {
  for (const auto& name : experiment_names()) {
    ExperimentConfig cfg;
    cfg.experiment = name;
    cfg.n = name == "multiplicity-conc" ? 200 : (name == "coupling-tv" ? 5 : 16);
    cfg.trials = 2;
    const auto run = run_experiment(cfg, 2);
    REQUIRE(run.records.size() == 2);
    CHECK_FALSE(run.records[0].property.empty());
    CHECK(run.records[0].runtime_ms == 0.0);
  }
}
