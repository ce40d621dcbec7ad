#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "elympus/olympus/optimizer.hpp"
#include "elympus/problems/instance_factory.hpp"
#include "json.hpp"

namespace elympus {

/// One experiment: every instance is run `repetitions` times.
///
/// File form (JSON):
///   {"instances": [{"family": "concat-dec", "k": 5, "blocks": 10}],
///    "repetitions": 30, "seed": 1,
///    "budgets": {"ffe": 1000000, "time_seconds": 600},
///    "optimizer": "olympus", "verify_policy": "1/v",
///    "out_dir": "results", "trace": false, "verbosity": 0,
///    "threads": 0, "curves": true}
struct ExperimentConfig {
  std::vector<InstanceSpec> instances;
  std::size_t repetitions = 30;
  std::uint64_t seed = 1;
  Budgets budgets;
  OptimizerKind optimizer = OptimizerKind::kOlympus;
  VerifyPolicy verify = VerifyPolicy::kOneOverV;
  std::string out_dir = "results";
  bool trace = false;
  int verbosity = 0;
  std::size_t threads = 0;  // 0: hardware concurrency
  bool curves = true;

  void validate() const;
  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);
};

ExperimentConfig load_config(const std::string& path);
void save_config(const ExperimentConfig& config, const std::string& path);

}  // namespace elympus
