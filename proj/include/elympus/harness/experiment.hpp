#pragma once

#include <functional>
#include <string>
#include <vector>

#include "elympus/harness/config.hpp"
#include "elympus/harness/records.hpp"
#include "elympus/harness/stats.hpp"

namespace elympus {

struct ExperimentResult {
  std::vector<RunRecord> records;  // ordered by (instance_index, rep)
  std::vector<AggregateStats> aggregates;
};

// Seed of the run with global index `run_index` (instance_index * reps + rep).
std::uint64_t run_seed(std::uint64_t master, std::size_t run_index);

/// Runs every repetition of every instance on a worker pool. Optimization
/// failures are recorded, never thrown.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                const std::function<void(const RunRecord&)>& on_complete = {});

// runs.csv, aggregate.json, curves/*.csv and traces/*.txt under config.out_dir.
void write_outputs(const ExperimentConfig& config, const ExperimentResult& result);

nlohmann::json aggregate_document(const ExperimentConfig& config, const ExperimentResult& result);

}  // namespace elympus
