#include "elympus/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>

#include "elympus/common/errors.hpp"
#include "elympus/common/rng.hpp"
#include "elympus/harness/curves.hpp"
#include "elympus/problems/oracle.hpp"

namespace elympus {

namespace fs = std::filesystem;

namespace {

struct PreparedInstance {
  std::unique_ptr<ProblemInstance> instance;
  std::string label;
  Vig reference;
  Denominator denominator = Denominator::kStructural;
};

std::size_t count_found(const Vig& found, const Vig& reference) {
  std::size_t hits = 0;
  for (const auto& e : reference.edges()) {
    if (found.n() == reference.n() && found.has_edge(e.g, e.h)) ++hits;
  }
  return hits;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

std::string run_stem(const RunRecord& r) { return r.instance + "_rep" + std::to_string(r.rep); }

}  // namespace

std::uint64_t run_seed(std::uint64_t master, std::size_t run_index) { return derive_seed(master, run_index); }

ExperimentResult run_experiment(const ExperimentConfig& config, const std::function<void(const RunRecord&)>& on_complete) {
  config.validate();
  std::vector<PreparedInstance> prepared;
  for (std::size_t i = 0; i < config.instances.size(); ++i) {
    PreparedInstance p;
    p.instance = std::make_unique<ProblemInstance>(make_instance(config.instances[i]));
    p.label = std::to_string(i) + "-" + p.instance->label();
    if (p.instance->n() <= kOracleMaxN) {
      EvalCounter oracle_counter;
      p.reference = oracle_vig_nm(*p.instance, oracle_counter);
      p.denominator = Denominator::kOracle;
    } else {
      p.reference = p.instance->structural_vig();
    }
    prepared.push_back(std::move(p));
  }

  const std::size_t total = prepared.size() * config.repetitions;
  std::vector<RunRecord> records(total);
  std::atomic<std::size_t> next{0};
  std::mutex callback_mutex;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= total) return;
      try {
        const std::size_t inst = idx / config.repetitions;
        const auto& p = prepared[inst];
        RunRecord r;
        r.instance = p.label;
        r.family = config.instances[inst].family;
        r.instance_index = inst;
        r.n = p.instance->n();
        r.rep = idx % config.repetitions;
        r.seed = run_seed(config.seed, idx);
        r.optimizer = config.optimizer;
        r.verify = config.verify;
        r.optimum = p.instance->known_optimum();
        RunOptions opts;
        opts.optimizer = config.optimizer;
        opts.verify = config.verify;
        opts.budgets = config.budgets;
        opts.seed = r.seed;
        if (config.trace) opts.trace = [&r](const std::string& line) { r.trace.push_back(line); };
        r.result = run(*p.instance, opts);
        r.reference_edges = p.reference.edge_count();
        r.found_reference_edges = count_found(r.result.vig, p.reference);
        r.denominator = p.denominator;
        records[idx] = std::move(r);
        if (on_complete) {
          std::lock_guard lock(callback_mutex);
          on_complete(records[idx]);
        }
      } catch (...) {
        std::lock_guard lock(callback_mutex);
        if (!failure) failure = std::current_exception();
        next.store(total);
        return;
      }
    }
  };

  std::size_t threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(total, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  ExperimentResult result;
  result.records = std::move(records);
  for (std::size_t i = 0; i < prepared.size(); ++i) {
    std::vector<const RunRecord*> group;
    for (const auto& r : result.records) {
      if (r.instance_index == i) group.push_back(&r);
    }
    auto stats = aggregate(group);
    result.aggregates.push_back(std::move(stats));
  }
  return result;
}

nlohmann::json aggregate_document(const ExperimentConfig& config, const ExperimentResult& result) {
  nlohmann::json doc;
  auto cfg = config.to_json();
  cfg.erase("threads");
  doc["config"] = cfg;
  doc["metadata"] = {
      {"until_best_medians", "successful runs only"},
      {"cost_breakdown_medians", "all runs"},
      {"structural_denominator", "upper bound; used when n exceeds the oracle limit"},
      {"oracle_max_n", kOracleMaxN},
  };
  doc["instances"] = nlohmann::json::array();
  for (const auto& s : result.aggregates) doc["instances"].push_back(s.to_json());
  return doc;
}

void write_outputs(const ExperimentConfig& config, const ExperimentResult& result) {
  const fs::path root(config.out_dir);
  std::error_code ec;
  fs::create_directories(root, ec);
  if (ec) throw IoError("cannot create " + root.string() + ": " + ec.message());

  {
    auto out = open_output(root / "runs.csv");
    out << csv_header() << '\n';
    for (const auto& r : result.records) out << csv_row(r) << '\n';
    if (!out) throw IoError("write failed for " + (root / "runs.csv").string());
  }
  {
    auto out = open_output(root / "aggregate.json");
    out << aggregate_document(config, result).dump(2) << '\n';
    if (!out) throw IoError("write failed for " + (root / "aggregate.json").string());
  }
  if (config.curves) {
    fs::create_directories(root / "curves", ec);
    if (ec) throw IoError("cannot create " + (root / "curves").string() + ": " + ec.message());
    for (const auto& r : result.records) emit_curves(r, (root / "curves" / (run_stem(r) + ".csv")).string());
  }
  if (config.trace) {
    fs::create_directories(root / "traces", ec);
    if (ec) throw IoError("cannot create " + (root / "traces").string() + ": " + ec.message());
    for (const auto& r : result.records) {
      auto out = open_output(root / "traces" / (run_stem(r) + ".txt"));
      for (const auto& line : r.trace) out << line << '\n';
    }
  }
}

}  // namespace elympus
