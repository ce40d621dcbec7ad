#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elympus/common/rng.hpp"
#include "elympus/olympus/pyramid.hpp"
#include "elympus/problems/evaluator.hpp"
#include "elympus/search/fihc.hpp"
#include "elympus/search/verify_scheduler.hpp"
#include "elympus/surrogate/store.hpp"

namespace elympus {

enum class OptimizerKind : std::uint8_t { kOlympus, kFihcOnly, kFihcTrue };
std::string_view optimizer_name(OptimizerKind k);
OptimizerKind parse_optimizer(std::string_view text);

enum class Termination : std::uint8_t { kOptimum, kFfeBudget, kTimeBudget };
std::string_view termination_name(Termination t);

struct Budgets {
  std::uint64_t ffe = 1'000'000;
  std::chrono::milliseconds wall_clock{600'000};
};

struct RunOptions {
  OptimizerKind optimizer = OptimizerKind::kOlympus;
  VerifyPolicy verify = VerifyPolicy::kOneOverV;
  Budgets budgets;
  std::uint64_t seed = 0;
  // End-of-climb descent check on unverified hill-climber executions.
  bool descent_audit = true;
  // One line per hill-climber flip when set.
  std::function<void(const std::string&)> trace;
};

struct DiscoveryPoint {
  std::uint64_t ffe = 0;
  std::uint64_t surrogate = 0;
  std::size_t edges = 0;
  DiscoverySource source = DiscoverySource::kExternal;
};

struct RunResult {
  BitVector best_bits;
  std::optional<double> best_fitness;
  std::vector<Evaluator::Improvement> trajectory;
  std::vector<DiscoveryPoint> discovery_trajectory;
  std::array<std::uint64_t, kPurposeCount> ffe_by_purpose{};
  std::array<std::size_t, kDiscoverySourceCount> discoveries_by_source{};
  std::uint64_t true_evals = 0;
  std::uint64_t surrogate_answers = 0;
  std::uint64_t ffe_until_best = 0;
  std::uint64_t surrogate_until_best = 0;
  std::size_t edges = 0;
  std::size_t pairs = 0;
  std::size_t iterations = 0;
  std::size_t pyramid_size = 0;
  bool optimum_reached = false;
  Termination termination = Termination::kFfeBudget;
  Vig vig;
};

/// One optimizer run. Owns every piece of mutable state unless an external
/// store is supplied.
class OptimizerRun {
 public:
  OptimizerRun(const ProblemInstance& instance, RunOptions options, SurrogateStore* external_store = nullptr);

  // Runs until a budget is exhausted or the optimum is reached.
  RunResult run();

  // One pyramid iteration (no budget checks between its steps beyond the
  // per-operation ones).
  void olympus_iteration();
  // One pass of context perturbation + climb over a random variable order.
  // Returns true on strict improvement of x.
  bool ils_like_opt(Solution& x);

  bool should_stop();
  RunResult result() const;

  SurrogateStore& store() { return *store_; }
  Evaluator& evaluator() { return eval_; }
  const EvalCounter& counter() const { return counter_; }
  Pyramid& pyramid() { return pyramid_; }
  VerifyScheduler& scheduler() { return scheduler_; }
  RandomSource& rng() { return rng_; }

 private:
  FihcStats climb(Solution& x, const Solution* known = nullptr);
  void random_solution(Solution& x);

  const ProblemInstance& instance_;
  RunOptions options_;
  EvalCounter counter_;
  Evaluator eval_;
  std::unique_ptr<SurrogateStore> owned_store_;
  SurrogateStore* store_;
  Rng rng_;
  VerifyScheduler scheduler_;
  Pyramid pyramid_;
  std::chrono::steady_clock::time_point start_;
  std::size_t iterations_ = 0;
  std::optional<Termination> stop_;
  std::uint64_t flip_steps_ = 0;
};

RunResult run(const ProblemInstance& instance, const RunOptions& options, SurrogateStore* store = nullptr);

}  // namespace elympus
