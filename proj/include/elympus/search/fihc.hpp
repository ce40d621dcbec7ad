#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>

#include "elympus/common/rng.hpp"
#include "elympus/problems/evaluator.hpp"
#include "elympus/search/circuits.hpp"
#include "elympus/search/verify_scheduler.hpp"
#include "elympus/surrogate/store.hpp"

namespace elympus {

struct FihcTraceEvent {
  std::uint64_t step = 0;
  std::uint32_t index = 0;
  Preference pref = Preference::kBoth;
  bool verified = false;   // execution runs with verification
  bool surrogate = false;  // answer came from a stored pair without evaluation
  CircuitOutcome circuit = CircuitOutcome::kNone;
};

using FihcObserver = std::function<void(const FihcTraceEvent&)>;

struct FihcOptions {
  FihcObserver observer;
  // Stop after the sweep in progress once this many true evaluations are spent.
  std::uint64_t ffe_limit = std::numeric_limits<std::uint64_t>::max();
  // Unverified executions end with check_descent over the moves since the last circuit.
  bool descent_audit = false;
  // Evaluated solution whose fitness may be reused when the climb ends on its genotype.
  const Solution* known = nullptr;
};

struct FihcStats {
  bool verified = false;
  std::size_t sweeps = 0;
  std::size_t flips = 0;
  std::size_t comparisons = 0;
  std::size_t surrogate_answers = 0;
  std::size_t discoveries = 0;
  std::size_t circuits = 0;
};

/// First-improvement hill climber driven by partial comparisons. The verify
/// flag is drawn from the scheduler, which is updated on return.
FihcStats fihc_elympus(Solution& x, SurrogateStore& store, Evaluator& eval, RandomSource& rng,
                       VerifyScheduler& scheduler, const FihcOptions& options = {});

// Same climb with an explicit verify flag; no scheduler involved.
FihcStats fihc_elympus_fixed(Solution& x, SurrogateStore& store, Evaluator& eval, RandomSource& rng, bool verify,
                             const FihcOptions& options = {});

// Reference climber on the true objective: one evaluation per probed flip.
FihcStats fihc_true(Solution& x, Evaluator& eval, RandomSource& rng, const FihcOptions& options = {},
                    Purpose purpose = Purpose::kHarness);

}  // namespace elympus
