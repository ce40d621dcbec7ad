#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "elympus/common/rng.hpp"
#include "elympus/problems/evaluator.hpp"
#include "elympus/search/mods_log.hpp"
#include "elympus/surrogate/store.hpp"

namespace elympus {

enum class CircuitOutcome : std::uint8_t {
  kNone,        // no revisit
  kDiscovered,  // revisit traced to missing linkage; one edge added
  kResolved,    // revisit traced to a stale answer fixed without a new edge
};

struct CircuitReport {
  CircuitOutcome outcome = CircuitOutcome::kNone;
  std::optional<std::size_t> revisit;  // index of the matching earlier snapshot
  std::optional<std::size_t> faulty;   // index of the non-improving move
  std::uint64_t scan_evals = 0;
  std::optional<Edge> edge;

  bool fired() const { return outcome != CircuitOutcome::kNone; }
};

/// Called after each applied flip with the post-move solution. On a revisit
/// the moves from the earliest matching snapshot are re-evaluated in order
/// until the first one that did not improve.
CircuitReport check_circuits(ModsLog& mods, const Solution& current, SurrogateStore& store, Evaluator& eval,
                             RandomSource& rng);

/// End-of-climb audit: every logged move claimed a strict improvement, so a
/// final fitness not above the first snapshot's proves a wrong answer. The
/// faulty move is located by bisection over the log.
CircuitReport check_descent(ModsLog& mods, Solution& current, SurrogateStore& store, Evaluator& eval,
                            RandomSource& rng);

}  // namespace elympus
