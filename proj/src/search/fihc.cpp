#include "elympus/search/fihc.hpp"

#include "elympus/common/errors.hpp"
#include "elympus/search/mods_log.hpp"
#include "elympus/surrogate/comparison.hpp"

namespace elympus {

FihcStats fihc_elympus(Solution& x, SurrogateStore& store, Evaluator& eval, RandomSource& rng,
                       VerifyScheduler& scheduler, const FihcOptions& options) {
  const bool verify = scheduler.schedule();
  FihcStats stats = fihc_elympus_fixed(x, store, eval, rng, verify, options);
  scheduler.complete(verify, stats.discoveries > 0);
  return stats;
}

FihcStats fihc_elympus_fixed(Solution& x, SurrogateStore& store, Evaluator& eval, RandomSource& rng, bool verify,
                             const FihcOptions& options) {
  if (x.size() != store.n()) throw InstanceShapeError("solution length does not match the store");
  FihcStats stats;
  stats.verified = verify;
  ModsLog mods;
  std::uint64_t step = 0;
  bool modified = true;
  while (modified) {
    if (eval.counter().true_evals() >= options.ffe_limit) break;
    modified = false;
    ++stats.sweeps;
    const auto order = rng.permutation(x.size());
    for (auto g : order) {
      ComparisonOutcome answer = partial_comparison(store, eval, rng, g, x, verify);
      ++stats.comparisons;
      if (answer.surrogate) ++stats.surrogate_answers;
      if (answer.discovery) ++stats.discoveries;
      if (!singleton(answer.pref) || preferred_value(answer.pref) == x[g]) continue;

      mods.push(Move{x, g, answer.pref});
      if (answer.flipped) {
        x = std::move(*answer.flipped);
      } else {
        x.flip(g);
      }
      ++stats.flips;
      modified = true;
      const CircuitReport circuit = check_circuits(mods, x, store, eval, rng);
      if (circuit.fired()) {
        ++stats.circuits;
        if (circuit.outcome == CircuitOutcome::kDiscovered) ++stats.discoveries;
        mods.clear();
      }
      if (options.observer) options.observer({++step, g, answer.pref, verify, answer.surrogate, circuit.outcome});
    }
  }
  if (options.descent_audit && !verify && !mods.empty()) {
    if (options.known) eval.reuse(x, *options.known);
    const CircuitReport descent = check_descent(mods, x, store, eval, rng);
    if (descent.fired()) {
      ++stats.circuits;
      if (descent.outcome == CircuitOutcome::kDiscovered) ++stats.discoveries;
    }
  }
  return stats;
}

FihcStats fihc_true(Solution& x, Evaluator& eval, RandomSource& rng, const FihcOptions& options, Purpose purpose) {
  FihcStats stats;
  stats.verified = true;
  double fx = eval.fitness(x, purpose);
  std::uint64_t step = 0;
  bool modified = true;
  while (modified) {
    if (eval.counter().true_evals() >= options.ffe_limit) break;
    modified = false;
    ++stats.sweeps;
    const auto order = rng.permutation(x.size());
    for (auto g : order) {
      Solution y = x;
      y.flip(g);
      const double fy = eval.evaluate(y, purpose);
      ++stats.comparisons;
      if (eval.compare(fy, fx) != Relation::kGreater) continue;
      x = std::move(y);
      fx = fy;
      ++stats.flips;
      modified = true;
      if (options.observer) {
        options.observer({++step, g, preference_of(x[g]), true, false, CircuitOutcome::kNone});
      }
    }
  }
  return stats;
}

}  // namespace elympus
