#include "elympus/search/circuits.hpp"

#include "elympus/surrogate/comparison.hpp"
#include "elympus/surrogate/recursive_ll.hpp"

namespace elympus {

namespace {

// Shared tail of both audits: move j is known to disagree with the truth.
void resolve_faulty(CircuitReport& report, Move& move, Preference truth, SurrogateStore& store, Evaluator& eval,
                    RandomSource& rng) {
  const std::size_t g = move.index;
  const BitVector snapshot = move.before.bits();
  const auto hit = store.lookup(g, snapshot);
  report.outcome = CircuitOutcome::kResolved;
  if (hit && store.pairs(g)[hit->first].pref != truth) {
    const std::size_t pair_index = hit->first;
    const BitVector pair_snapshot = store.pairs(g)[pair_index].snapshot;
    Solution probe(pair_snapshot);
    const Preference pair_truth = compute_b_star(eval, g, probe, Purpose::kDiscovery).pref;
    if (pair_truth != truth) {
      const auto found =
          recursive_ll(store, eval, rng, snapshot, truth, pair_snapshot, pair_truth, g, DiscoverySource::kCircuit);
      if (found.new_edge) {
        report.outcome = CircuitOutcome::kDiscovered;
        report.edge = found.edge;
      }
      store.append(g, snapshot, truth);
    } else {
      store.set_preference(g, pair_index, pair_truth);
    }
  } else if (!hit) {
    store.append(g, snapshot, truth);
  }
}

}  // namespace

CircuitReport check_circuits(ModsLog& mods, const Solution& current, SurrogateStore& store, Evaluator& eval,
                             RandomSource& rng) {
  CircuitReport report;
  const auto start = mods.find_revisit(current.bits());
  if (!start) return report;
  report.revisit = start;

  const std::uint64_t before_scan = eval.counter().true_evals();
  const std::size_t end = mods.size();
  double f_before = eval.fitness(mods[*start].before, Purpose::kCircuitCheck);
  for (std::size_t j = *start; j < end; ++j) {
    Move& move = mods[j];
    const double f_after = j + 1 < end ? eval.fitness(mods[j + 1].before, Purpose::kCircuitCheck)
                                       : eval.fitness(mods[*start].before, Purpose::kCircuitCheck);
    const std::size_t g = move.index;
    const Preference truth = preference_from(move.before[g], eval.compare(f_after, f_before));
    if (truth != move.applied) {
      report.faulty = j;
      report.scan_evals = eval.counter().true_evals() - before_scan;
      resolve_faulty(report, move, truth, store, eval, rng);
      return report;
    }
    f_before = f_after;
  }
  report.scan_evals = eval.counter().true_evals() - before_scan;
  return report;
}

CircuitReport check_descent(ModsLog& mods, Solution& current, SurrogateStore& store, Evaluator& eval,
                            RandomSource& rng) {
  CircuitReport report;
  if (mods.empty()) return report;
  const std::uint64_t before_scan = eval.counter().true_evals();
  const std::size_t end = mods.size();
  auto fitness_at = [&](std::size_t i) {
    return i < end ? eval.fitness(mods[i].before, Purpose::kCircuitCheck) : eval.fitness(current, Purpose::kCircuitCheck);
  };
  std::size_t lo = 0, hi = end;
  double f_lo = fitness_at(lo);
  double f_hi = fitness_at(hi);
  if (eval.compare(f_hi, f_lo) == Relation::kGreater) {
    report.scan_evals = eval.counter().true_evals() - before_scan;
    return report;
  }
  report.revisit = 0;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const double f_mid = fitness_at(mid);
    if (eval.compare(f_mid, f_lo) == Relation::kGreater) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  Move& move = mods[lo];
  const Preference truth = preference_from(move.before[move.index], eval.compare(f_hi, f_lo));
  report.faulty = lo;
  report.scan_evals = eval.counter().true_evals() - before_scan;
  resolve_faulty(report, move, truth, store, eval, rng);
  return report;
}

}  // namespace elympus
