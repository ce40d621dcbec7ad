#include "elympus/olympus/optimizer.hpp"

#include <algorithm>

#include "elympus/common/errors.hpp"
#include "elympus/px/pxrll.hpp"

namespace elympus {

std::string_view optimizer_name(OptimizerKind k) {
  switch (k) {
    case OptimizerKind::kOlympus: return "olympus";
    case OptimizerKind::kFihcOnly: return "fihc-only";
    case OptimizerKind::kFihcTrue: return "fihc-true";
  }
  return "unknown";
}

OptimizerKind parse_optimizer(std::string_view text) {
  if (text == "olympus") return OptimizerKind::kOlympus;
  if (text == "fihc-only") return OptimizerKind::kFihcOnly;
  if (text == "fihc-true" || text == "fihc-true-fitness") return OptimizerKind::kFihcTrue;
  throw SpecError("unknown optimizer '" + std::string(text) + "' (expected olympus, fihc-only or fihc-true)");
}

std::string_view termination_name(Termination t) {
  switch (t) {
    case Termination::kOptimum: return "optimum";
    case Termination::kFfeBudget: return "ffe_budget";
    case Termination::kTimeBudget: return "time_budget";
  }
  return "unknown";
}

OptimizerRun::OptimizerRun(const ProblemInstance& instance, RunOptions options, SurrogateStore* external_store)
    : instance_(instance),
      options_(std::move(options)),
      eval_(instance_, counter_),
      store_(external_store),
      rng_(options_.seed),
      scheduler_(options_.verify),
      start_(std::chrono::steady_clock::now()) {
  if (!store_) {
    owned_store_ = std::make_unique<SurrogateStore>(instance.n());
    store_ = owned_store_.get();
  } else if (store_->n() != instance.n()) {
    throw InstanceShapeError("external store size does not match the instance");
  }
}

bool OptimizerRun::should_stop() {
  if (stop_) return true;
  if (eval_.optimum_reached()) {
    stop_ = Termination::kOptimum;
  } else if (counter_.true_evals() >= options_.budgets.ffe) {
    stop_ = Termination::kFfeBudget;
  } else if (std::chrono::steady_clock::now() - start_ >= options_.budgets.wall_clock) {
    stop_ = Termination::kTimeBudget;
  }
  return stop_.has_value();
}

void OptimizerRun::random_solution(Solution& x) {
  x = Solution(instance_.n());
  for (std::size_t i = 0; i < instance_.n(); ++i) x.set(i, rng_.coin());
}

FihcStats OptimizerRun::climb(Solution& x, const Solution* known) {
  FihcOptions opts;
  opts.known = known;
  opts.ffe_limit = options_.budgets.ffe;
  opts.descent_audit = options_.descent_audit;
  if (options_.trace) {
    opts.observer = [this](const FihcTraceEvent& e) {
      options_.trace(std::to_string(++flip_steps_) + " x" + std::to_string(e.index + 1) + " " + to_string(e.pref) +
                     (e.verified ? " verified" : " unverified") + (e.surrogate ? " surrogate" : " computed") +
                     (e.circuit == CircuitOutcome::kNone ? "" : " circuit"));
    };
  }
  if (options_.optimizer == OptimizerKind::kFihcTrue) return fihc_true(x, eval_, rng_, opts);
  return fihc_elympus(x, *store_, eval_, rng_, scheduler_, opts);
}

bool OptimizerRun::ils_like_opt(Solution& x) {
  const double start = eval_.fitness(x, Purpose::kHarness);
  for (auto g : rng_.permutation(instance_.n())) {
    if (should_stop()) break;
    Solution y = x;
    y.set(g, rng_.coin());
    store_->vig().row(g).for_each_set([&](std::uint32_t v) { y.set(v, rng_.coin()); });
    if (y.bits() == x.bits()) continue;
    climb(y, &x);
    eval_.reuse(y, x);
    const double fy = eval_.fitness(y, Purpose::kHarness);
    if (eval_.compare(fy, eval_.fitness(x, Purpose::kHarness)) != Relation::kLess) x = std::move(y);
  }
  return eval_.compare(eval_.fitness(x, Purpose::kHarness), start) == Relation::kGreater;
}

void OptimizerRun::olympus_iteration() {
  ++iterations_;
  px_link_discovery(*store_, eval_, rng_);
  if (should_stop()) return;

  Solution climber;
  random_solution(climber);
  climb(climber);
  eval_.fitness(climber, Purpose::kHarness);
  const bool inserted = pyramid_.insert(0, climber);
  const BitVector local_optimum = climber.bits();
  if (should_stop()) return;

  bool fresh = false;
  if (ils_like_opt(climber)) {
    fresh = pyramid_.insert(std::min<std::size_t>(1, pyramid_.levels()), climber);
  } else {
    fresh = climber.bits() == local_optimum ? inserted : !pyramid_.contains(climber.bits());
  }
  // A climber already held by the pyramid is not mixed again.
  if (!fresh) return;

  for (std::size_t level = 0; level < pyramid_.levels(); ++level) {
    if (should_stop()) return;
    bool improved = false;
    std::vector<std::uint32_t> order(pyramid_.level(level).size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::uint32_t>(i);
    rng_.shuffle(order);
    for (auto idx : order) {
      if (should_stop()) break;
      Solution& donor = pyramid_.level(level)[idx];
      if (donor.bits() == climber.bits()) continue;
      PxrllResult mixed = pxrll(*store_, eval_, rng_, climber, donor);
      const double before = eval_.fitness(climber, Purpose::kHarness);
      const double after = eval_.fitness(mixed.offspring, Purpose::kHarness);
      const Relation rel = eval_.compare(after, before);
      if (rel == Relation::kLess) continue;
      if (rel == Relation::kGreater) improved = true;
      climber = std::move(mixed.offspring);
    }
    if (improved) pyramid_.insert(level + 1, climber);
  }
}

RunResult OptimizerRun::run() {
  while (!should_stop()) {
    switch (options_.optimizer) {
      case OptimizerKind::kOlympus:
        olympus_iteration();
        break;
      case OptimizerKind::kFihcOnly:
      case OptimizerKind::kFihcTrue: {
        ++iterations_;
        Solution x;
        random_solution(x);
        climb(x);
        eval_.fitness(x, Purpose::kHarness);
        break;
      }
    }
  }
  return result();
}

RunResult OptimizerRun::result() const {
  RunResult r;
  r.best_bits = eval_.best_bits();
  r.best_fitness = eval_.best_fitness();
  r.trajectory.assign(eval_.improvements().begin(), eval_.improvements().end());
  std::size_t edges = 0;
  for (const auto& d : store_->discoveries()) r.discovery_trajectory.push_back({d.ffe, d.surrogate, ++edges, d.source});
  r.ffe_by_purpose = counter_.breakdown();
  r.discoveries_by_source = store_->discoveries_by_source();
  r.true_evals = counter_.true_evals();
  r.surrogate_answers = counter_.surrogate_answers();
  if (!r.trajectory.empty()) {
    r.ffe_until_best = r.trajectory.back().ffe;
    r.surrogate_until_best = r.trajectory.back().surrogate;
  }
  r.edges = store_->vig().edge_count();
  r.pairs = store_->pair_count();
  r.iterations = iterations_;
  r.pyramid_size = pyramid_.size();
  r.optimum_reached = eval_.optimum_reached();
  r.termination = stop_.value_or(r.optimum_reached ? Termination::kOptimum : Termination::kFfeBudget);
  r.vig = store_->vig();
  return r;
}

RunResult run(const ProblemInstance& instance, const RunOptions& options, SurrogateStore* store) {
  OptimizerRun state(instance, options, store);
  return state.run();
}

}  // namespace elympus
