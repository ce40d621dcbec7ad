#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "elympus/bits/bit_vector.hpp"
#include "elympus/common/fitness_order.hpp"
#include "elympus/problems/eval_counter.hpp"
#include "elympus/problems/problem_instance.hpp"
#include "elympus/problems/solution.hpp"

namespace elympus {

/// The single counted gateway to the objective. Also tracks the best genotype
/// ever evaluated, which is what "FFE until best" is measured against.
class Evaluator {
 public:
  struct Improvement {
    std::uint64_t ffe = 0;
    std::uint64_t surrogate = 0;
    double fitness = 0.0;
  };

  Evaluator(const ProblemInstance& instance, EvalCounter& counter) : instance_(&instance), counter_(&counter) {}

  // Always performs (and counts) a true evaluation; caches the result on x.
  double evaluate(Solution& x, Purpose purpose);

  // Cached fitness when present, otherwise a counted evaluation.
  double fitness(Solution& x, Purpose purpose) {
    if (x.fitness_) return *x.fitness_;
    return evaluate(x, purpose);
  }

  // Copies the fitness of an evaluated solution with the same genotype; no evaluation.
  bool reuse(Solution& x, const Solution& known) const {
    if (x.fitness_ || !known.fitness_ || !(x.bits_ == known.bits_)) return x.fitness_.has_value();
    x.fitness_ = known.fitness_;
    return true;
  }

  void note_surrogate_answer() { counter_->record_surrogate(); }

  Relation compare(double a, double b) const { return compare_fitness(a, b, instance_->tolerance()); }

  const ProblemInstance& instance() const { return *instance_; }
  const EvalCounter& counter() const { return *counter_; }
  std::size_t n() const { return instance_->n(); }

  const std::optional<double>& best_fitness() const { return best_fitness_; }
  const BitVector& best_bits() const { return best_bits_; }
  std::span<const Improvement> improvements() const { return improvements_; }
  bool optimum_reached() const { return optimum_reached_; }

 private:
  const ProblemInstance* instance_;
  EvalCounter* counter_;
  std::optional<double> best_fitness_;
  BitVector best_bits_;
  std::vector<Improvement> improvements_;
  bool optimum_reached_ = false;
};

}  // namespace elympus
