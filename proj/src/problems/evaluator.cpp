#include "elympus/problems/evaluator.hpp"

#include <string>

#include "elympus/common/errors.hpp"

namespace elympus {

std::string_view purpose_name(Purpose p) {
  switch (p) {
    case Purpose::kBStar: return "bstar";
    case Purpose::kVerification: return "verification";
    case Purpose::kDiscovery: return "discovery";
    case Purpose::kCircuitCheck: return "circuit";
    case Purpose::kPxRegular: return "px_regular";
    case Purpose::kPxConsistency: return "px_consistency";
    case Purpose::kPxDiscovery: return "px_discovery";
    case Purpose::kInitPx: return "initpx";
    case Purpose::kInitPxDiscovery: return "initpx_discovery";
    case Purpose::kHarness: return "harness";
    case Purpose::kOracle: return "oracle";
    case Purpose::kCount: break;
  }
  return "unknown";
}

double Evaluator::evaluate(Solution& x, Purpose purpose) {
  if (x.size() != instance_->n()) {
    throw InstanceShapeError("solution has " + std::to_string(x.size()) + " bits, instance expects " +
                             std::to_string(instance_->n()));
  }
  const double value = instance_->value(x.bits_);
  counter_->record_true(purpose);
  x.fitness_ = value;
  if (!best_fitness_ || compare(value, *best_fitness_) == Relation::kGreater) {
    best_fitness_ = value;
    best_bits_ = x.bits_;
    improvements_.push_back({counter_->true_evals(), counter_->surrogate_answers(), value});
    const auto& optimum = instance_->known_optimum();
    if (optimum && compare(value, *optimum) != Relation::kLess) optimum_reached_ = true;
  }
  return value;
}

}  // namespace elympus
