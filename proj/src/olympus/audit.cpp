#include "elympus/olympus/audit.hpp"

#include "elympus/problems/evaluator.hpp"
#include "elympus/surrogate/comparison.hpp"

namespace elympus {

AuditReport audit_store(const ProblemInstance& instance, const SurrogateStore& store, const Vig* reference) {
  AuditReport report;
  if (reference) {
    report.vig_checked = true;
    for (const auto& e : store.vig().edges()) {
      if (!reference->has_edge(e.g, e.h)) report.spurious_edges.push_back(e);
    }
  }
  EvalCounter scratch;
  Evaluator eval(instance, scratch);
  for (std::size_t g = 0; g < store.n(); ++g) {
    for (const auto& pair : store.pairs(g)) {
      Solution x(pair.snapshot);
      ++report.pairs_checked;
      if (compute_b_star(eval, g, x, Purpose::kOracle).pref != pair.pref) ++report.pair_mismatches;
    }
  }
  return report;
}

}  // namespace elympus
