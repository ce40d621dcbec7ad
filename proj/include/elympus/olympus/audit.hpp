#pragma once

#include <cstddef>
#include <vector>

#include "elympus/linkage/vig.hpp"
#include "elympus/problems/problem_instance.hpp"
#include "elympus/surrogate/store.hpp"

namespace elympus {

struct AuditReport {
  bool vig_checked = false;
  std::vector<Edge> spurious_edges;  // in the store's graph but not in the reference
  std::size_t pairs_checked = 0;
  std::size_t pair_mismatches = 0;

  bool clean() const { return spurious_edges.empty() && pair_mismatches == 0; }
};

// Recomputes every stored pair with a private counter; compares the graph
// against `reference` when given.
AuditReport audit_store(const ProblemInstance& instance, const SurrogateStore& store, const Vig* reference);

}  // namespace elympus
