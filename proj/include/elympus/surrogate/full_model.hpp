#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "elympus/linkage/hyperplane.hpp"
#include "elympus/problems/evaluator.hpp"
#include "elympus/surrogate/store.hpp"

namespace elympus {

struct LympusRow {
  std::size_t g = 0;
  Hyperplane context;
  Preference pref = Preference::kBoth;
};

/// One row per variable and per assignment of its close context in `graph`,
/// contexts enumerated with the lowest-index neighbour most significant.
/// Each row is b*_g at the context completed with zeros elsewhere.
std::vector<LympusRow> lympus_rows(Evaluator& eval, const Vig& graph, Purpose purpose = Purpose::kOracle);

// Store over `graph` holding one pair per row of lympus_rows.
SurrogateStore build_full_store(Evaluator& eval, const Vig& graph, Purpose purpose = Purpose::kOracle);

// Walkthrough store for fe2: the partial graph plus eleven stored pairs.
SurrogateStore fe2_walkthrough_store();

}  // namespace elympus
