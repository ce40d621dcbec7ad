#pragma once

#include <cstddef>
#include <optional>

#include "elympus/common/rng.hpp"
#include "elympus/problems/evaluator.hpp"
#include "elympus/surrogate/store.hpp"

namespace elympus {

struct BStar {
  Preference pref = Preference::kBoth;
  // x with g flipped, fitness cached.
  Solution flipped;
};

// b*_g(x): evaluates x (cache reused) and x^g.
BStar compute_b_star(Evaluator& eval, std::size_t g, Solution& x, Purpose purpose = Purpose::kBStar);

std::optional<StoredPair> find_pair(SurrogateStore& store, std::size_t g, const BitVector& x);

struct ComparisonOutcome {
  Preference pref = Preference::kBoth;
  bool surrogate = false;   // answered by a stored pair at zero cost
  bool verified = false;    // a stored answer was checked against b*
  bool discovery = false;   // missing linkage found and resolved
  std::optional<Solution> flipped;
};

// Partial comparison of x against x^g.
ComparisonOutcome partial_comparison(SurrogateStore& store, Evaluator& eval, RandomSource& rng, std::size_t g,
                                     Solution& x, bool verify);

}  // namespace elympus
