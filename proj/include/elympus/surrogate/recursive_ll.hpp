#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "elympus/common/rng.hpp"
#include "elympus/problems/evaluator.hpp"
#include "elympus/surrogate/store.hpp"

namespace elympus {

struct RecursiveLLResult {
  Edge edge;               // (g, c)
  BitVector witness;       // witness, g, c and {g, c} flips satisfy C1, C2 or C3
  bool new_edge = false;
  std::uint64_t evals = 0;
  std::size_t levels = 0;
  std::size_t group_size = 0;  // |C| at entry
};

/// Bisects the genes (other than g) that differ between s1 and s2, whose
/// b*_g values differ, down to a single gene c and records the edge (g, c).
/// When pref2 is absent b*_g(s2) is computed first. Throws ContractError when
/// the preferences agree or no other gene differs.
RecursiveLLResult recursive_ll(SurrogateStore& store, Evaluator& eval, RandomSource& rng, const BitVector& s1,
                               Preference pref1, const BitVector& s2, std::optional<Preference> pref2, std::size_t g,
                               DiscoverySource source, Purpose purpose = Purpose::kDiscovery);

}  // namespace elympus
