#pragma once

#include <cstdint>
#include <vector>

#include "elympus/linkage/vig.hpp"
#include "elympus/problems/evaluator.hpp"

namespace elympus {

struct PxMask {
  BitVector bits;
  std::vector<std::uint32_t> indices;  // ascending
};

// Connected components of `vig` restricted to Diff(xa, xb), ordered by minimum index.
std::vector<PxMask> px_masks(const BitVector& xa, const BitVector& xb, const Vig& vig);

// x with the mask positions taken from partner.
Solution exchange(const Solution& x, const Solution& partner, const PxMask& mask);

struct ConsistencyVerdict {
  Relation relation_a = Relation::kEqual;  // f(xa) vs f(xoa)
  Relation relation_b = Relation::kEqual;  // f(xb) vs f(xob)
  bool consistent = true;
};

ConsistencyVerdict make_verdict(Relation relation_a, Relation relation_b);

struct ConsistencyProbe {
  ConsistencyVerdict verdict;
  Solution offspring_a;  // xa <-mask- xb
  Solution offspring_b;  // xb <-mask- xa
};

ConsistencyProbe consistency_check(Evaluator& eval, Solution& xa, Solution& xb, const PxMask& mask,
                                   Purpose purpose_a = Purpose::kPxRegular,
                                   Purpose purpose_b = Purpose::kPxConsistency);

}  // namespace elympus
