#include "elympus/px/partition_crossover.hpp"

#include "elympus/common/errors.hpp"

namespace elympus {

std::vector<PxMask> px_masks(const BitVector& xa, const BitVector& xb, const Vig& vig) {
  if (xa.size() != xb.size() || xa.size() != vig.n()) throw InstanceShapeError("parent or graph size mismatch");
  BitVector remaining = diff(xa, xb);
  if (remaining.none()) throw ContractError("partition crossover needs distinct parents");
  std::vector<PxMask> masks;
  const std::size_t n = xa.size();
  for (std::size_t start = 0; start < n; ++start) {
    if (!remaining.get(start)) continue;
    PxMask mask{BitVector(n), {}};
    std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(start)};
    remaining.set(start, false);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      mask.bits.set(v, true);
      const BitVector reach = blend(BitVector(n), vig.row(v), remaining);
      reach.for_each_set([&](std::uint32_t u) {
        remaining.set(u, false);
        stack.push_back(u);
      });
    }
    mask.indices = mask.bits.indices();
    masks.push_back(std::move(mask));
  }
  return masks;
}

Solution exchange(const Solution& x, const Solution& partner, const PxMask& mask) {
  if (!and_not(mask.bits, diff(x.bits(), partner.bits())).none()) {
    throw ContractError("mask must lie inside the parents' difference set");
  }
  return Solution(blend(x.bits(), partner.bits(), mask.bits));
}

ConsistencyVerdict make_verdict(Relation relation_a, Relation relation_b) {
  ConsistencyVerdict v{relation_a, relation_b, false};
  v.consistent = (relation_a == Relation::kEqual && relation_b == Relation::kEqual) ||
                 (relation_a != Relation::kEqual && relation_b == reverse(relation_a));
  return v;
}

ConsistencyProbe consistency_check(Evaluator& eval, Solution& xa, Solution& xb, const PxMask& mask,
                                   Purpose purpose_a, Purpose purpose_b) {
  ConsistencyProbe probe{{}, exchange(xa, xb, mask), exchange(xb, xa, mask)};
  const double fa = eval.fitness(xa, purpose_a);
  const double fb = eval.fitness(xb, purpose_b);
  const double foa = eval.evaluate(probe.offspring_a, purpose_a);
  const double fob = eval.evaluate(probe.offspring_b, purpose_b);
  probe.verdict = make_verdict(eval.compare(fa, foa), eval.compare(fb, fob));
  return probe;
}

}  // namespace elympus
