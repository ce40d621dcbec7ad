#include "elympus/surrogate/recursive_ll.hpp"

#include "elympus/common/errors.hpp"
#include "elympus/surrogate/comparison.hpp"

namespace elympus {

RecursiveLLResult recursive_ll(SurrogateStore& store, Evaluator& eval, RandomSource& rng, const BitVector& s1,
                               Preference pref1, const BitVector& s2, std::optional<Preference> pref2, std::size_t g,
                               DiscoverySource source, Purpose purpose) {
  if (s1.size() != store.n() || s2.size() != store.n()) throw InstanceShapeError("solution length mismatch");
  const std::uint64_t start = eval.counter().true_evals();
  if (!pref2) {
    Solution probe(s2);
    pref2 = compute_b_star(eval, g, probe, purpose).pref;
  }
  if (pref1 == *pref2) throw ContractError("recursive linkage learning needs conflicting preferences");

  BitVector diff_mask = diff(s1, s2);
  diff_mask.set(g, false);
  Group group = diff_mask.indices();
  if (group.empty()) throw ContractError("conflicting preferences on solutions equal outside the probed gene");

  RecursiveLLResult result;
  result.group_size = group.size();

  // The g bit of every intermediate solution is taken from s1; b* does not
  // depend on it.
  BitVector lo = s1;
  const Preference hi_pref = *pref2;
  while (group.size() > 1) {
    auto [a, b] = rng.split(group);
    BitVector mid = lo;
    for (auto i : a) mid.set(i, s2.get(i));
    Solution probe(mid);
    const Preference mid_pref = compute_b_star(eval, g, probe, purpose).pref;
    ++result.levels;
    if (mid_pref == hi_pref) {
      group = std::move(a);
    } else {
      lo = std::move(mid);
      group = std::move(b);
    }
  }
  const std::uint32_t c = group.front();
  result.edge = Edge{static_cast<std::uint32_t>(g), c};
  result.witness = lo;
  result.new_edge = store.add_edge(g, c, source, eval.counter().true_evals(), eval.counter().surrogate_answers(),
                                   ClauseClass::kForward);
  result.evals = eval.counter().true_evals() - start;
  return result;
}

}  // namespace elympus
