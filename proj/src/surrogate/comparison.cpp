#include "elympus/surrogate/comparison.hpp"

#include <stdexcept>

#include "elympus/surrogate/recursive_ll.hpp"

namespace elympus {

BStar compute_b_star(Evaluator& eval, std::size_t g, Solution& x, Purpose purpose) {
  if (g >= x.size()) throw std::out_of_range("variable index out of range");
  const double fx = eval.fitness(x, purpose);
  BStar out;
  out.flipped = x;
  out.flipped.flip(g);
  const double fg = eval.evaluate(out.flipped, purpose);
  out.pref = preference_from(x[g], eval.compare(fg, fx));
  return out;
}

std::optional<StoredPair> find_pair(SurrogateStore& store, std::size_t g, const BitVector& x) {
  const auto hit = store.lookup(g, x);
  if (!hit) return std::nullopt;
  return store.pairs(g)[hit->first];
}

ComparisonOutcome partial_comparison(SurrogateStore& store, Evaluator& eval, RandomSource& rng, std::size_t g,
                                     Solution& x, bool verify) {
  ComparisonOutcome out;
  auto hit = store.lookup(g, x.bits());
  while (hit && hit->conflict) {
    const StoredPair a = store.pairs(g)[hit->first];
    const StoredPair b = store.pairs(g)[*hit->conflict];
    const auto found = recursive_ll(store, eval, rng, a.snapshot, a.pref, b.snapshot, b.pref, g,
                                    DiscoverySource::kConflict);
    out.discovery = true;
    if (!found.new_edge) break;
    hit = store.lookup(g, x.bits());
  }

  if (hit && !verify) {
    out.pref = store.pairs(g)[hit->first].pref;
    out.surrogate = true;
    eval.note_surrogate_answer();
    return out;
  }

  BStar computed = compute_b_star(eval, g, x, hit ? Purpose::kVerification : Purpose::kBStar);
  out.pref = computed.pref;
  out.flipped = std::move(computed.flipped);
  if (hit) {
    out.verified = true;
    const StoredPair pair = store.pairs(g)[hit->first];
    if (pair.pref == out.pref) return out;
    recursive_ll(store, eval, rng, pair.snapshot, pair.pref, x.bits(), out.pref, g, DiscoverySource::kVerification);
    out.discovery = true;
  }
  store.append(g, x.bits(), out.pref);
  return out;
}

}  // namespace elympus
