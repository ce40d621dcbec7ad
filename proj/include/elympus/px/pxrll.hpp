#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "elympus/common/rng.hpp"
#include "elympus/px/partition_crossover.hpp"
#include "elympus/surrogate/store.hpp"

namespace elympus {

struct PxMaskOutcome {
  std::size_t size = 0;
  ConsistencyVerdict verdict;
  bool applied = false;
  std::optional<std::uint32_t> outside;  // gene isolated outside the mask
  std::optional<Edge> edge;              // (outside gene, mask gene)
  std::uint64_t discovery_evals = 0;
};

struct PxrllResult {
  // Receiver after greedily taking every consistent, not-worse mask from the donor.
  Solution offspring;
  bool improved = false;
  std::vector<Edge> discoveries;
  std::vector<PxMaskOutcome> masks;
};

struct PxCharges {
  Purpose regular = Purpose::kPxRegular;
  Purpose consistency = Purpose::kPxConsistency;
  Purpose discovery = Purpose::kPxDiscovery;
  DiscoverySource source = DiscoverySource::kPxrll;
};

/// Partition crossover of donor into receiver over the store's graph, with
/// linkage learning on inconsistent masks.
PxrllResult pxrll(SurrogateStore& store, Evaluator& eval, RandomSource& rng, Solution& receiver, Solution& donor,
                  const PxCharges& charges = {});

/// Given a mask whose verdict is inconsistent for (receiver, donor), isolates a
/// gene outside the mask by bisection and then searches the mask for its
/// partner. Offspring must carry fitness.
PxMaskOutcome resolve_inconsistent_mask(SurrogateStore& store, Evaluator& eval, RandomSource& rng,
                                        Solution& receiver, Solution& donor, const PxMask& mask,
                                        Solution& offspring_receiver, Solution& offspring_donor,
                                        const PxCharges& charges);

// Two random parents, one random mask probed; bisection only on inconsistency.
std::vector<Edge> px_link_discovery(SurrogateStore& store, Evaluator& eval, RandomSource& rng);

}  // namespace elympus
