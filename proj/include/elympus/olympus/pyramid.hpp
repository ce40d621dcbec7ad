#pragma once

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "elympus/problems/solution.hpp"

namespace elympus {

/// Levels of evaluated solutions with a global duplicate filter.
class Pyramid {
 public:
  // false (and no change) when the genotype is already present anywhere.
  bool insert(std::size_t level, const Solution& x);

  std::size_t levels() const { return levels_.size(); }
  std::vector<Solution>& level(std::size_t i) { return levels_[i]; }
  const std::vector<Solution>& level(std::size_t i) const { return levels_[i]; }
  std::size_t size() const { return members_.size(); }
  bool contains(const BitVector& x) const { return members_.count(x) != 0; }

 private:
  std::vector<std::vector<Solution>> levels_;
  std::unordered_set<BitVector, BitVectorHash> members_;
};

}  // namespace elympus
