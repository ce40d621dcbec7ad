#include "elympus/olympus/pyramid.hpp"

#include "elympus/common/errors.hpp"

namespace elympus {

bool Pyramid::insert(std::size_t level, const Solution& x) {
  if (!x.evaluated()) throw ContractError("pyramid members must carry their fitness");
  if (level > levels_.size()) throw ContractError("pyramid levels must be created in order");
  if (!members_.insert(x.bits()).second) return false;
  if (level == levels_.size()) levels_.emplace_back();
  levels_[level].push_back(x);
  return true;
}

}  // namespace elympus
