#include "elympus/search/mods_log.hpp"

#include "elympus/common/errors.hpp"

namespace elympus {

void ModsLog::push(Move move) {
  if (!moves_.empty()) {
    BitVector expected = moves_.back().before.bits();
    expected.flip(moves_.back().index);
    if (!(expected == move.before.bits())) throw ContractError("move log entries must chain by single flips");
  }
  by_hash_.emplace(move.before.bits().hash(), moves_.size());
  moves_.push_back(std::move(move));
}

void ModsLog::clear() {
  moves_.clear();
  by_hash_.clear();
}

std::optional<std::size_t> ModsLog::find_revisit(const BitVector& x) const {
  std::optional<std::size_t> best;
  const auto range = by_hash_.equal_range(x.hash());
  for (auto it = range.first; it != range.second; ++it) {
    if (moves_[it->second].before.bits() == x && (!best || it->second < *best)) best = it->second;
  }
  return best;
}

}  // namespace elympus
