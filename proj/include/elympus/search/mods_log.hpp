#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "elympus/problems/solution.hpp"
#include "elympus/surrogate/preference.hpp"

namespace elympus {

struct Move {
  Solution before;  // pre-move snapshot (fitness cached when known)
  std::uint32_t index = 0;
  Preference applied = Preference::kBoth;
};

/// Ordered log of the moves made by one hill-climber execution, with a hash
/// index over the pre-move snapshots for revisit detection.
class ModsLog {
 public:
  void push(Move move);
  void clear();

  std::size_t size() const { return moves_.size(); }
  bool empty() const { return moves_.empty(); }
  const Move& operator[](std::size_t i) const { return moves_[i]; }
  Move& operator[](std::size_t i) { return moves_[i]; }

  // Earliest logged snapshot equal to x.
  std::optional<std::size_t> find_revisit(const BitVector& x) const;

 private:
  std::vector<Move> moves_;
  std::unordered_multimap<std::uint64_t, std::size_t> by_hash_;
};

}  // namespace elympus
