#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "elympus/bits/bit_vector.hpp"
#include "elympus/linkage/vig.hpp"

namespace elympus {

/// Partial assignment: values are meaningful only where `defined` is set.
struct Hyperplane {
  BitVector defined;
  BitVector values;

  std::size_t size() const { return defined.size(); }
  // '*' at undefined positions.
  std::string to_string(std::size_t group = 0) const;
  static Hyperplane parse(std::string_view text);
  bool contains(const BitVector& x) const { return masked_equal(x, values, defined); }
  friend bool operator==(const Hyperplane& a, const Hyperplane& b);
};

std::vector<std::uint32_t> close_context(const Vig& vig, std::size_t g);
Hyperplane context_hyperplane(const Vig& vig, std::size_t g, const BitVector& x);
bool contexts_equal(const Vig& vig, std::size_t g, const BitVector& xa, const BitVector& xb);

}  // namespace elympus
