#pragma once

#include <optional>
#include <string_view>

#include "elympus/bits/bit_vector.hpp"

namespace elympus {

class Evaluator;

/// A genotype plus the cached fitness of exactly that genotype. Any mutation
/// that changes a bit drops the cache; only the Evaluator can fill it.
class Solution {
 public:
  Solution() = default;
  explicit Solution(std::size_t n) : bits_(n) {}
  explicit Solution(BitVector bits) : bits_(std::move(bits)) {}
  static Solution from_string(std::string_view text) { return Solution(BitVector::from_string(text)); }

  std::size_t size() const { return bits_.size(); }
  const BitVector& bits() const { return bits_; }
  bool operator[](std::size_t i) const { return bits_.get(i); }

  void set(std::size_t i, bool value) {
    if (bits_.get(i) != value) {
      bits_.set(i, value);
      fitness_.reset();
    }
  }
  void flip(std::size_t i) {
    bits_.flip(i);
    fitness_.reset();
  }
  void assign(BitVector bits) {
    if (!(bits == bits_)) fitness_.reset();
    bits_ = std::move(bits);
  }

  const std::optional<double>& fitness() const { return fitness_; }
  bool evaluated() const { return fitness_.has_value(); }

  std::string to_string(std::size_t group = 0) const { return bits_.to_string(group); }

 private:
  friend class Evaluator;

  BitVector bits_;
  std::optional<double> fitness_;
};

}  // namespace elympus
