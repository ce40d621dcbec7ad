#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace elympus {

using Group = std::vector<std::uint32_t>;

/// Source of every random decision an optimizer run makes. The permutation
/// and group-split hooks are virtual so that scripted walkthroughs can pin
/// them; the defaults draw from next_u64().
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  virtual std::uint64_t next_u64() = 0;

  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return (next_u64() >> 63) != 0; }
  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  void shuffle(std::span<std::uint32_t> values);

  virtual std::vector<std::uint32_t> permutation(std::size_t n);

  // Random division into halves of sizes floor(|g|/2) and ceil(|g|/2).
  virtual std::pair<Group, Group> split(std::span<const std::uint32_t> group);
};

class Rng final : public RandomSource {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next_u64() override { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Seed of the i-th stream derived from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace elympus
