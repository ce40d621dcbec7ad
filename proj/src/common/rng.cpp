#include "elympus/common/rng.hpp"

#include <numeric>

namespace elympus {

std::uint64_t RandomSource::below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

void RandomSource::shuffle(std::span<std::uint32_t> values) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(below(i));
    std::swap(values[i - 1], values[j]);
  }
}

std::vector<std::uint32_t> RandomSource::permutation(std::size_t n) {
  std::vector<std::uint32_t> out(n);
  std::iota(out.begin(), out.end(), 0U);
  shuffle(out);
  return out;
}

std::pair<Group, Group> RandomSource::split(std::span<const std::uint32_t> group) {
  Group shuffled(group.begin(), group.end());
  shuffle(shuffled);
  const std::size_t half = shuffled.size() / 2;
  Group a(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(half));
  Group b(shuffled.begin() + static_cast<std::ptrdiff_t>(half), shuffled.end());
  return {std::move(a), std::move(b)};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x5851F42D4C957F2DULL));
}

}  // namespace elympus
