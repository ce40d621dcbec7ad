#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace elympus {

/// Fixed-length packed bit vector. Position 0 is the leftmost character of
/// the string form (x1 in the usual 1-based notation).
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size, bool value = false);

  // Accepts '0' / '1'; spaces, underscores and '|' are ignored.
  static BitVector from_string(std::string_view text);
  static BitVector from_indices(std::size_t size, std::span<const std::uint32_t> indices);

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  std::span<const Word> words() const { return words_; }
  std::span<Word> mutable_words() { return words_; }

  bool get(std::size_t i) const { return ((words_[i / kWordBits] >> (i % kWordBits)) & 1U) != 0; }
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool value) {
    const Word bit = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= bit;
    } else {
      words_[i / kWordBits] &= ~bit;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t count() const;
  bool none() const { return count() == 0; }

  // Set positions in ascending order.
  std::vector<std::uint32_t> indices() const;

  // Calls fn(i) for each set position in ascending order.
  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word word = words_[w];
      while (word != 0) {
        const int bit = __builtin_ctzll(word);
        fn(static_cast<std::uint32_t>(w * kWordBits + static_cast<std::size_t>(bit)));
        word &= word - 1;
      }
    }
  }

  // Groups of `group` characters separated by a space when group > 0.
  std::string to_string(std::size_t group = 0) const;

  std::uint64_t hash() const;

  friend bool operator==(const BitVector& a, const BitVector& b);

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

// Positions where a and b differ.
BitVector diff(const BitVector& a, const BitVector& b);
std::size_t hamming(const BitVector& a, const BitVector& b);
// true iff a and b agree on every position set in mask.
bool masked_equal(const BitVector& a, const BitVector& b, const BitVector& mask);
std::uint64_t masked_hash(const BitVector& x, const BitVector& mask);
// Copy of base with the positions set in mask taken from donor.
BitVector blend(const BitVector& base, const BitVector& donor, const BitVector& mask);
void blend_into(BitVector& base, const BitVector& donor, const BitVector& mask);
// a & ~b
BitVector and_not(const BitVector& a, const BitVector& b);

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const { return static_cast<std::size_t>(v.hash()); }
};

}  // namespace elympus
