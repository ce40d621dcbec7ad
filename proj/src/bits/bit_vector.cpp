#include "elympus/bits/bit_vector.hpp"

#include <bit>
#include <stdexcept>

#include "elympus/bits/kernels.hpp"

namespace elympus {
namespace {

void require_same_size(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("bit vectors differ in length");
}

}  // namespace

BitVector::BitVector(std::size_t size, bool value)
    : size_(size), words_((size + kWordBits - 1) / kWordBits, value ? ~Word{0} : Word{0}) {
  if (value && size % kWordBits != 0) words_.back() &= (Word{1} << (size % kWordBits)) - 1;
}

BitVector BitVector::from_string(std::string_view text) {
  std::size_t n = 0;
  for (char c : text) {
    if (c == '0' || c == '1') {
      ++n;
    } else if (c != ' ' && c != '_' && c != '|') {
      throw std::invalid_argument("invalid character in bit string: '" + std::string(1, c) + "'");
    }
  }
  BitVector out(n);
  std::size_t i = 0;
  for (char c : text) {
    if (c == '0' || c == '1') out.set(i++, c == '1');
  }
  return out;
}

BitVector BitVector::from_indices(std::size_t size, std::span<const std::uint32_t> indices) {
  BitVector out(size);
  for (auto i : indices) {
    if (i >= size) throw std::out_of_range("bit index out of range");
    out.set(i, true);
  }
  return out;
}

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<std::uint32_t> BitVector::indices() const {
  std::vector<std::uint32_t> out;
  for_each_set([&](std::uint32_t i) { out.push_back(i); });
  return out;
}

std::string BitVector::to_string(std::size_t group) const {
  std::string out;
  out.reserve(size_ + (group > 0 ? size_ / group : 0));
  for (std::size_t i = 0; i < size_; ++i) {
    if (group > 0 && i > 0 && i % group == 0) out.push_back(' ');
    out.push_back(get(i) ? '1' : '0');
  }
  return out;
}

std::uint64_t BitVector::hash() const { return simd::kernels().hash(words_.data(), words_.size()); }

bool operator==(const BitVector& a, const BitVector& b) {
  return a.size_ == b.size_ && simd::kernels().equal(a.words_.data(), b.words_.data(), a.words_.size());
}

BitVector diff(const BitVector& a, const BitVector& b) {
  require_same_size(a, b);
  BitVector out(a.size());
  simd::kernels().xor_words(a.words().data(), b.words().data(), out.mutable_words().data(), a.word_count());
  return out;
}

std::size_t hamming(const BitVector& a, const BitVector& b) {
  require_same_size(a, b);
  return simd::kernels().hamming(a.words().data(), b.words().data(), a.word_count());
}

bool masked_equal(const BitVector& a, const BitVector& b, const BitVector& mask) {
  require_same_size(a, b);
  require_same_size(a, mask);
  return simd::kernels().masked_equal(a.words().data(), b.words().data(), mask.words().data(), a.word_count());
}

std::uint64_t masked_hash(const BitVector& x, const BitVector& mask) {
  require_same_size(x, mask);
  return simd::kernels().masked_hash(x.words().data(), mask.words().data(), x.word_count());
}

BitVector blend(const BitVector& base, const BitVector& donor, const BitVector& mask) {
  BitVector out(base.size());
  require_same_size(base, donor);
  require_same_size(base, mask);
  simd::kernels().blend(base.words().data(), donor.words().data(), mask.words().data(),
                        out.mutable_words().data(), base.word_count());
  return out;
}

void blend_into(BitVector& base, const BitVector& donor, const BitVector& mask) {
  require_same_size(base, donor);
  require_same_size(base, mask);
  simd::kernels().blend(base.words().data(), donor.words().data(), mask.words().data(),
                        base.mutable_words().data(), base.word_count());
}

BitVector and_not(const BitVector& a, const BitVector& b) {
  require_same_size(a, b);
  BitVector out(a.size());
  simd::kernels().and_not(a.words().data(), b.words().data(), out.mutable_words().data(), a.word_count());
  return out;
}

}  // namespace elympus
