#include "elympus/bits/kernels.hpp"

#include <bit>

namespace elympus::simd {
namespace {

bool masked_equal_scalar(const Word* a, const Word* b, const Word* mask, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if (((a[i] ^ b[i]) & mask[i]) != 0) return false;
  }
  return true;
}

bool equal_scalar(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

void xor_scalar(const Word* a, const Word* b, Word* out, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) out[i] = a[i] ^ b[i];
}

void blend_scalar(const Word* base, const Word* donor, const Word* mask, Word* out,
                  std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) out[i] = base[i] ^ ((base[i] ^ donor[i]) & mask[i]);
}

void and_not_scalar(const Word* a, const Word* b, Word* out, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) out[i] = a[i] & ~b[i];
}

std::size_t hamming_scalar(const Word* a, const Word* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] ^ b[i]));
  return total;
}

std::uint64_t masked_hash_scalar(const Word* x, const Word* mask, std::size_t words) {
  std::uint64_t h = words;
  for (std::size_t i = 0; i < words; ++i) h = mix_word(h, x[i] & mask[i]);
  return finish_hash(h);
}

std::uint64_t hash_scalar(const Word* x, std::size_t words) {
  std::uint64_t h = words;
  for (std::size_t i = 0; i < words; ++i) h = mix_word(h, x[i]);
  return finish_hash(h);
}

}  // namespace

const BitKernels& scalar_kernels() {
  static const BitKernels k{
      "scalar",      masked_equal_scalar, equal_scalar,       xor_scalar, blend_scalar,
      and_not_scalar, hamming_scalar,     masked_hash_scalar, hash_scalar,
  };
  return k;
}

}  // namespace elympus::simd
