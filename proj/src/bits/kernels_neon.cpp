#include "elympus/bits/kernels.hpp"

#include <arm_neon.h>

#include <bit>

namespace elympus::simd {
namespace {

inline bool any_set(uint64x2_t v) { return (vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) != 0; }

bool masked_equal_neon(const Word* a, const Word* b, const Word* mask, std::size_t words) {
  std::size_t i = 0;
  uint64x2_t acc = vdupq_n_u64(0);
  for (; i + 2 <= words; i += 2) {
    acc = vorrq_u64(acc, vandq_u64(veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i)), vld1q_u64(mask + i)));
  }
  if (any_set(acc)) return false;
  for (; i < words; ++i) {
    if (((a[i] ^ b[i]) & mask[i]) != 0) return false;
  }
  return true;
}

bool equal_neon(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  uint64x2_t acc = vdupq_n_u64(0);
  for (; i + 2 <= words; i += 2) acc = vorrq_u64(acc, veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  if (any_set(acc)) return false;
  for (; i < words; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

void xor_neon(const Word* a, const Word* b, Word* out, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) vst1q_u64(out + i, veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < words; ++i) out[i] = a[i] ^ b[i];
}

void blend_neon(const Word* base, const Word* donor, const Word* mask, Word* out, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    // vbslq selects donor where mask is set
    vst1q_u64(out + i, vbslq_u64(vld1q_u64(mask + i), vld1q_u64(donor + i), vld1q_u64(base + i)));
  }
  for (; i < words; ++i) out[i] = base[i] ^ ((base[i] ^ donor[i]) & mask[i]);
}

void and_not_neon(const Word* a, const Word* b, Word* out, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) vst1q_u64(out + i, vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < words; ++i) out[i] = a[i] & ~b[i];
}

std::size_t hamming_neon(const Word* a, const Word* b, std::size_t words) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    const uint8x16_t bytes = vreinterpretq_u8_u64(veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    total += vaddvq_u8(vcntq_u8(bytes));
  }
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] ^ b[i]));
  return total;
}

std::uint64_t masked_hash_neon(const Word* x, const Word* mask, std::size_t words) {
  std::uint64_t h = words;
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    const uint64x2_t v = vandq_u64(vld1q_u64(x + i), vld1q_u64(mask + i));
    h = mix_word(h, vgetq_lane_u64(v, 0));
    h = mix_word(h, vgetq_lane_u64(v, 1));
  }
  for (; i < words; ++i) h = mix_word(h, x[i] & mask[i]);
  return finish_hash(h);
}

std::uint64_t hash_neon(const Word* x, std::size_t words) {
  std::uint64_t h = words;
  for (std::size_t i = 0; i < words; ++i) h = mix_word(h, x[i]);
  return finish_hash(h);
}

}  // namespace

const BitKernels& neon_kernel_table() {
  static const BitKernels k{
      "neon",       masked_equal_neon, equal_neon,       xor_neon,  blend_neon,
      and_not_neon, hamming_neon,      masked_hash_neon, hash_neon,
  };
  return k;
}

}  // namespace elympus::simd
