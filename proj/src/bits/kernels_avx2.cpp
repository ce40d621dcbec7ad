#include "elympus/bits/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace elympus::simd {
namespace {

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

bool masked_equal_avx2(const Word* a, const Word* b, const Word* mask, std::size_t words) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= words; i += 4) {
    acc = _mm256_or_si256(acc, _mm256_and_si256(_mm256_xor_si256(load(a + i), load(b + i)), load(mask + i)));
  }
  if (!_mm256_testz_si256(acc, acc)) return false;
  for (; i < words; ++i) {
    if (((a[i] ^ b[i]) & mask[i]) != 0) return false;
  }
  return true;
}

bool equal_avx2(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= words; i += 4) acc = _mm256_or_si256(acc, _mm256_xor_si256(load(a + i), load(b + i)));
  if (!_mm256_testz_si256(acc, acc)) return false;
  for (; i < words; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

void xor_avx2(const Word* a, const Word* b, Word* out, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) store(out + i, _mm256_xor_si256(load(a + i), load(b + i)));
  for (; i < words; ++i) out[i] = a[i] ^ b[i];
}

void blend_avx2(const Word* base, const Word* donor, const Word* mask, Word* out, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i vb = load(base + i);
    const __m256i diff = _mm256_and_si256(_mm256_xor_si256(vb, load(donor + i)), load(mask + i));
    store(out + i, _mm256_xor_si256(vb, diff));
  }
  for (; i < words; ++i) out[i] = base[i] ^ ((base[i] ^ donor[i]) & mask[i]);
}

void and_not_avx2(const Word* a, const Word* b, Word* out, std::size_t words) {
  std::size_t i = 0;
  // _mm256_andnot_si256 computes ~x & y
  for (; i + 4 <= words; i += 4) store(out + i, _mm256_andnot_si256(load(b + i), load(a + i)));
  for (; i < words; ++i) out[i] = a[i] & ~b[i];
}

std::size_t hamming_avx2(const Word* a, const Word* b, std::size_t words) {
  std::size_t total = 0;
  std::size_t i = 0;
  alignas(32) Word lanes[4];
  for (; i + 4 <= words; i += 4) {
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_xor_si256(load(a + i), load(b + i)));
    total += static_cast<std::size_t>(_mm_popcnt_u64(lanes[0]) + _mm_popcnt_u64(lanes[1]) +
                                      _mm_popcnt_u64(lanes[2]) + _mm_popcnt_u64(lanes[3]));
  }
  for (; i < words; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(a[i] ^ b[i]));
  return total;
}

std::uint64_t masked_hash_avx2(const Word* x, const Word* mask, std::size_t words) {
  std::uint64_t h = words;
  std::size_t i = 0;
  alignas(32) Word lanes[4];
  for (; i + 4 <= words; i += 4) {
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_and_si256(load(x + i), load(mask + i)));
    h = mix_word(h, lanes[0]);
    h = mix_word(h, lanes[1]);
    h = mix_word(h, lanes[2]);
    h = mix_word(h, lanes[3]);
  }
  for (; i < words; ++i) h = mix_word(h, x[i] & mask[i]);
  return finish_hash(h);
}

std::uint64_t hash_avx2(const Word* x, std::size_t words) {
  std::uint64_t h = words;
  for (std::size_t i = 0; i < words; ++i) h = mix_word(h, x[i]);
  return finish_hash(h);
}

}  // namespace

const BitKernels& avx2_kernel_table() {
  static const BitKernels k{
      "avx2",       masked_equal_avx2, equal_avx2,       xor_avx2,  blend_avx2,
      and_not_avx2, hamming_avx2,      masked_hash_avx2, hash_avx2,
  };
  return k;
}

}  // namespace elympus::simd
