#pragma once

// Word-level bit kernels shared by the surrogate, the hill climber and PX.
//
// Every routine operates on packed 64-bit words. A scalar reference
// implementation is always available; vectorized variants (AVX2 on x86-64,
// NEON on AArch64) are selected at runtime when the CPU supports them and
// must be bit-identical to the scalar reference.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace elympus::simd {

using Word = std::uint64_t;

struct BitKernels {
  std::string_view name;

  // true iff ((a ^ b) & mask) == 0 over all words
  bool (*masked_equal)(const Word* a, const Word* b, const Word* mask, std::size_t words);
  bool (*equal)(const Word* a, const Word* b, std::size_t words);
  // out = a ^ b
  void (*xor_words)(const Word* a, const Word* b, Word* out, std::size_t words);
  // out = base with the bits selected by mask taken from donor
  void (*blend)(const Word* base, const Word* donor, const Word* mask, Word* out,
                std::size_t words);
  // out = a & ~b
  void (*and_not)(const Word* a, const Word* b, Word* out, std::size_t words);
  std::size_t (*hamming)(const Word* a, const Word* b, std::size_t words);
  // Hash of (x & mask). Identical across all kernel sets.
  std::uint64_t (*masked_hash)(const Word* x, const Word* mask, std::size_t words);
  std::uint64_t (*hash)(const Word* x, std::size_t words);
};

enum class KernelLevel { kScalar, kAvx2, kNeon };

const BitKernels& scalar_kernels();

// nullptr when the variant was not compiled in or the CPU lacks support.
const BitKernels* avx2_kernels();
const BitKernels* neon_kernels();

// Every kernel set usable on this machine, scalar first.
std::vector<const BitKernels*> available_kernels();

// The process-wide kernel set. Defaults to the widest supported variant;
// ELYMPUS_KERNELS=scalar in the environment forces the reference path.
const BitKernels& kernels();

// Overrides the active set (tests and benchmarks). Returns false when the
// requested level is unavailable.
bool select_kernels(KernelLevel level);

// Hash mixing shared by every kernel set.
inline std::uint64_t mix_word(std::uint64_t h, std::uint64_t w) {
  w *= 0x9E3779B97F4A7C15ULL;
  w ^= w >> 32;
  h ^= w + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
  return h;
}

inline std::uint64_t finish_hash(std::uint64_t h) {
  h ^= h >> 33;
  h *= 0xFF51AFD7ED558CCDULL;
  h ^= h >> 33;
  h *= 0xC4CEB9FE1A85EC53ULL;
  h ^= h >> 33;
  return h;
}

}  // namespace elympus::simd
