#include <atomic>
#include <cstdlib>
#include <string_view>

#include "elympus/bits/kernels.hpp"

namespace elympus::simd {

#if defined(ELYMPUS_HAVE_AVX2_TU)
const BitKernels& avx2_kernel_table();
#endif
#if defined(ELYMPUS_HAVE_NEON_TU)
const BitKernels& neon_kernel_table();
#endif

const BitKernels* avx2_kernels() {
#if defined(ELYMPUS_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const BitKernels* neon_kernels() {
#if defined(ELYMPUS_HAVE_NEON_TU)
  // Advanced SIMD is mandatory on AArch64.
  return &neon_kernel_table();
#else
  return nullptr;
#endif
}

std::vector<const BitKernels*> available_kernels() {
  std::vector<const BitKernels*> out{&scalar_kernels()};
  if (const auto* k = avx2_kernels()) out.push_back(k);
  if (const auto* k = neon_kernels()) out.push_back(k);
  return out;
}

namespace {

const BitKernels* initial_kernels() {
  if (const char* env = std::getenv("ELYMPUS_KERNELS")) {
    if (std::string_view(env) == "scalar") return &scalar_kernels();
  }
  if (const auto* k = avx2_kernels()) return k;
  if (const auto* k = neon_kernels()) return k;
  return &scalar_kernels();
}

std::atomic<const BitKernels*>& active() {
  static std::atomic<const BitKernels*> current{initial_kernels()};
  return current;
}

}  // namespace

const BitKernels& kernels() { return *active().load(std::memory_order_relaxed); }

bool select_kernels(KernelLevel level) {
  const BitKernels* k = nullptr;
  switch (level) {
    case KernelLevel::kScalar: k = &scalar_kernels(); break;
    case KernelLevel::kAvx2: k = avx2_kernels(); break;
    case KernelLevel::kNeon: k = neon_kernels(); break;
  }
  if (k == nullptr) return false;
  active().store(k, std::memory_order_relaxed);
  return true;
}

}  // namespace elympus::simd
