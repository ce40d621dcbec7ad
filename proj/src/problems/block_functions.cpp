#include "elympus/problems/block_functions.hpp"

#include <cstdlib>
#include <string>

#include "elympus/common/errors.hpp"

namespace elympus {

double bim_k(int u, int k) {
  if (k <= 0 || k % 2 != 0) throw DomainError("bim_k requires a positive even block size, got " + std::to_string(k));
  if (u < 0 || u > k) throw DomainError("bim_k unitation " + std::to_string(u) + " outside [0, " + std::to_string(k) + "]");
  const int half = k / 2;
  if (u == 0 || u == k) return half;
  return half - std::abs(u - half) - 1;
}

double dec_k(int u, int k) {
  if (k <= 0) throw DomainError("dec_k requires a positive block size");
  if (u < 0 || u > k) throw DomainError("dec_k unitation " + std::to_string(u) + " outside [0, " + std::to_string(k) + "]");
  if (u == k) return k;
  return k - 1 - u;
}

}  // namespace elympus
