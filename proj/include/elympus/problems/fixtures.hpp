#pragma once

#include "elympus/linkage/vig.hpp"
#include "elympus/problems/problem_instance.hpp"

namespace elympus::fixtures {

// Product of (xor(x_i, x_{i+1}) + 1) over the chain x1..x4.
ProblemInstance fe1();

// bim4(x1..x4) + bim4(x3..x6) + bim4(x5..x8).
ProblemInstance fe2();

// bim4(x1..x4) + bim4(x5..x8).
ProblemInstance two_block_bim4();

// Chain x1-x2-x3-x4.
Vig chain4_vig();

// Pairs {x1,x2}, {x3,x4}, {x5,x6}, {x7,x8}: the incomplete graph of the fe2 walkthroughs.
Vig fe2_partial_vig();

// Sum of bits.
ProblemInstance onemax(std::size_t n);

}  // namespace elympus::fixtures
