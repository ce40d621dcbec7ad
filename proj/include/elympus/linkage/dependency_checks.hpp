#pragma once

#include <cstddef>
#include <cstdint>

#include "elympus/linkage/vig.hpp"
#include "elympus/problems/evaluator.hpp"

namespace elympus {

struct NonMonotonicity {
  // Bit c-1 set when clause Cc holds (c = 1..6).
  std::uint8_t clauses = 0;

  bool dependent() const { return clauses != 0; }
  bool holds(int clause) const { return ((clauses >> (clause - 1)) & 1U) != 0; }
  bool forward() const { return (clauses & 0x07U) != 0; }
  bool backward() const { return (clauses & 0x38U) != 0; }
  ClauseClass first_class() const {
    return forward() ? ClauseClass::kForward : backward() ? ClauseClass::kBackward : ClauseClass::kUnknown;
  }
};

// Clause evaluation from the four fitness values f(x), f(x^g), f(x^h), f(x^{g,h}).
NonMonotonicity classify_clauses(double fx, double fg, double fh, double fgh, double eps);

// Four evaluations (x's cache is reused when present).
NonMonotonicity non_monotonicity_check(Evaluator& eval, Solution& x, std::size_t g, std::size_t h,
                                       Purpose purpose = Purpose::kDiscovery);

bool non_linearity_check(Evaluator& eval, Solution& x, std::size_t g, std::size_t h,
                         Purpose purpose = Purpose::kDiscovery);

}  // namespace elympus
