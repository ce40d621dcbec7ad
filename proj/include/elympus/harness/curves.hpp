#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elympus/harness/records.hpp"

namespace elympus {

struct CurvePoint {
  std::uint64_t ffe = 0;
  double fitness = 0.0;       // fraction of the optimum, or raw when unknown
  double dependencies = 0.0;  // fraction of the reference edges
  std::uint64_t surrogate = 0;
};

struct Curves {
  bool fitness_is_fraction = true;
  std::vector<CurvePoint> points;
};

// Best fitness, dependency fraction and cumulative surrogate answers, aligned
// on every FFE value at which one of them changed.
Curves build_curves(const RunRecord& record);
std::string curves_csv(const Curves& curves);
void emit_curves(const RunRecord& record, const std::string& path);

}  // namespace elympus
