#pragma once

#include <cmath>
#include <cstdint>

namespace elympus {

enum class Relation : std::int8_t { kLess = -1, kEqual = 0, kGreater = 1 };

// Three-way comparison with an absolute tolerance; eps = 0 gives exact
// comparison for integer-valued families.
inline Relation compare_fitness(double a, double b, double eps) {
  const double d = a - b;
  if (std::fabs(d) <= eps) return Relation::kEqual;
  return d < 0 ? Relation::kLess : Relation::kGreater;
}

inline Relation reverse(Relation r) { return static_cast<Relation>(-static_cast<int>(r)); }

inline char relation_symbol(Relation r) {
  switch (r) {
    case Relation::kLess: return '<';
    case Relation::kEqual: return '=';
    case Relation::kGreater: return '>';
  }
  return '?';
}

inline constexpr double kRealTolerance = 1e-9;

}  // namespace elympus
