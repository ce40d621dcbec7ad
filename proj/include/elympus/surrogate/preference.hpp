#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "elympus/bits/bit_vector.hpp"
#include "elympus/common/fitness_order.hpp"

namespace elympus {

// Preferred value(s) of a variable: {0}, {1} or {0,1}.
enum class Preference : std::uint8_t { kZero = 1, kOne = 2, kBoth = 3 };

inline bool singleton(Preference p) { return p != Preference::kBoth; }
inline bool preferred_value(Preference p) { return p == Preference::kOne; }
inline Preference preference_of(bool value) { return value ? Preference::kOne : Preference::kZero; }

// b* from the relation of f(x^g) to f(x), where current is x_g.
inline Preference preference_from(bool current, Relation flipped_vs_current) {
  switch (flipped_vs_current) {
    case Relation::kGreater: return preference_of(!current);
    case Relation::kLess: return preference_of(current);
    case Relation::kEqual: break;
  }
  return Preference::kBoth;
}

std::string to_string(Preference p);
Preference parse_preference(std::string_view text);

struct StoredPair {
  BitVector snapshot;
  Preference pref = Preference::kBoth;
};

}  // namespace elympus
