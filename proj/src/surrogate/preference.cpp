#include "elympus/surrogate/preference.hpp"

#include "elympus/common/errors.hpp"

namespace elympus {

std::string to_string(Preference p) {
  switch (p) {
    case Preference::kZero: return "{0}";
    case Preference::kOne: return "{1}";
    case Preference::kBoth: return "{0,1}";
  }
  return "{?}";
}

Preference parse_preference(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c == '0' || c == '1') compact.push_back(c);
  }
  if (compact == "0") return Preference::kZero;
  if (compact == "1") return Preference::kOne;
  if (compact == "01" || compact == "10") return Preference::kBoth;
  throw SpecError("bad preference set '" + std::string(text) + "'");
}

}  // namespace elympus
