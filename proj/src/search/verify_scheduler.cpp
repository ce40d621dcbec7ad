#include "elympus/search/verify_scheduler.hpp"

#include <algorithm>

#include "elympus/common/errors.hpp"

namespace elympus {

std::string_view policy_name(VerifyPolicy p) {
  switch (p) {
    case VerifyPolicy::kOneOverV: return "1/v";
    case VerifyPolicy::kAlways: return "always";
    case VerifyPolicy::kNever: return "never";
  }
  return "unknown";
}

VerifyPolicy parse_verify_policy(std::string_view text) {
  if (text == "1/v" || text == "1/v-th" || text == "one-over-v") return VerifyPolicy::kOneOverV;
  if (text == "always") return VerifyPolicy::kAlways;
  if (text == "never") return VerifyPolicy::kNever;
  throw SpecError("unknown verify policy '" + std::string(text) + "' (expected always, never or 1/v)");
}

bool VerifyScheduler::schedule() {
  switch (policy_) {
    case VerifyPolicy::kAlways: return true;
    case VerifyPolicy::kNever: return false;
    case VerifyPolicy::kOneOverV: break;
  }
  if (skip_ == 0) return true;
  --skip_;
  return false;
}

void VerifyScheduler::complete(bool verified, bool discovered) {
  if (policy_ != VerifyPolicy::kOneOverV) return;
  if (verified) {
    if (discovered) {
      v_ = 0;
      skip_ = 1;
    } else {
      ++v_;
      skip_ = v_ + 1;
    }
  } else if (discovered) {
    v_ = 0;
    skip_ = std::min<std::uint64_t>(skip_, 1);
  }
}

}  // namespace elympus
