#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace elympus {

enum class VerifyPolicy : std::uint8_t { kOneOverV, kAlways, kNever };

std::string_view policy_name(VerifyPolicy p);
VerifyPolicy parse_verify_policy(std::string_view text);

/// Decides per hill-climber execution whether stored answers are verified.
/// Under the 1/v-th rule, after v clean verified executions the next v+1
/// executions run unverified.
class VerifyScheduler {
 public:
  explicit VerifyScheduler(VerifyPolicy policy = VerifyPolicy::kOneOverV) : policy_(policy) {}

  // Verify flag for the next execution.
  bool schedule();
  // Report the execution's outcome.
  void complete(bool verified, bool discovered);

  VerifyPolicy policy() const { return policy_; }
  std::uint64_t v() const { return v_; }
  std::uint64_t skip_remaining() const { return skip_; }

 private:
  VerifyPolicy policy_;
  std::uint64_t v_ = 0;
  std::uint64_t skip_ = 0;
};

}  // namespace elympus
