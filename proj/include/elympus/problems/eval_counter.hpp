#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace elympus {

// What a true fitness evaluation was spent on.
enum class Purpose : std::uint8_t {
  kBStar,            // first b* for an unseen context
  kVerification,     // re-computing b* to verify a stored answer
  kDiscovery,        // recursive linkage discovery (bisection levels)
  kCircuitCheck,     // scanning a revisit circuit for the faulty move
  kPxRegular,        // PX offspring of the receiving parent
  kPxConsistency,    // mirrored PX offspring, needed only for the consistency check
  kPxDiscovery,      // PXrLL bisection
  kInitPx,           // link-discovery probe (random parents + one mask)
  kInitPxDiscovery,  // bisection escalated from the link-discovery probe
  kHarness,          // optimizer bookkeeping (new individuals, acceptance tests)
  kOracle,           // exhaustive ground-truth enumeration
  kCount,
};

inline constexpr std::size_t kPurposeCount = static_cast<std::size_t>(Purpose::kCount);

std::string_view purpose_name(Purpose p);

/// Tally of true evaluations (FFE) and surrogate-answered comparisons. Only
/// the Evaluator can increment it.
class EvalCounter {
 public:
  std::uint64_t true_evals() const { return true_evals_; }
  std::uint64_t surrogate_answers() const { return surrogate_answers_; }
  std::uint64_t by_purpose(Purpose p) const { return per_purpose_[static_cast<std::size_t>(p)]; }
  const std::array<std::uint64_t, kPurposeCount>& breakdown() const { return per_purpose_; }

 private:
  friend class Evaluator;

  void record_true(Purpose p) {
    ++true_evals_;
    ++per_purpose_[static_cast<std::size_t>(p)];
  }
  void record_surrogate() { ++surrogate_answers_; }

  std::uint64_t true_evals_ = 0;
  std::uint64_t surrogate_answers_ = 0;
  std::array<std::uint64_t, kPurposeCount> per_purpose_{};
};

}  // namespace elympus
