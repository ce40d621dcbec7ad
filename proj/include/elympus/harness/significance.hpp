#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "elympus/common/errors.hpp"
#include "elympus/harness/stats.hpp"

namespace elympus {

struct InsufficientSamples : SpecError {
  using SpecError::SpecError;
};

inline constexpr std::size_t kMinSamples = 5;
inline constexpr double kAlpha = 0.05;

struct TestResult {
  double statistic = 0.0;  // z for rank-sum, number of positive differences for sign test
  double p_value = 1.0;
  bool significant = false;
};

// Unpaired two-sided rank-sum test, normal approximation with tie correction.
TestResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b, double alpha = kAlpha);
// Paired two-sided exact sign test; zero differences are dropped.
TestResult sign_test(const std::vector<double>& a, const std::vector<double>& b, double alpha = kAlpha);

struct PairwiseComparison {
  std::string a;
  std::string b;
  std::optional<TestResult> rank_sum;
  std::optional<TestResult> sign;
  // Label of the better optimizer, empty when indistinguishable.
  std::string better;
  std::string reason;
};

struct ComparisonReport {
  std::vector<PairwiseComparison> pairs;
  std::string most_effective;  // beats every other entry, or empty
  std::string to_text() const;
};

/// Entries are compared by success count first, then by FFE-until-best.
ComparisonReport compare_stats(const std::vector<AggregateStats>& stats, double alpha = kAlpha);

}  // namespace elympus
