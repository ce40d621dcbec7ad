#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "elympus/harness/records.hpp"
#include "json.hpp"

namespace elympus {

double median(std::vector<double> values);

/// Per-instance summary. Until-best medians are over successful runs only;
/// cost and discovery breakdowns are medians over all runs.
struct AggregateStats {
  std::string instance;
  std::string family;
  std::size_t n = 0;
  std::string optimizer;
  std::size_t runs = 0;
  std::size_t successes = 0;
  double success_rate = 0.0;
  double median_ffe_until_best = 0.0;
  double median_surrogate_until_best = 0.0;
  double savings_ratio = 0.0;
  double median_discovery_ratio = 0.0;
  Denominator denominator = Denominator::kStructural;
  std::array<double, kPurposeCount> median_ffe_by_purpose{};
  std::array<double, kDiscoverySourceCount> median_discoveries_by_source{};
  double median_fihc_ffe = 0.0;  // b* + verification + discovery + circuit
  double median_pxrll_ffe = 0.0;
  double median_initpx_ffe = 0.0;
  std::vector<double> ffe_until_best_samples;  // successful runs, in rep order
  std::vector<std::uint64_t> sample_seeds;

  nlohmann::json to_json() const;
  static AggregateStats from_json(const nlohmann::json& j);
};

AggregateStats aggregate(const std::vector<const RunRecord*>& runs);

}  // namespace elympus
