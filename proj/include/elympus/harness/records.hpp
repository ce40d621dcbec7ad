#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "elympus/olympus/optimizer.hpp"

namespace elympus {

enum class Denominator : std::uint8_t { kOracle, kStructural };
std::string_view denominator_name(Denominator d);

struct RunRecord {
  std::string instance;
  std::string family;
  std::size_t instance_index = 0;
  std::size_t n = 0;
  std::size_t rep = 0;
  std::uint64_t seed = 0;
  OptimizerKind optimizer = OptimizerKind::kOlympus;
  VerifyPolicy verify = VerifyPolicy::kOneOverV;
  std::optional<double> optimum;
  RunResult result;
  std::size_t reference_edges = 0;
  std::size_t found_reference_edges = 0;
  Denominator denominator = Denominator::kStructural;
  std::vector<std::string> trace;

  bool success() const { return result.optimum_reached; }
  double discovery_ratio() const;  // percent
  double savings_ratio() const;    // percent, until best
};

std::string format_double(double value);

std::string csv_header();
std::string csv_row(const RunRecord& record);

}  // namespace elympus
