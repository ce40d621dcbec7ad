#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "elympus/problems/problem_instance.hpp"
#include "json.hpp"

namespace elympus {

struct IsingCoupling {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  double weight = 0.0;
};

// Fitness = sum of J * s_i * s_j with spins s = 2x - 1.
ProblemInstance isg_from_couplings(std::size_t n, const std::vector<IsingCoupling>& couplings, InstanceMeta meta);

// JSON instance document:
//   {"family", "n", "seed", "params", "integral", "optimum"?,
//    "subfunctions": [{"vars": [...], "table": [...]}] | "couplings": [[i, j, J]] | "clauses": [[lits]]}
// Closure-based instances cannot be written.
nlohmann::json instance_to_json(const ProblemInstance& instance);
ProblemInstance instance_from_json(const nlohmann::json& doc);

void write_instance_file(const ProblemInstance& instance, const std::string& path);
ProblemInstance read_instance_file(const std::string& path);

}  // namespace elympus
