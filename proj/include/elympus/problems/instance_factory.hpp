#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "elympus/problems/dimacs.hpp"
#include "elympus/problems/problem_instance.hpp"
#include "json.hpp"

namespace elympus {

/// Declarative description of a benchmark instance.
///
/// Families: concat-bim, concat-nbim, concat-dec (k, blocks, overlap),
/// nk (n, nk_k), isg (n = L*L), max3sat (n or file), mk-bim / mk-dec3 (m),
/// file (JSON instance file).
struct InstanceSpec {
  std::string family;
  int k = 0;
  int blocks = 0;
  int overlap = 0;
  std::size_t n = 0;
  int nk_k = 4;
  int m = 0;
  double clause_ratio = 4.27;
  std::uint64_t seed = 0;
  std::string file;

  nlohmann::json to_json() const;
  static InstanceSpec from_json(const nlohmann::json& j);
  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

ProblemInstance make_instance(const InstanceSpec& spec);

// Random 3-CNF with round(ratio * n) clauses, all satisfied by a hidden assignment.
CnfFormula planted_max3sat(std::size_t n, double clause_ratio, std::uint64_t seed);

// Brute-force maximum for n <= 22 using a private counter.
double brute_force_optimum(const ProblemInstance& instance);

// Block start positions of a cyclic concatenation; n = blocks * (k - overlap).
std::size_t concat_size(int k, int blocks, int overlap);

}  // namespace elympus
