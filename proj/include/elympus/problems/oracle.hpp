#pragma once

#include <vector>

#include "elympus/linkage/vig.hpp"
#include "elympus/problems/eval_counter.hpp"
#include "elympus/problems/problem_instance.hpp"

namespace elympus {

inline constexpr std::size_t kOracleMaxN = 22;

// f over every assignment; bit i of the index is x_i. Charges 2^n oracle evaluations.
std::vector<double> fitness_table(const ProblemInstance& instance, EvalCounter& counter);

// Exhaustive non-monotonicity graph.
Vig oracle_vig_nm(const ProblemInstance& instance, EvalCounter& counter);
Vig oracle_vig_nm(const ProblemInstance& instance, const std::vector<double>& table);

// Exhaustive non-linearity graph.
Vig oracle_vig_nl(const ProblemInstance& instance, EvalCounter& counter);
Vig oracle_vig_nl(const ProblemInstance& instance, const std::vector<double>& table);

}  // namespace elympus
