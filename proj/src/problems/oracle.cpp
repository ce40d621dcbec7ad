#include "elympus/problems/oracle.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

#include "elympus/common/errors.hpp"
#include "elympus/problems/evaluator.hpp"

namespace elympus {

namespace {

void guard(const ProblemInstance& instance) {
  if (instance.n() > kOracleMaxN) {
    throw CapacityError("exhaustive oracle limited to n <= " + std::to_string(kOracleMaxN) + ", got n = " +
                        std::to_string(instance.n()));
  }
}

}  // namespace

std::vector<double> fitness_table(const ProblemInstance& instance, EvalCounter& counter) {
  guard(instance);
  const std::size_t n = instance.n();
  Evaluator eval(instance, counter);
  std::vector<double> table(std::size_t{1} << n);
  Solution x(n);
  std::uint64_t index = 0;
  table[0] = eval.evaluate(x, Purpose::kOracle);
  for (std::uint64_t step = 1; step < table.size(); ++step) {
    const int bit = std::countr_zero(step);
    x.flip(static_cast<std::size_t>(bit));
    index ^= std::uint64_t{1} << bit;
    table[index] = eval.evaluate(x, Purpose::kOracle);
  }
  return table;
}

Vig oracle_vig_nm(const ProblemInstance& instance, EvalCounter& counter) {
  return oracle_vig_nm(instance, fitness_table(instance, counter));
}

Vig oracle_vig_nm(const ProblemInstance& instance, const std::vector<double>& table) {
  guard(instance);
  const std::size_t n = instance.n();
  const double eps = instance.tolerance();
  Vig vig(n);
  // C1-C3 for (g, h) at x hold exactly when the relation of f(x) to f(x^g)
  // changes once h is flipped; C4-C6 are the same test with roles swapped.
  for (std::size_t g = 0; g < n; ++g) {
    const std::uint64_t gm = std::uint64_t{1} << g;
    for (std::size_t h = 0; h < n; ++h) {
      if (h == g || vig.has_edge(g, h)) continue;
      const std::uint64_t hm = std::uint64_t{1} << h;
      for (std::uint64_t x = 0; x < table.size(); ++x) {
        const Relation before = compare_fitness(table[x], table[x ^ gm], eps);
        const Relation after = compare_fitness(table[x ^ hm], table[x ^ hm ^ gm], eps);
        if (before != after) {
          vig.add_edge(g, h, ClauseClass::kForward);
          break;
        }
      }
    }
  }
  return vig;
}

Vig oracle_vig_nl(const ProblemInstance& instance, EvalCounter& counter) {
  return oracle_vig_nl(instance, fitness_table(instance, counter));
}

Vig oracle_vig_nl(const ProblemInstance& instance, const std::vector<double>& table) {
  guard(instance);
  const std::size_t n = instance.n();
  const double eps = instance.tolerance();
  Vig vig(n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = g + 1; h < n; ++h) {
      const std::uint64_t gm = std::uint64_t{1} << g, hm = std::uint64_t{1} << h;
      for (std::uint64_t x = 0; x < table.size(); ++x) {
        if (std::fabs(table[x] + table[x ^ gm ^ hm] - table[x ^ gm] - table[x ^ hm]) > eps) {
          vig.add_edge(g, h);
          break;
        }
      }
    }
  }
  return vig;
}

}  // namespace elympus
