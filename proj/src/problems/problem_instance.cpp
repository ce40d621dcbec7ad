#include "elympus/problems/problem_instance.hpp"

#include <string>

#include "elympus/common/errors.hpp"
#include "elympus/common/fitness_order.hpp"

namespace elympus {

ProblemInstance::ProblemInstance(std::size_t n, std::vector<Subfunction> subfunctions, InstanceMeta meta,
                                 bool integral)
    : n_(n), subfunctions_(std::move(subfunctions)), integral_(integral), meta_(std::move(meta)) {
  for (const auto& sf : subfunctions_) {
    if (sf.vars.size() >= 31) throw SpecError("subfunction arity too large for a lookup table");
    if (sf.table.size() != (std::size_t{1} << sf.vars.size())) {
      throw SpecError("subfunction table has " + std::to_string(sf.table.size()) + " entries, expected 2^" +
                      std::to_string(sf.vars.size()));
    }
    for (auto v : sf.vars) {
      if (v >= n_) throw SpecError("subfunction argument " + std::to_string(v) + " >= n = " + std::to_string(n_));
    }
    argument_sets_.push_back(sf.vars);
  }
  build_structure();
}

ProblemInstance ProblemInstance::composed(std::size_t n, Closure fn,
                                          std::vector<std::vector<std::uint32_t>> argument_sets, InstanceMeta meta,
                                          bool integral) {
  ProblemInstance out;
  out.n_ = n;
  out.closure_ = std::move(fn);
  out.argument_sets_ = std::move(argument_sets);
  out.integral_ = integral;
  out.meta_ = std::move(meta);
  for (const auto& set : out.argument_sets_) {
    for (auto v : set) {
      if (v >= n) throw SpecError("argument index " + std::to_string(v) + " >= n = " + std::to_string(n));
    }
  }
  out.build_structure();
  return out;
}

void ProblemInstance::build_structure() {
  structural_ = Vig(n_);
  for (const auto& set : argument_sets_) {
    for (std::size_t a = 0; a < set.size(); ++a) {
      for (std::size_t b = a + 1; b < set.size(); ++b) {
        if (set[a] != set[b]) structural_.add_edge(set[a], set[b]);
      }
    }
  }
}

double ProblemInstance::tolerance() const { return integral_ ? 0.0 : kRealTolerance; }

std::string ProblemInstance::label() const {
  std::string out = meta_.family.empty() ? "custom" : meta_.family;
  out += "-n" + std::to_string(n_);
  return out;
}

double ProblemInstance::value(const BitVector& bits) const {
  if (closure_) return closure_(bits);
  double total = 0.0;
  for (const auto& sf : subfunctions_) {
    std::size_t index = 0;
    for (std::size_t j = 0; j < sf.vars.size(); ++j) {
      if (bits.get(sf.vars[j])) index |= std::size_t{1} << j;
    }
    total += sf.table[index];
  }
  return total;
}

}  // namespace elympus
