#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "elympus/problems/problem_instance.hpp"

namespace elympus {

struct CnfFormula {
  std::size_t variables = 0;
  // DIMACS literals: +v / -v with 1-based v.
  std::vector<std::vector<int>> clauses;
};

CnfFormula parse_dimacs(std::istream& in, const std::string& source = "<stream>");
CnfFormula read_dimacs(const std::string& path);
void write_dimacs(std::ostream& out, const CnfFormula& cnf);

// One subfunction per clause; fitness = number of satisfied clauses.
ProblemInstance max_sat_instance(const CnfFormula& cnf, InstanceMeta meta);

}  // namespace elympus
