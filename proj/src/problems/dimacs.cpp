#include "elympus/problems/dimacs.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "elympus/common/errors.hpp"

namespace elympus {

CnfFormula parse_dimacs(std::istream& in, const std::string& source) {
  CnfFormula cnf;
  bool header = false;
  std::size_t declared = 0;
  std::vector<int> current;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw SpecError(source + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == 'c' || line[first] == '%') continue;
    std::istringstream ls(line);
    if (line[first] == 'p') {
      std::string p, fmt;
      long long vars = -1, clauses = -1;
      ls >> p >> fmt >> vars >> clauses;
      if (header || fmt != "cnf" || vars < 0 || clauses < 0) fail("bad problem line");
      header = true;
      cnf.variables = static_cast<std::size_t>(vars);
      declared = static_cast<std::size_t>(clauses);
      continue;
    }
    if (!header) fail("clause before 'p cnf' header");
    long long lit = 0;
    while (ls >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::llabs(lit)) > cnf.variables) fail("literal out of range");
      current.push_back(static_cast<int>(lit));
    }
    if (!ls.eof()) fail("unexpected token");
  }
  if (!header) throw SpecError(source + ": missing 'p cnf' header");
  if (!current.empty()) cnf.clauses.push_back(std::move(current));
  if (cnf.clauses.size() != declared) {
    throw SpecError(source + ": header declares " + std::to_string(declared) + " clauses, found " +
                    std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

CnfFormula read_dimacs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open CNF file '" + path + "'");
  return parse_dimacs(in, path);
}

void write_dimacs(std::ostream& out, const CnfFormula& cnf) {
  out << "p cnf " << cnf.variables << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
}

ProblemInstance max_sat_instance(const CnfFormula& cnf, InstanceMeta meta) {
  std::vector<Subfunction> subs;
  subs.reserve(cnf.clauses.size());
  for (const auto& clause : cnf.clauses) {
    Subfunction sf;
    for (int lit : clause) {
      const auto v = static_cast<std::uint32_t>(std::abs(lit) - 1);
      if (std::find(sf.vars.begin(), sf.vars.end(), v) == sf.vars.end()) sf.vars.push_back(v);
    }
    sf.table.resize(std::size_t{1} << sf.vars.size());
    for (std::size_t idx = 0; idx < sf.table.size(); ++idx) {
      bool sat = false;
      for (int lit : clause) {
        const auto v = static_cast<std::uint32_t>(std::abs(lit) - 1);
        const auto j = static_cast<std::size_t>(std::find(sf.vars.begin(), sf.vars.end(), v) - sf.vars.begin());
        const bool value = ((idx >> j) & 1U) != 0;
        if (value == (lit > 0)) sat = true;
      }
      sf.table[idx] = sat ? 1.0 : 0.0;
    }
    subs.push_back(std::move(sf));
  }
  return ProblemInstance(cnf.variables, std::move(subs), std::move(meta), true);
}

}  // namespace elympus
