#include "elympus/problems/fixtures.hpp"

#include <bit>

#include "elympus/problems/block_functions.hpp"

namespace elympus::fixtures {

namespace {

std::vector<double> bim4_table() {
  std::vector<double> t(16);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = bim_k(std::popcount(i), 4);
  return t;
}

}  // namespace

ProblemInstance fe1() {
  auto fn = [](const BitVector& x) {
    double product = 1.0;
    for (std::size_t i = 0; i + 1 < 4; ++i) product *= static_cast<double>((x.get(i) != x.get(i + 1)) ? 2 : 1);
    return product;
  };
  auto inst = ProblemInstance::composed(4, fn, {{0, 1}, {1, 2}, {2, 3}}, InstanceMeta{"fe1", 0, {}}, true);
  inst.set_known_optimum(8.0);
  return inst;
}

ProblemInstance fe2() {
  const auto t = bim4_table();
  ProblemInstance inst(8, {{{0, 1, 2, 3}, t}, {{2, 3, 4, 5}, t}, {{4, 5, 6, 7}, t}}, InstanceMeta{"fe2", 0, {}}, true);
  inst.set_known_optimum(6.0);
  return inst;
}

ProblemInstance two_block_bim4() {
  const auto t = bim4_table();
  ProblemInstance inst(8, {{{0, 1, 2, 3}, t}, {{4, 5, 6, 7}, t}}, InstanceMeta{"two-block-bim4", 0, {}}, true);
  inst.set_known_optimum(4.0);
  return inst;
}

Vig chain4_vig() {
  Vig v(4);
  v.add_edge(0, 1);
  v.add_edge(1, 2);
  v.add_edge(2, 3);
  return v;
}

Vig fe2_partial_vig() {
  Vig v(8);
  for (std::size_t i = 0; i < 8; i += 2) v.add_edge(i, i + 1);
  return v;
}

ProblemInstance onemax(std::size_t n) {
  std::vector<Subfunction> subs;
  for (std::size_t i = 0; i < n; ++i) subs.push_back({{static_cast<std::uint32_t>(i)}, {0.0, 1.0}});
  ProblemInstance inst(n, std::move(subs), InstanceMeta{"onemax", 0, {}}, true);
  inst.set_known_optimum(static_cast<double>(n));
  return inst;
}

}  // namespace elympus::fixtures
