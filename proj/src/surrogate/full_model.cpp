#include "elympus/surrogate/full_model.hpp"

#include "elympus/common/errors.hpp"
#include "elympus/problems/fixtures.hpp"
#include "elympus/surrogate/comparison.hpp"

namespace elympus {

std::vector<LympusRow> lympus_rows(Evaluator& eval, const Vig& graph, Purpose purpose) {
  const std::size_t n = graph.n();
  if (n != eval.n()) throw InstanceShapeError("graph and instance sizes differ");
  std::vector<LympusRow> rows;
  for (std::size_t g = 0; g < n; ++g) {
    const auto context = graph.neighbors(g);
    if (context.size() > 20) throw CapacityError("close context too large to enumerate");
    const std::size_t k = context.size();
    for (std::size_t idx = 0; idx < (std::size_t{1} << k); ++idx) {
      Solution x(n);
      for (std::size_t j = 0; j < k; ++j) x.set(context[j], ((idx >> (k - 1 - j)) & 1U) != 0);
      const Preference pref = compute_b_star(eval, g, x, purpose).pref;
      rows.push_back({g, context_hyperplane(graph, g, x.bits()), pref});
    }
  }
  return rows;
}

SurrogateStore build_full_store(Evaluator& eval, const Vig& graph, Purpose purpose) {
  SurrogateStore store(graph.n());
  for (const auto& e : graph.edges()) store.add_edge(e.g, e.h, DiscoverySource::kExternal);
  for (auto& row : lympus_rows(eval, graph, purpose)) store.append(row.g, row.context.values, row.pref);
  return store;
}

SurrogateStore fe2_walkthrough_store() {
  SurrogateStore store(8);
  const Vig partial = fixtures::fe2_partial_vig();
  for (const auto& e : partial.edges()) store.add_edge(e.g, e.h, DiscoverySource::kExternal);
  struct Row {
    std::size_t g;
    const char* snapshot;
    Preference pref;
  };
  const Row rows[] = {
      {0, "01 10 10 01", Preference::kZero}, {0, "10 10 10 01", Preference::kOne},
      {1, "10 10 10 01", Preference::kZero}, {2, "11 11 00 11", Preference::kOne},
      {2, "00 00 11 00", Preference::kZero}, {3, "01 10 01 10", Preference::kZero},
      {3, "10 01 01 10", Preference::kOne},  {4, "01 10 10 01", Preference::kOne},
      {5, "01 10 10 01", Preference::kZero}, {6, "01 10 10 01", Preference::kZero},
      {7, "01 10 10 01", Preference::kOne},
  };
  for (const auto& r : rows) store.append(r.g, BitVector::from_string(r.snapshot), r.pref);
  return store;
}

}  // namespace elympus
