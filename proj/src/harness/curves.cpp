#include "elympus/harness/curves.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "elympus/common/errors.hpp"

namespace elympus {

Curves build_curves(const RunRecord& record) {
  Curves c;
  const auto& res = record.result;
  c.fitness_is_fraction = record.optimum.has_value() && *record.optimum != 0.0;
  struct Event {
    std::uint64_t ffe;
    std::uint64_t surrogate;
    int kind;  // 0 fitness, 1 dependency
    double value;
  };
  std::vector<Event> events;
  for (const auto& imp : res.trajectory) events.push_back({imp.ffe, imp.surrogate, 0, imp.fitness});
  std::size_t found = 0;
  for (const auto& d : res.discovery_trajectory) {
    events.push_back({d.ffe, d.surrogate, 1, static_cast<double>(++found)});
  }
  std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.ffe < b.ffe; });

  double fitness = 0.0;
  double deps = 0.0;
  std::uint64_t surrogate = 0;
  const double denom = record.reference_edges == 0 ? 1.0 : static_cast<double>(record.reference_edges);
  for (const auto& e : events) {
    if (e.kind == 0) fitness = c.fitness_is_fraction ? e.value / *record.optimum : e.value;
    if (e.kind == 1) deps = std::min(1.0, e.value / denom);
    surrogate = std::max(surrogate, e.surrogate);
    if (!c.points.empty() && c.points.back().ffe == e.ffe) {
      c.points.back() = {e.ffe, fitness, deps, surrogate};
    } else {
      c.points.push_back({e.ffe, fitness, deps, surrogate});
    }
  }
  const std::uint64_t final_surrogate = std::max(surrogate, res.surrogate_answers);
  if (c.points.empty() || c.points.back().ffe != res.true_evals || c.points.back().surrogate != final_surrogate) {
    c.points.push_back({res.true_evals, fitness, deps, final_surrogate});
  }
  return c;
}

std::string curves_csv(const Curves& curves) {
  std::ostringstream out;
  out << "ffe," << (curves.fitness_is_fraction ? "fitness_fraction" : "fitness_raw")
      << ",dependency_fraction,surrogate_cumulative\n";
  for (const auto& p : curves.points) {
    out << p.ffe << ',' << format_double(p.fitness) << ',' << format_double(p.dependencies) << ',' << p.surrogate
        << '\n';
  }
  return out.str();
}

void emit_curves(const RunRecord& record, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write curve file '" + path + "'");
  out << curves_csv(build_curves(record));
  if (!out) throw IoError("failed writing curve file '" + path + "'");
}

}  // namespace elympus
