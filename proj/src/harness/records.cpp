#include "elympus/harness/records.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace elympus {

std::string_view denominator_name(Denominator d) { return d == Denominator::kOracle ? "oracle" : "structural"; }

double RunRecord::discovery_ratio() const {
  if (reference_edges == 0) return 100.0;
  return 100.0 * static_cast<double>(found_reference_edges) / static_cast<double>(reference_edges);
}

double RunRecord::savings_ratio() const {
  const double surr = static_cast<double>(result.surrogate_until_best);
  const double truth = static_cast<double>(result.ffe_until_best);
  if (surr + truth == 0.0) return 0.0;
  return 100.0 * surr / (surr + truth);
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string csv_header() {
  std::ostringstream out;
  out << "instance,family,n,rep,seed,optimizer,verify_policy,success,termination,best_fitness,optimum,"
         "true_evals,surrogate_answers,ffe_until_best,surrogate_until_best,savings_ratio,iterations,pairs,"
         "edges,reference_edges,found_reference_edges,discovery_ratio,denominator";
  for (std::size_t p = 0; p < kPurposeCount; ++p) out << ",ffe_" << purpose_name(static_cast<Purpose>(p));
  for (std::size_t s = 0; s < kDiscoverySourceCount; ++s) {
    out << ",disc_" << source_name(static_cast<DiscoverySource>(s));
  }
  return out.str();
}

std::string csv_row(const RunRecord& r) {
  std::ostringstream out;
  const auto& res = r.result;
  out << r.instance << ',' << r.family << ',' << r.n << ',' << r.rep << ',' << r.seed << ','
      << optimizer_name(r.optimizer) << ',' << policy_name(r.verify) << ',' << (r.success() ? 1 : 0) << ','
      << termination_name(res.termination) << ',' << (res.best_fitness ? format_double(*res.best_fitness) : "") << ','
      << (r.optimum ? format_double(*r.optimum) : "") << ',' << res.true_evals << ',' << res.surrogate_answers << ','
      << res.ffe_until_best << ',' << res.surrogate_until_best << ',' << format_double(r.savings_ratio()) << ','
      << res.iterations << ',' << res.pairs << ',' << res.edges << ',' << r.reference_edges << ','
      << r.found_reference_edges << ',' << format_double(r.discovery_ratio()) << ','
      << denominator_name(r.denominator);
  for (auto v : res.ffe_by_purpose) out << ',' << v;
  for (auto v : res.discoveries_by_source) out << ',' << v;
  return out.str();
}

}  // namespace elympus
