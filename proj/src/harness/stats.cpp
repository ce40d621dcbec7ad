#include "elympus/harness/stats.hpp"

#include <algorithm>

#include "elympus/common/errors.hpp"

namespace elympus {

using Json = nlohmann::json;

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

AggregateStats aggregate(const std::vector<const RunRecord*>& runs) {
  AggregateStats s;
  if (runs.empty()) return s;
  s.instance = runs.front()->instance;
  s.family = runs.front()->family;
  s.n = runs.front()->n;
  s.optimizer = std::string(optimizer_name(runs.front()->optimizer));
  s.denominator = runs.front()->denominator;
  s.runs = runs.size();
  std::vector<double> until_best, surrogate_until_best, ratio, fihc, px, initpx;
  std::array<std::vector<double>, kPurposeCount> by_purpose;
  std::array<std::vector<double>, kDiscoverySourceCount> by_source;
  for (const RunRecord* r : runs) {
    const auto& res = r->result;
    if (r->success()) {
      ++s.successes;
      until_best.push_back(static_cast<double>(res.ffe_until_best));
      surrogate_until_best.push_back(static_cast<double>(res.surrogate_until_best));
      s.ffe_until_best_samples.push_back(static_cast<double>(res.ffe_until_best));
      s.sample_seeds.push_back(r->seed);
    }
    ratio.push_back(r->discovery_ratio());
    for (std::size_t p = 0; p < kPurposeCount; ++p) by_purpose[p].push_back(static_cast<double>(res.ffe_by_purpose[p]));
    for (std::size_t k = 0; k < kDiscoverySourceCount; ++k) {
      by_source[k].push_back(static_cast<double>(res.discoveries_by_source[k]));
    }
    auto at = [&](Purpose p) { return static_cast<double>(res.ffe_by_purpose[static_cast<std::size_t>(p)]); };
    fihc.push_back(at(Purpose::kBStar) + at(Purpose::kVerification) + at(Purpose::kDiscovery) +
                   at(Purpose::kCircuitCheck));
    px.push_back(at(Purpose::kPxRegular) + at(Purpose::kPxConsistency) + at(Purpose::kPxDiscovery));
    initpx.push_back(at(Purpose::kInitPx) + at(Purpose::kInitPxDiscovery));
  }
  s.success_rate = 100.0 * static_cast<double>(s.successes) / static_cast<double>(s.runs);
  s.median_ffe_until_best = median(until_best);
  s.median_surrogate_until_best = median(surrogate_until_best);
  const double total = s.median_ffe_until_best + s.median_surrogate_until_best;
  s.savings_ratio = total > 0 ? 100.0 * s.median_surrogate_until_best / total : 0.0;
  s.median_discovery_ratio = median(ratio);
  for (std::size_t p = 0; p < kPurposeCount; ++p) s.median_ffe_by_purpose[p] = median(by_purpose[p]);
  for (std::size_t k = 0; k < kDiscoverySourceCount; ++k) s.median_discoveries_by_source[k] = median(by_source[k]);
  s.median_fihc_ffe = median(fihc);
  s.median_pxrll_ffe = median(px);
  s.median_initpx_ffe = median(initpx);
  return s;
}

Json AggregateStats::to_json() const {
  Json purposes = Json::object();
  for (std::size_t p = 0; p < kPurposeCount; ++p) {
    purposes[std::string(purpose_name(static_cast<Purpose>(p)))] = median_ffe_by_purpose[p];
  }
  Json sources = Json::object();
  for (std::size_t k = 0; k < kDiscoverySourceCount; ++k) {
    sources[std::string(source_name(static_cast<DiscoverySource>(k)))] = median_discoveries_by_source[k];
  }
  return Json{{"instance", instance},
              {"family", family},
              {"n", n},
              {"optimizer", optimizer},
              {"runs", runs},
              {"successes", successes},
              {"success_rate", success_rate},
              {"median_ffe_until_best", median_ffe_until_best},
              {"median_surrogate_until_best", median_surrogate_until_best},
              {"savings_ratio", savings_ratio},
              {"median_discovery_ratio", median_discovery_ratio},
              {"discovery_denominator", denominator_name(denominator)},
              {"median_ffe_by_purpose", purposes},
              {"median_discoveries_by_source", sources},
              {"median_fihc_ffe", median_fihc_ffe},
              {"median_pxrll_ffe", median_pxrll_ffe},
              {"median_initpx_ffe", median_initpx_ffe},
              {"ffe_until_best_samples", ffe_until_best_samples},
              {"sample_seeds", sample_seeds}};
}

AggregateStats AggregateStats::from_json(const Json& j) {
  AggregateStats s;
  try {
    s.instance = j.at("instance").get<std::string>();
    s.family = j.value("family", std::string{});
    s.n = j.value("n", std::size_t{0});
    s.optimizer = j.value("optimizer", std::string{});
    s.runs = j.at("runs").get<std::size_t>();
    s.successes = j.at("successes").get<std::size_t>();
    s.success_rate = j.value("success_rate", 0.0);
    s.median_ffe_until_best = j.value("median_ffe_until_best", 0.0);
    s.median_surrogate_until_best = j.value("median_surrogate_until_best", 0.0);
    s.savings_ratio = j.value("savings_ratio", 0.0);
    s.median_discovery_ratio = j.value("median_discovery_ratio", 0.0);
    s.denominator = j.value("discovery_denominator", std::string{"structural"}) == "oracle" ? Denominator::kOracle
                                                                                          : Denominator::kStructural;
    if (j.contains("median_ffe_by_purpose")) {
      const auto& purposes = j.at("median_ffe_by_purpose");
      for (std::size_t p = 0; p < kPurposeCount; ++p) {
        s.median_ffe_by_purpose[p] = purposes.value(std::string(purpose_name(static_cast<Purpose>(p))), 0.0);
      }
    }
    if (j.contains("median_discoveries_by_source")) {
      const auto& sources = j.at("median_discoveries_by_source");
      for (std::size_t k = 0; k < kDiscoverySourceCount; ++k) {
        s.median_discoveries_by_source[k] =
            sources.value(std::string(source_name(static_cast<DiscoverySource>(k))), 0.0);
      }
    }
    s.median_fihc_ffe = j.value("median_fihc_ffe", 0.0);
    s.median_pxrll_ffe = j.value("median_pxrll_ffe", 0.0);
    s.median_initpx_ffe = j.value("median_initpx_ffe", 0.0);
    s.ffe_until_best_samples = j.at("ffe_until_best_samples").get<std::vector<double>>();
    s.sample_seeds = j.value("sample_seeds", std::vector<std::uint64_t>{});
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed aggregate entry: ") + e.what());
  }
  return s;
}

}  // namespace elympus
