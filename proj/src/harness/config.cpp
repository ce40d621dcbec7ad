#include "elympus/harness/config.hpp"

#include <algorithm>
#include <fstream>

#include "elympus/common/errors.hpp"

namespace elympus {

using Json = nlohmann::json;

void ExperimentConfig::validate() const {
  if (instances.empty()) throw SpecError("config lists no instances");
  if (repetitions < 1) throw SpecError("repetitions must be at least 1");
  if (budgets.ffe < 1) throw SpecError("ffe budget must be positive");
  if (budgets.wall_clock.count() <= 0) throw SpecError("time budget must be positive");
  for (const auto& spec : instances) {
    if (spec.family.empty()) throw SpecError("instance stanza without a family");
  }
}

Json ExperimentConfig::to_json() const {
  Json list = Json::array();
  for (const auto& spec : instances) list.push_back(spec.to_json());
  return Json{{"instances", list},
              {"repetitions", repetitions},
              {"seed", seed},
              {"budgets", {{"ffe", budgets.ffe}, {"time_seconds", static_cast<double>(budgets.wall_clock.count()) / 1000.0}}},
              {"optimizer", optimizer_name(optimizer)},
              {"verify_policy", policy_name(verify)},
              {"out_dir", out_dir},
              {"trace", trace},
              {"verbosity", verbosity},
              {"threads", threads},
              {"curves", curves}};
}

ExperimentConfig ExperimentConfig::from_json(const Json& j) {
  if (!j.is_object()) throw SpecError("config must be a JSON object");
  static const char* kKnown[] = {"instances", "instance", "repetitions", "seed",  "budgets", "optimizer",
                                 "verify_policy", "out_dir", "trace", "verbosity", "threads", "curves"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(std::begin(kKnown), std::end(kKnown), key) == std::end(kKnown)) {
      throw SpecError("unknown config key '" + key + "'");
    }
  }
  ExperimentConfig c;
  try {
    if (j.contains("instances")) {
      for (const auto& s : j.at("instances")) c.instances.push_back(InstanceSpec::from_json(s));
    }
    if (j.contains("instance")) c.instances.push_back(InstanceSpec::from_json(j.at("instance")));
    const auto reps = j.value("repetitions", std::int64_t{30});
    if (reps < 1) throw SpecError("repetitions must be at least 1");
    c.repetitions = static_cast<std::size_t>(reps);
    c.seed = j.value("seed", std::uint64_t{1});
    if (j.contains("budgets")) {
      const auto& b = j.at("budgets");
      const double ffe = b.value("ffe", 1e6);
      if (ffe < 1) throw SpecError("ffe budget must be positive");
      c.budgets.ffe = static_cast<std::uint64_t>(ffe);
      const double seconds = b.value("time_seconds", 600.0);
      if (seconds <= 0) throw SpecError("time budget must be positive");
      c.budgets.wall_clock = std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000.0));
    }
    c.optimizer = parse_optimizer(j.value("optimizer", std::string{"olympus"}));
    c.verify = parse_verify_policy(j.value("verify_policy", std::string{"1/v"}));
    c.out_dir = j.value("out_dir", std::string{"results"});
    c.trace = j.value("trace", false);
    c.verbosity = j.value("verbosity", 0);
    c.threads = j.value("threads", std::size_t{0});
    c.curves = j.value("curves", true);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed config: ") + e.what());
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(path + ": " + e.what());
  }
  return ExperimentConfig::from_json(j);
}

void save_config(const ExperimentConfig& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write config '" + path + "'");
  out << config.to_json().dump(2) << '\n';
}

}  // namespace elympus
