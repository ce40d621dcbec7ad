#include "elympus/problems/instance_io.hpp"

#include <fstream>

#include "elympus/common/errors.hpp"
#include "elympus/problems/dimacs.hpp"

namespace elympus {

using Json = nlohmann::json;

ProblemInstance isg_from_couplings(std::size_t n, const std::vector<IsingCoupling>& couplings, InstanceMeta meta) {
  std::vector<Subfunction> subs;
  subs.reserve(couplings.size());
  for (const auto& c : couplings) {
    if (c.i == c.j) throw SpecError("ising coupling joins a spin with itself");
    // index bit 0 = x_i, bit 1 = x_j; equal spins contribute +J.
    subs.push_back({{c.i, c.j}, {c.weight, -c.weight, -c.weight, c.weight}});
  }
  return ProblemInstance(n, std::move(subs), std::move(meta), true);
}

Json instance_to_json(const ProblemInstance& instance) {
  if (!instance.additive()) throw SpecError("closure-based instances have no file representation");
  const auto& meta = instance.meta();
  Json doc{{"family", meta.family},
           {"n", instance.n()},
           {"seed", meta.seed},
           {"params", meta.params},
           {"integral", instance.integral()}};
  if (instance.known_optimum()) doc["optimum"] = *instance.known_optimum();
  if (meta.family == "isg") {
    Json couplings = Json::array();
    for (const auto& sf : instance.subfunctions()) couplings.push_back(Json::array({sf.vars[0], sf.vars[1], sf.table[0]}));
    doc["couplings"] = std::move(couplings);
  } else {
    Json subs = Json::array();
    for (const auto& sf : instance.subfunctions()) subs.push_back({{"vars", sf.vars}, {"table", sf.table}});
    doc["subfunctions"] = std::move(subs);
  }
  return doc;
}

ProblemInstance instance_from_json(const Json& doc) {
  try {
    InstanceMeta meta;
    meta.family = doc.value("family", std::string{"file"});
    meta.seed = doc.value("seed", std::uint64_t{0});
    meta.params = doc.value("params", Json::object());
    const auto n = doc.at("n").get<std::size_t>();
    const bool integral = doc.value("integral", true);
    std::optional<ProblemInstance> inst;
    if (doc.contains("couplings")) {
      std::vector<IsingCoupling> couplings;
      for (const auto& c : doc.at("couplings")) {
        couplings.push_back({c.at(0).get<std::uint32_t>(), c.at(1).get<std::uint32_t>(), c.at(2).get<double>()});
      }
      inst = isg_from_couplings(n, couplings, std::move(meta));
    } else if (doc.contains("clauses")) {
      CnfFormula cnf;
      cnf.variables = n;
      cnf.clauses = doc.at("clauses").get<std::vector<std::vector<int>>>();
      for (const auto& clause : cnf.clauses) {
        for (int lit : clause) {
          if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > n) throw SpecError("clause literal out of range");
        }
      }
      inst = max_sat_instance(cnf, std::move(meta));
    } else {
      std::vector<Subfunction> subs;
      for (const auto& s : doc.at("subfunctions")) {
        subs.push_back({s.at("vars").get<std::vector<std::uint32_t>>(), s.at("table").get<std::vector<double>>()});
      }
      inst = ProblemInstance(n, std::move(subs), std::move(meta), integral);
    }
    if (doc.contains("optimum")) inst->set_known_optimum(doc.at("optimum").get<double>());
    return std::move(*inst);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed instance document: ") + e.what());
  }
}

void write_instance_file(const ProblemInstance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write instance file '" + path + "'");
  out << instance_to_json(instance).dump(1) << '\n';
  if (!out) throw IoError("failed writing instance file '" + path + "'");
}

ProblemInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open instance file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(path + ": " + e.what());
  }
  return instance_from_json(doc);
}

}  // namespace elympus
