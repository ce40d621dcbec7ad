#include "elympus/problems/instance_factory.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "elympus/common/errors.hpp"
#include "elympus/common/rng.hpp"
#include "elympus/problems/block_functions.hpp"
#include "elympus/problems/dimacs.hpp"
#include "elympus/problems/evaluator.hpp"
#include "elympus/problems/instance_io.hpp"

namespace elympus {

namespace {

using Json = nlohmann::json;

constexpr std::size_t kBruteForceLimit = 22;

std::vector<double> unitation_table(int k, double (*fn)(int, int)) {
  std::vector<double> table(std::size_t{1} << k);
  for (std::size_t idx = 0; idx < table.size(); ++idx) table[idx] = fn(std::popcount(idx), k);
  return table;
}

std::vector<std::uint32_t> window(std::size_t start, int k, std::size_t n) {
  std::vector<std::uint32_t> vars(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) vars[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>((start + j) % n);
  return vars;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw SpecError(message);
}

ProblemInstance make_concat(const InstanceSpec& s) {
  const bool bim = s.family != "concat-dec";
  require(s.k >= 2, "block size k must be at least 2");
  require(s.blocks >= 1, "blocks must be at least 1");
  require(s.overlap >= 0 && s.overlap < s.k, "overlap must lie in [0, k)");
  if (bim) require(s.k % 2 == 0, "bimodal blocks need an even k");
  require(s.k <= 24, "block size k too large for a lookup table");
  const std::size_t n = concat_size(s.k, s.blocks, s.overlap);
  require(n >= static_cast<std::size_t>(s.k),
          "block tiling impossible: " + std::to_string(s.blocks) + " blocks of " + std::to_string(s.k) +
              " with overlap " + std::to_string(s.overlap) + " wrap onto themselves");

  Rng rng(derive_seed(s.seed, 0x6e6f697365ULL));
  const auto base = unitation_table(s.k, bim ? &bim_k : &dec_k);
  std::vector<Subfunction> subs;
  for (int b = 0; b < s.blocks; ++b) {
    Subfunction sf{window(static_cast<std::size_t>(b) * static_cast<std::size_t>(s.k - s.overlap), s.k, n), base};
    if (s.family == "concat-nbim") {
      for (std::size_t idx = 0; idx < sf.table.size(); ++idx) {
        const int u = std::popcount(idx);
        if (u != 0 && u != s.k) sf.table[idx] += (rng.uniform01() - 0.5) * 0.5;
      }
    }
    subs.push_back(std::move(sf));
  }
  InstanceMeta meta{s.family, s.seed, {{"k", s.k}, {"blocks", s.blocks}, {"overlap", s.overlap}}};
  ProblemInstance inst(n, std::move(subs), std::move(meta), s.family != "concat-nbim");
  inst.set_known_optimum(static_cast<double>(s.blocks) * (bim ? s.k / 2 : s.k));
  return inst;
}

ProblemInstance make_nk(const InstanceSpec& s) {
  require(s.n >= 2, "nk needs n >= 2");
  require(s.nk_k >= 0 && static_cast<std::size_t>(s.nk_k) < s.n, "nk neighbourhood size must be < n");
  require(s.nk_k <= 16, "nk neighbourhood too large");
  Rng rng(s.seed);
  std::vector<Subfunction> subs;
  for (std::size_t i = 0; i < s.n; ++i) {
    std::vector<std::uint32_t> others;
    for (std::size_t j = 0; j < s.n; ++j) {
      if (j != i) others.push_back(static_cast<std::uint32_t>(j));
    }
    rng.shuffle(others);
    Subfunction sf;
    sf.vars.push_back(static_cast<std::uint32_t>(i));
    sf.vars.insert(sf.vars.end(), others.begin(), others.begin() + s.nk_k);
    sf.table.resize(std::size_t{1} << sf.vars.size());
    for (auto& v : sf.table) v = rng.uniform01();
    subs.push_back(std::move(sf));
  }
  InstanceMeta meta{"nk", s.seed, {{"k", s.nk_k}}};
  return ProblemInstance(s.n, std::move(subs), std::move(meta), false);
}

ProblemInstance make_isg(const InstanceSpec& s) {
  const auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(s.n))));
  require(side * side == s.n && side >= 3, "isg needs n = L*L with L >= 3");
  Rng rng(s.seed);
  std::vector<IsingCoupling> couplings;
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      const auto i = static_cast<std::uint32_t>(r * side + c);
      const auto right = static_cast<std::uint32_t>(r * side + (c + 1) % side);
      const auto down = static_cast<std::uint32_t>(((r + 1) % side) * side + c);
      couplings.push_back({i, right, rng.coin() ? 1.0 : -1.0});
      couplings.push_back({i, down, rng.coin() ? 1.0 : -1.0});
    }
  }
  return isg_from_couplings(s.n, couplings, InstanceMeta{"isg", s.seed, {{"side", side}}});
}

}  // namespace

CnfFormula planted_max3sat(std::size_t n, double clause_ratio, std::uint64_t seed) {
  require(n >= 3, "max3sat needs n >= 3");
  Rng rng(seed);
  std::vector<bool> planted(n);
  for (std::size_t i = 0; i < n; ++i) planted[i] = rng.coin();
  const auto m = static_cast<std::size_t>(std::llround(clause_ratio * static_cast<double>(n)));
  require(m >= 1, "max3sat clause count must be positive");
  CnfFormula cnf;
  cnf.variables = n;
  while (cnf.clauses.size() < m) {
    std::vector<int> clause;
    bool satisfied = false;
    while (clause.size() < 3) {
      const auto v = static_cast<std::size_t>(rng.below(n));
      const bool taken = std::any_of(clause.begin(), clause.end(),
                                     [&](int lit) { return static_cast<std::size_t>(std::abs(lit) - 1) == v; });
      if (taken) continue;
      const bool positive = rng.coin();
      satisfied = satisfied || (planted[v] == positive);
      clause.push_back(positive ? static_cast<int>(v + 1) : -static_cast<int>(v + 1));
    }
    if (satisfied) cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

namespace {

ProblemInstance make_max3sat(const InstanceSpec& s) {
  if (!s.file.empty()) {
    auto cnf = read_dimacs(s.file);
    return max_sat_instance(cnf, InstanceMeta{"max3sat", s.seed, {{"file", s.file}}});
  }
  const auto cnf = planted_max3sat(s.n, s.clause_ratio, s.seed);
  const auto m = cnf.clauses.size();
  auto inst = max_sat_instance(cnf, InstanceMeta{"max3sat", s.seed, {{"ratio", s.clause_ratio}}});
  inst.set_known_optimum(static_cast<double>(m));
  return inst;
}

ProblemInstance make_mk(const InstanceSpec& s) {
  const bool bim = s.family == "mk-bim";
  const int k = bim ? 10 : 3;
  const int o = 2;
  require(s.m >= 1, "mk needs m >= 1 blocks");
  const std::size_t n = static_cast<std::size_t>(s.m) * static_cast<std::size_t>(k - o) + o;
  Rng rng(s.seed);
  const auto perm = rng.permutation(n);
  const auto base = unitation_table(k, bim ? &bim_k : &dec_k);
  std::vector<Subfunction> subs;
  for (int b = 0; b < s.m; ++b) {
    auto vars = window(static_cast<std::size_t>(b) * static_cast<std::size_t>(k - o), k, n);
    for (auto& v : vars) v = perm[v];
    subs.push_back({std::move(vars), base});
  }
  InstanceMeta meta{s.family, s.seed, {{"m", s.m}, {"k", k}, {"overlap", o}}};
  ProblemInstance inst(n, std::move(subs), std::move(meta), true);
  inst.set_known_optimum(static_cast<double>(s.m) * (bim ? k / 2 : k));
  return inst;
}

}  // namespace

std::size_t concat_size(int k, int blocks, int overlap) {
  return static_cast<std::size_t>(blocks) * static_cast<std::size_t>(k - overlap);
}

Json InstanceSpec::to_json() const {
  Json j{{"family", family}, {"seed", seed}};
  if (k) j["k"] = k;
  if (blocks) j["blocks"] = blocks;
  if (overlap) j["overlap"] = overlap;
  if (n) j["n"] = n;
  if (family == "nk") j["nk_k"] = nk_k;
  if (m) j["m"] = m;
  if (family == "max3sat" && file.empty()) j["clause_ratio"] = clause_ratio;
  if (!file.empty()) j["file"] = file;
  return j;
}

InstanceSpec InstanceSpec::from_json(const Json& j) {
  if (!j.is_object()) throw SpecError("instance stanza must be an object");
  static const char* kKnown[] = {"family", "seed", "k", "blocks", "overlap", "n", "nk_k", "m", "clause_ratio", "file"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(std::begin(kKnown), std::end(kKnown), key) == std::end(kKnown)) {
      throw SpecError("unknown instance key '" + key + "'");
    }
  }
  InstanceSpec s;
  try {
    s.family = j.at("family").get<std::string>();
    s.seed = j.value("seed", std::uint64_t{0});
    s.k = j.value("k", 0);
    s.blocks = j.value("blocks", 0);
    s.overlap = j.value("overlap", 0);
    s.n = j.value("n", std::size_t{0});
    s.nk_k = j.value("nk_k", 4);
    s.m = j.value("m", 0);
    s.clause_ratio = j.value("clause_ratio", 4.27);
    s.file = j.value("file", std::string{});
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed instance stanza: ") + e.what());
  }
  return s;
}

ProblemInstance make_instance(const InstanceSpec& spec) {
  std::optional<ProblemInstance> inst;
  if (spec.family == "concat-bim" || spec.family == "concat-nbim" || spec.family == "concat-dec") {
    inst = make_concat(spec);
  } else if (spec.family == "nk") {
    inst = make_nk(spec);
  } else if (spec.family == "isg") {
    inst = make_isg(spec);
  } else if (spec.family == "max3sat") {
    inst = make_max3sat(spec);
  } else if (spec.family == "mk-bim" || spec.family == "mk-dec3") {
    inst = make_mk(spec);
  } else if (spec.family == "file") {
    if (spec.file.empty()) throw SpecError("family 'file' needs a file path");
    inst = read_instance_file(spec.file);
  } else {
    throw SpecError("unknown instance family '" + spec.family + "'");
  }
  if (!inst->known_optimum() && inst->n() <= kBruteForceLimit) inst->set_known_optimum(brute_force_optimum(*inst));
  return std::move(*inst);
}

double brute_force_optimum(const ProblemInstance& instance) {
  const std::size_t n = instance.n();
  if (n > kBruteForceLimit) throw CapacityError("exhaustive search limited to n <= 22");
  EvalCounter scratch;
  Evaluator eval(instance, scratch);
  Solution x(n);
  double best = eval.evaluate(x, Purpose::kOracle);
  // Gray-code walk: one flip per step.
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << n); ++step) {
    x.flip(static_cast<std::size_t>(std::countr_zero(step)));
    best = std::max(best, eval.evaluate(x, Purpose::kOracle));
  }
  return best;
}

}  // namespace elympus
