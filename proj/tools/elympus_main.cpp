#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "elympus/common/errors.hpp"
#include "elympus/harness/config.hpp"
#include "elympus/harness/experiment.hpp"
#include "elympus/harness/significance.hpp"
#include "elympus/harness/stats.hpp"
#include "elympus/problems/dimacs.hpp"
#include "elympus/problems/instance_factory.hpp"
#include "elympus/problems/instance_io.hpp"
#include "elympus/problems/oracle.hpp"

using namespace elympus;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

struct InstanceFlags {
  std::string family;
  int k = 0;
  int blocks = 0;
  int overlap = 0;
  std::size_t n = 0;
  int nk_k = 4;
  int m = 0;
  double clause_ratio = 4.27;
  std::uint64_t seed = 0;
  std::string file;

  void attach(CLI::App* app) {
    app->add_option("--family", family, "concat-bim|concat-nbim|concat-dec|nk|isg|max3sat|mk-bim|mk-dec3|file");
    app->add_option("--k", k, "block size");
    app->add_option("--blocks", blocks, "number of blocks");
    app->add_option("--overlap", overlap, "block overlap");
    app->add_option("--n", n, "problem size");
    app->add_option("--nk-k", nk_k, "NK epistasis");
    app->add_option("--m", m, "mk chain length");
    app->add_option("--clause-ratio", clause_ratio, "max3sat clauses per variable");
    app->add_option("--instance-seed", seed, "generator seed");
    app->add_option("--instance-file", file, "JSON or DIMACS instance file");
  }

  InstanceSpec spec() const {
    InstanceSpec s;
    s.family = family;
    s.k = k;
    s.blocks = blocks;
    s.overlap = overlap;
    s.n = n;
    s.nk_k = nk_k;
    s.m = m;
    s.clause_ratio = clause_ratio;
    s.seed = seed;
    s.file = file;
    return s;
  }
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  return out;
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eLyMPuS linkage-learning surrogate optimizer"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "run an experiment and write runs.csv / aggregate.json");
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> reps;
  std::optional<double> ffe_budget;
  std::optional<double> time_budget;
  std::optional<std::string> optimizer;
  std::optional<std::string> verify;
  std::optional<std::string> out_dir;
  std::optional<std::size_t> threads;
  bool trace = false;
  bool no_curves = false;
  bool quiet = false;
  InstanceFlags run_instance;
  run_cmd->add_option("--config", config_path, "experiment config file (JSON)");
  run_cmd->add_option("--seed", seed, "master seed");
  run_cmd->add_option("--reps", reps, "repetitions per instance");
  run_cmd->add_option("--ffe-budget", ffe_budget, "true evaluations per run");
  run_cmd->add_option("--time-budget", time_budget, "wall-clock seconds per run");
  run_cmd->add_option("--optimizer", optimizer, "olympus|fihc-only|fihc-true");
  run_cmd->add_option("--verify-policy", verify, "1/v|always|never");
  run_cmd->add_option("--out-dir", out_dir, "output directory");
  run_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
  run_cmd->add_flag("--trace", trace, "write one trace line per hill-climber flip");
  run_cmd->add_flag("--no-curves", no_curves, "skip curve CSVs");
  run_cmd->add_flag("-q,--quiet", quiet, "no progress output");
  run_instance.attach(run_cmd);

  // make-instance
  auto* make_cmd = app.add_subcommand("make-instance", "generate an instance and write it to a file");
  InstanceFlags make_instance_flags;
  std::string make_out;
  bool as_dimacs = false;
  make_instance_flags.attach(make_cmd);
  make_cmd->add_option("-o,--out", make_out, "output path")->required();
  make_cmd->add_flag("--dimacs", as_dimacs, "write max3sat instances as DIMACS CNF");

  // oracle-vig
  auto* vig_cmd = app.add_subcommand("oracle-vig", "print the exhaustive dependency graph (n <= 22)");
  InstanceFlags vig_instance;
  bool non_linear = false;
  vig_instance.attach(vig_cmd);
  vig_cmd->add_flag("--nl", non_linear, "non-linearity graph instead of non-monotonicity");

  // compare
  auto* cmp_cmd = app.add_subcommand("compare", "significance tests over aggregate.json files");
  std::vector<std::string> aggregates;
  cmp_cmd->add_option("aggregates", aggregates, "aggregate.json files")->required()->expected(2, -1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run_cmd) {
      ExperimentConfig cfg;
      if (!config_path.empty()) cfg = load_config(config_path);
      if (!run_instance.family.empty()) cfg.instances = {run_instance.spec()};
      if (seed) cfg.seed = *seed;
      if (reps) cfg.repetitions = *reps;
      if (ffe_budget) cfg.budgets.ffe = static_cast<std::uint64_t>(*ffe_budget);
      if (time_budget) cfg.budgets.wall_clock = std::chrono::milliseconds(static_cast<std::int64_t>(*time_budget * 1000));
      if (optimizer) cfg.optimizer = parse_optimizer(*optimizer);
      if (verify) cfg.verify = parse_verify_policy(*verify);
      if (out_dir) cfg.out_dir = *out_dir;
      if (threads) cfg.threads = *threads;
      if (trace) cfg.trace = true;
      if (no_curves) cfg.curves = false;
      if (ffe_budget && *ffe_budget < 1) throw SpecError("ffe budget must be positive");
      if (time_budget && *time_budget <= 0) throw SpecError("time budget must be positive");
      cfg.validate();
      auto progress = [&](const RunRecord& r) {
        if (quiet) return;
        std::fprintf(stderr, "%s rep %zu: %s fitness=%s ffe=%llu\n", r.instance.c_str(), r.rep,
                     r.success() ? "solved" : "unsolved",
                     r.result.best_fitness ? format_double(*r.result.best_fitness).c_str() : "-",
                     static_cast<unsigned long long>(r.result.true_evals));
      };
      const auto result = run_experiment(cfg, progress);
      write_outputs(cfg, result);
      for (const auto& s : result.aggregates) {
        std::printf("%s: success %s%%, median ffe until best %s, savings %s%%, discovery %s%%\n", s.instance.c_str(),
                    format_double(s.success_rate).c_str(), format_double(s.median_ffe_until_best).c_str(),
                    format_double(s.savings_ratio).c_str(), format_double(s.median_discovery_ratio).c_str());
      }
    } else if (*make_cmd) {
      const auto spec = make_instance_flags.spec();
      if (as_dimacs) {
        if (spec.family != "max3sat") throw SpecError("--dimacs applies to max3sat only");
        auto out = open_out(make_out);
        write_dimacs(out, spec.file.empty() ? planted_max3sat(spec.n, spec.clause_ratio, spec.seed)
                                            : read_dimacs(spec.file));
      } else {
        write_instance_file(make_instance(spec), make_out);
      }
    } else if (*vig_cmd) {
      const auto inst = make_instance(vig_instance.spec());
      if (inst.n() > kOracleMaxN) throw DomainError("oracle graph needs n <= " + std::to_string(kOracleMaxN));
      EvalCounter counter;
      const auto table = fitness_table(inst, counter);
      const auto g = non_linear ? oracle_vig_nl(inst, table) : oracle_vig_nm(inst, table);
      std::cout << g.to_triangular();
    } else if (*cmp_cmd) {
      std::vector<std::vector<AggregateStats>> sets;
      for (const auto& path : aggregates) {
        std::vector<AggregateStats> set;
        for (const auto& s : read_json(path).at("instances")) {
          auto stats = AggregateStats::from_json(s);
          stats.optimizer = path + ":" + stats.optimizer;
          set.push_back(std::move(stats));
        }
        sets.push_back(std::move(set));
      }
      for (std::size_t i = 0; i < sets.front().size(); ++i) {
        std::vector<AggregateStats> row;
        for (const auto& set : sets) {
          if (i >= set.size()) throw SpecError("aggregate files list different instance counts");
          row.push_back(set[i]);
        }
        std::cout << "instance " << row.front().instance << '\n' << compare_stats(row).to_text();
      }
    }
  } catch (const IoError& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
  return 0;
}
