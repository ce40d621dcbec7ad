#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "doctest.h"
#include "elympus/common/errors.hpp"
#include "elympus/harness/config.hpp"
#include "elympus/harness/curves.hpp"
#include "elympus/harness/experiment.hpp"
#include "elympus/harness/records.hpp"
#include "elympus/harness/significance.hpp"
#include "elympus/harness/stats.hpp"

using namespace elympus;
namespace fs = std::filesystem;

namespace {

std::vector<double> range(double from, int count) {
  std::vector<double> v(count);
  std::iota(v.begin(), v.end(), from);
  return v;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ExperimentConfig small_config(const std::string& out_dir) {
  ExperimentConfig c;
  InstanceSpec s;
  s.family = "concat-bim";
  s.k = 4;
  s.blocks = 2;
  c.instances = {s};
  c.repetitions = 3;
  c.seed = 11;
  c.budgets.ffe = 5000;
  c.out_dir = out_dir;
  c.threads = 2;
  return c;
}

}  // namespace

TEST_CASE("csv header and row line up") {
  const auto header = csv_header();
  CHECK(header.rfind("instance,family,n,rep,seed,optimizer,verify_policy,success,termination,", 0) == 0);
  RunRecord r;
  r.instance = "0-x";
  r.family = "concat-bim";
  r.n = 8;
  r.rep = 2;
  r.seed = 99;
  r.result.best_fitness = 4.0;
  r.optimum = 4.0;
  r.result.optimum_reached = true;
  r.result.termination = Termination::kOptimum;
  const auto row = csv_row(r);
  CHECK(std::count(header.begin(), header.end(), ',') == std::count(row.begin(), row.end(), ','));
  CHECK(row.rfind("0-x,concat-bim,8,2,99,olympus,1/v,1,optimum,4,4,", 0) == 0);
}

TEST_CASE("format_double round trips") {
  for (double v : {0.1, 1.0 / 3.0, 12345.678, -2.5}) CHECK(std::stod(format_double(v)) == v);
  CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("median") {
  CHECK(median({}) == 0.0);
  CHECK(median({3, 1, 2}) == 2.0);
  CHECK(median({4, 1, 3, 2}) == 2.5);
}

TEST_CASE("rank-sum test") {
  const auto same = range(1, 30);
  CHECK_FALSE(wilcoxon_rank_sum(same, same).significant);

  // No ties: U = 0, mean 450, variance 30*30*61/12.
  const auto r = wilcoxon_rank_sum(range(1, 30), range(101, 30));
  const double z = 450.0 / std::sqrt(30.0 * 30.0 * 61.0 / 12.0);
  CHECK(std::abs(r.statistic) == doctest::Approx(z).epsilon(1e-3));
  CHECK(r.significant);
  CHECK(r.p_value < 1e-6);

  CHECK_THROWS_AS(wilcoxon_rank_sum(range(1, 4), range(1, 30)), InsufficientSamples);
}

TEST_CASE("sign test") {
  // Ten positive differences: p = 2 / 2^10.
  const auto r = sign_test(range(11, 10), range(1, 10));
  CHECK(r.p_value == doctest::Approx(2.0 / 1024.0));
  CHECK(r.significant);
  CHECK_FALSE(sign_test(range(1, 10), range(1, 10)).significant);
  CHECK_THROWS_AS(sign_test(range(1, 10), range(1, 9)), SpecError);
}

TEST_CASE("compare_stats picks the most effective entry") {
  AggregateStats fast, slow, flaky;
  fast.optimizer = "fast";
  fast.successes = 30;
  fast.ffe_until_best_samples = range(1, 30);
  slow.optimizer = "slow";
  slow.successes = 30;
  slow.ffe_until_best_samples = range(101, 30);
  flaky.optimizer = "flaky";
  flaky.successes = 20;
  flaky.ffe_until_best_samples = range(1, 20);
  const auto report = compare_stats({slow, fast, flaky});
  CHECK(report.most_effective == "fast");
  REQUIRE(report.pairs.size() == 3);
  CHECK(report.pairs[0].better == "fast");
  CHECK(report.pairs[1].better == "slow");
  CHECK(report.pairs[1].reason == "more successful runs");
  CHECK(report.to_text().find("most effective: fast") != std::string::npos);

  const auto tie = compare_stats({fast, fast});
  CHECK(tie.most_effective.empty());
  CHECK_THROWS_AS(compare_stats({fast}), SpecError);
}

TEST_CASE("config json round trip") {
  auto c = small_config("somewhere");
  c.verify = VerifyPolicy::kOneOverV;
  c.optimizer = OptimizerKind::kFihcOnly;
  c.trace = true;
  const auto back = ExperimentConfig::from_json(c.to_json());
  CHECK(back.to_json() == c.to_json());
  CHECK(back.instances == c.instances);

  auto j = c.to_json();
  j["repetitons"] = 3;
  CHECK_THROWS_AS(ExperimentConfig::from_json(j), SpecError);
  auto k = c.to_json();
  k["repetitions"] = 0;
  CHECK_THROWS_AS(ExperimentConfig::from_json(k), SpecError);
  ExperimentConfig empty;
  CHECK_THROWS_AS(empty.validate(), SpecError);
}

TEST_CASE("run seeds are distinct and stable") {
  std::set<std::uint64_t> seen;
  for (std::size_t i = 0; i < 100; ++i) seen.insert(run_seed(5, i));
  CHECK(seen.size() == 100);
  CHECK(run_seed(5, 7) == run_seed(5, 7));
  CHECK(run_seed(5, 7) != run_seed(6, 7));
}

TEST_CASE("tiny budget ends on the ffe budget") {
  auto c = small_config("unused");
  c.repetitions = 1;
  c.budgets.ffe = 10;
  const auto res = run_experiment(c);
  REQUIRE(res.records.size() == 1);
  CHECK(res.records[0].result.termination == Termination::kFfeBudget);
  CHECK_FALSE(res.records[0].success());
  CHECK(res.aggregates[0].successes == 0);
}

TEST_CASE("experiment records and aggregates") {
  const auto c = small_config("unused");
  std::size_t callbacks = 0;
  const auto res = run_experiment(c, [&](const RunRecord&) { ++callbacks; });
  CHECK(callbacks == 3);
  REQUIRE(res.records.size() == 3);
  REQUIRE(res.aggregates.size() == 1);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& r = res.records[i];
    CHECK(r.rep == i);
    CHECK(r.seed == run_seed(c.seed, i));
    CHECK(r.denominator == Denominator::kOracle);
    const auto sum = std::accumulate(r.result.ffe_by_purpose.begin(), r.result.ffe_by_purpose.end(), std::uint64_t{0});
    CHECK(sum == r.result.true_evals);
    CHECK(r.result.ffe_until_best <= r.result.true_evals);
    CHECK(r.found_reference_edges <= r.reference_edges);

    const auto curves = build_curves(r);
    REQUIRE_FALSE(curves.points.empty());
    for (std::size_t p = 1; p < curves.points.size(); ++p) {
      CHECK(curves.points[p].ffe > curves.points[p - 1].ffe);
      CHECK(curves.points[p].fitness >= curves.points[p - 1].fitness);
      CHECK(curves.points[p].dependencies >= curves.points[p - 1].dependencies);
      CHECK(curves.points[p].surrogate >= curves.points[p - 1].surrogate);
    }
    CHECK(curves.points.back().ffe == r.result.true_evals);
  }
  const auto& a = res.aggregates[0];
  CHECK(a.runs == 3);
  std::size_t wins = 0;
  for (const auto& r : res.records) wins += r.success() ? 1 : 0;
  CHECK(a.successes == wins);
  CHECK(a.ffe_until_best_samples.size() == wins);
  CHECK(AggregateStats::from_json(a.to_json()).to_json() == a.to_json());
}

TEST_CASE("outputs are byte identical across runs") {
  const auto root = fs::temp_directory_path() / "elympus_harness_test";
  fs::remove_all(root);
  auto c1 = small_config((root / "a").string());
  auto c2 = small_config((root / "b").string());
  c2.threads = 1;
  c1.trace = c2.trace = true;
  write_outputs(c1, run_experiment(c1));
  write_outputs(c2, run_experiment(c2));
  CHECK(slurp(root / "a" / "runs.csv") == slurp(root / "b" / "runs.csv"));
  auto strip = [](std::string s) {
    const auto p = s.find("\"out_dir\"");
    return p == std::string::npos ? s : s.substr(0, p) + s.substr(s.find('\n', p));
  };
  CHECK(strip(slurp(root / "a" / "aggregate.json")) == strip(slurp(root / "b" / "aggregate.json")));
  std::size_t curve_files = 0;
  for (const auto& e : fs::directory_iterator(root / "a" / "curves")) {
    ++curve_files;
    CHECK(slurp(e.path()) == slurp(root / "b" / "curves" / e.path().filename()));
  }
  CHECK(curve_files == 3);
  CHECK(fs::exists(root / "a" / "traces"));
  fs::remove_all(root);
}
