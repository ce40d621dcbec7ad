#include <random>

#include "doctest.h"
#include "elympus/linkage/dependency_checks.hpp"
#include "elympus/linkage/hyperplane.hpp"
#include "elympus/problems/fixtures.hpp"
#include "elympus/problems/oracle.hpp"
#include "elympus/surrogate/comparison.hpp"
#include "elympus/surrogate/full_model.hpp"
#include "support/support.hpp"

using namespace elympus;
using namespace elympus::testing;

TEST_CASE("clause classification agrees with the written-out clauses") {
  const double vals[] = {0, 1, 2};
  for (double a : vals)
    for (double b : vals)
      for (double c : vals)
        for (double d : vals) {
          const auto r = classify_clauses(a, b, c, d, 0.0);
          CHECK(r.dependent() == clause_holds(a, b, c, d));
          CHECK(r.forward() == forward_clause_holds(a, b, c, d));
          CHECK(r.holds(1) == (a < b && c >= d));
          CHECK(r.holds(4) == (a < c && b >= d));
        }
}

TEST_CASE("non-monotonicity check on fe1 and a linear function") {
  auto fe1 = fixtures::fe1();
  EvalCounter c;
  Evaluator eval(fe1, c);
  auto x = Solution::from_string("0000");
  CHECK(non_monotonicity_check(eval, x, 0, 1).dependent());
  CHECK(c.true_evals() == 4);
  for (std::uint32_t v = 0; v < 16; ++v) {
    Solution s(from_index(v, 4));
    CHECK_FALSE(non_monotonicity_check(eval, s, 0, 2).dependent());
  }
  auto lin = fixtures::onemax(6);
  Evaluator el(lin, c);
  for (std::uint32_t v = 0; v < 64; ++v) {
    Solution s(from_index(v, 6));
    for (std::size_t g = 0; g < 6; ++g)
      for (std::size_t h = g + 1; h < 6; ++h) {
        CHECK_FALSE(non_monotonicity_check(el, s, g, h).dependent());
        CHECK_FALSE(non_linearity_check(el, s, g, h));
      }
  }
}

TEST_CASE("non-linearity check") {
  auto fe1 = fixtures::fe1();
  auto fe2 = fixtures::fe2();
  EvalCounter c;
  Evaluator e1(fe1, c), e2(fe2, c);
  auto x = Solution::from_string("0000");
  CHECK(non_linearity_check(e1, x, 0, 3));
  auto y = Solution::from_string("00000000");
  CHECK(non_linearity_check(e2, y, 0, 1));
}

TEST_CASE("checks never report an edge outside the oracle graph") {
  auto fe2 = fixtures::fe2();
  EvalCounter c;
  const Vig oracle = oracle_vig_nm(fe2, c);
  Evaluator eval(fe2, c);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    Solution x(from_index(static_cast<std::uint32_t>(rng() % 256), 8));
    const auto g = rng() % 8, h = (g + 1 + rng() % 7) % 8;
    if (non_monotonicity_check(eval, x, g, h).dependent()) CHECK(oracle.has_edge(g, h));
  }
}

TEST_CASE("close contexts and hyperplanes") {
  const Vig chain = fixtures::chain4_vig();
  CHECK(close_context(chain, 1) == std::vector<std::uint32_t>{0, 2});
  CHECK(close_context(Vig(4), 1).empty());
  CHECK(context_hyperplane(chain, 0, BitVector::from_string("0101")).to_string() == "*1**");
  CHECK(context_hyperplane(Vig(6), 2, BitVector::from_string("111000")).to_string() == "******");

  Vig v(6);
  v.add_edge(1, 0);
  v.add_edge(1, 2);
  v.add_edge(1, 5);
  CHECK(context_hyperplane(v, 1, BitVector::from_string("111000")).to_string() == "1*1**0");
  CHECK(Hyperplane::parse("1*1**0") == context_hyperplane(v, 1, BitVector::from_string("111000")));

  CHECK(contexts_equal(chain, 0, BitVector::from_string("0101"), BitVector::from_string("1111")));
  CHECK_FALSE(contexts_equal(chain, 0, BitVector::from_string("0001"), BitVector::from_string("0101")));
  CHECK(contexts_equal(Vig(4), 2, BitVector::from_string("0000"), BitVector::from_string("1111")));

  EvalCounter c;
  auto fe2 = fixtures::fe2();
  CHECK(close_context(oracle_vig_nm(fe2, c), 2) == std::vector<std::uint32_t>{0, 1, 3, 4, 5});
}

TEST_CASE("vig bookkeeping and triangular text form") {
  Vig v(5);
  CHECK(v.add_edge(0, 3));
  CHECK_FALSE(v.add_edge(3, 0));
  CHECK_THROWS(v.add_edge(2, 2));
  v.add_edge(4, 1, ClauseClass::kBackward);
  CHECK(v.edge_count() == 2);
  CHECK(v.has_edge(3, 0));
  CHECK(v.clause(1, 4) == ClauseClass::kBackward);
  const Vig back = Vig::from_triangular(v.to_triangular());
  CHECK(back == v);
  CHECK(v.is_subgraph_of(back));
  Vig w(5);
  w.add_edge(0, 1);
  CHECK_FALSE(w.is_subgraph_of(v));
}

TEST_CASE("full model of fe1 reproduces the golden table") {
  auto fe1 = fixtures::fe1();
  EvalCounter c;
  Evaluator eval(fe1, c);
  const auto rows = lympus_rows(eval, fixtures::chain4_vig());
  const std::vector<std::tuple<std::size_t, std::string, std::string>> golden = {
      {0, "*0**", "{1}"},   {0, "*1**", "{0}"},   {1, "0*0*", "{1}"}, {1, "0*1*", "{0,1}"},
      {1, "1*0*", "{0,1}"}, {1, "1*1*", "{0}"},   {2, "*0*0", "{1}"}, {2, "*0*1", "{0,1}"},
      {2, "*1*0", "{0,1}"}, {2, "*1*1", "{0}"},   {3, "**0*", "{1}"}, {3, "**1*", "{0}"},
  };
  REQUIRE(rows.size() == golden.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].g == std::get<0>(golden[i]));
    CHECK(rows[i].context.to_string() == std::get<1>(golden[i]));
    CHECK(to_string(rows[i].pref) == std::get<2>(golden[i]));
  }
}

TEST_CASE("equal close contexts give equal preferences") {
  std::vector<std::pair<ProblemInstance, int>> cases;
  cases.emplace_back(fixtures::fe1(), 4);
  cases.emplace_back(fixtures::fe2(), 8);
  for (std::uint64_t s = 1; s <= 3; ++s) cases.emplace_back(random_3bounded(12, 10, s).instance, 12);
  std::mt19937_64 rng(17);
  for (auto& [inst, n] : cases) {
    EvalCounter c;
    const Vig g = oracle_vig_nm(inst, c);
    Evaluator eval(inst, c);
    for (int t = 0; t < 500; ++t) {
      const std::size_t v = rng() % n;
      Solution a(from_index(static_cast<std::uint32_t>(rng()), n));
      Solution b(from_index(static_cast<std::uint32_t>(rng()), n));
      b.assign(blend(b.bits(), a.bits(), g.row(v)));
      REQUIRE(contexts_equal(g, v, a.bits(), b.bits()));
      CHECK(compute_b_star(eval, v, a).pref == compute_b_star(eval, v, b).pref);
    }
  }
}
