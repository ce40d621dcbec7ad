#include <random>

#include "doctest.h"
#include "elympus/common/errors.hpp"
#include "elympus/problems/fixtures.hpp"
#include "elympus/problems/oracle.hpp"
#include "elympus/surrogate/comparison.hpp"
#include "elympus/surrogate/full_model.hpp"
#include "elympus/surrogate/recursive_ll.hpp"
#include "support/support.hpp"

using namespace elympus;
using namespace elympus::testing;

TEST_CASE("fresh store") {
  SurrogateStore s(4);
  CHECK(s.vig().edge_count() == 0);
  for (std::size_t g = 0; g < 4; ++g) CHECK(s.pairs(g).empty());
  SurrogateStore one(1);
  CHECK(one.pairs(0).empty());
  CHECK_THROWS_AS(SurrogateStore(0), SpecError);
}

TEST_CASE("preference text form") {
  CHECK(to_string(Preference::kZero) == "{0}");
  CHECK(to_string(Preference::kBoth) == "{0,1}");
  CHECK(parse_preference("{1}") == Preference::kOne);
  CHECK(preference_from(true, Relation::kGreater) == Preference::kZero);
  CHECK(preference_from(true, Relation::kLess) == Preference::kOne);
  CHECK(preference_from(false, Relation::kEqual) == Preference::kBoth);
}

TEST_CASE("b* examples") {
  auto fe2 = fixtures::fe2();
  EvalCounter c;
  Evaluator eval(fe2, c);
  auto x = Solution::from_string("11 10 01 01");
  CHECK(compute_b_star(eval, 0, x).pref == Preference::kZero);
  auto x1 = Solution::from_string("01 10 01 01");
  CHECK(compute_b_star(eval, 2, x1).pref == Preference::kOne);
  CHECK(c.by_purpose(Purpose::kBStar) == 4);
  auto flat = fixtures::onemax(3);
  ProblemInstance constant(3, {{{0}, {1.0, 1.0}}}, InstanceMeta{"const", 0, {}}, true);
  Evaluator ec(constant, c);
  auto z = Solution::from_string("010");
  CHECK(compute_b_star(ec, 1, z).pref == Preference::kBoth);
}

TEST_CASE("find_pair on the walkthrough store") {
  auto store = fe2_walkthrough_store();
  CHECK(store.pair_count() == 11);
  const auto hit = find_pair(store, 0, BitVector::from_string("11 10 01 01"));
  REQUIRE(hit);
  CHECK(hit->snapshot.to_string(2) == "01 10 10 01");
  CHECK(hit->pref == Preference::kZero);
  CHECK_FALSE(find_pair(store, 1, BitVector::from_string("01 10 01 01")));
  SurrogateStore empty(8);
  CHECK_FALSE(find_pair(empty, 3, BitVector::from_string("01 10 01 01")));
}

TEST_CASE("indexed lookup equals the first-match scan") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 20;
    SurrogateStore store(n);
    for (int step = 0; step < 400; ++step) {
      const auto g = rng() % n;
      if (rng() % 10 == 0) store.add_edge(g, (g + 1 + rng() % (n - 1)) % n, DiscoverySource::kExternal);
      BitVector x(n);
      for (std::size_t i = 0; i < n; ++i) x.set(i, rng() & 1);
      const auto hit = store.lookup(g, x);
      const auto lin = store.find_linear(g, x);
      CHECK(hit.has_value() == lin.has_value());
      if (hit && lin) CHECK(hit->first == *lin);
      if (!hit) store.append(g, x, (rng() & 1) ? Preference::kOne : Preference::kZero);
    }
  }
}

TEST_CASE("conflicting pairs in one context are reported") {
  SurrogateStore store(4);
  store.add_edge(0, 1, DiscoverySource::kExternal);
  store.append(0, BitVector::from_string("0100"), Preference::kOne);
  store.append(0, BitVector::from_string("1110"), Preference::kZero);
  const auto hit = store.lookup(0, BitVector::from_string("0101"));
  REQUIRE(hit);
  CHECK(hit->first == 0);
  REQUIRE(hit->conflict);
  CHECK(*hit->conflict == 1);
}

TEST_CASE("unverified answers cost nothing") {
  auto fe2 = fixtures::fe2();
  EvalCounter c;
  Evaluator eval(fe2, c);
  auto store = fe2_walkthrough_store();
  ScriptedRng rng;
  auto x = Solution::from_string("11 10 01 01");
  const auto out = partial_comparison(store, eval, rng, 0, x, false);
  CHECK(out.surrogate);
  CHECK(out.pref == Preference::kZero);
  CHECK(c.true_evals() == 0);
  CHECK(c.surrogate_answers() == 1);
  // A miss appends a pair.
  SurrogateStore fresh(8);
  partial_comparison(fresh, eval, rng, 3, x, false);
  CHECK(fresh.pairs(3).size() == 1);
  CHECK(c.by_purpose(Purpose::kBStar) == 2);
}

TEST_CASE("walkthrough: verified comparisons and the x3 discovery") {
  auto fe2 = fixtures::fe2();
  EvalCounter c;
  Evaluator eval(fe2, c);
  auto store = fe2_walkthrough_store();
  ScriptedRng rng;
  rng.queue_split({4}, {1, 7});
  rng.queue_split({1}, {7});

  auto x = Solution::from_string("11 10 01 01");
  auto step1 = partial_comparison(store, eval, rng, 0, x, true);
  CHECK(step1.pref == Preference::kZero);
  CHECK(step1.verified);
  CHECK_FALSE(step1.discovery);
  x.flip(0);
  CHECK(x.to_string(2) == "01 10 01 01");

  const auto before_x2 = store.pairs(1).size();
  auto step2 = partial_comparison(store, eval, rng, 1, x, true);
  CHECK_FALSE(step2.verified);
  CHECK(step2.pref == Preference::kOne);
  CHECK(store.pairs(1).size() == before_x2 + 1);

  const auto stored = find_pair(store, 2, x.bits());
  REQUIRE(stored);
  CHECK(stored->pref == Preference::kZero);
  CHECK(stored->snapshot.to_string(2) == "00 00 11 00");
  auto step3 = partial_comparison(store, eval, rng, 2, x, true);
  CHECK(step3.pref == Preference::kOne);
  CHECK(step3.discovery);
  CHECK(rng.pending_splits() == 0);
  CHECK(store.vig().has_edge(2, 1));
  CHECK(store.vig().edge_count() == 5);
  REQUIRE(store.discoveries().size() == 5);
  CHECK(store.discoveries().back().edge == Edge{1, 2});
  CHECK(store.discoveries().back().source == DiscoverySource::kVerification);
}

TEST_CASE("walkthrough bisection probes") {
  auto fe2 = fixtures::fe2();
  EvalCounter c;
  Evaluator eval(fe2, c);
  auto store = fe2_walkthrough_store();
  ScriptedRng rng;
  rng.queue_split({4}, {1, 7});
  rng.queue_split({1}, {7});
  const auto s1 = BitVector::from_string("00 00 11 00");
  const auto s2 = BitVector::from_string("01 10 01 01");
  auto probe1 = Solution::from_string("00 00 01 00");
  auto probe2 = Solution::from_string("01 00 01 00");
  CHECK(compute_b_star(eval, 2, probe1).pref == Preference::kZero);
  CHECK(compute_b_star(eval, 2, probe2).pref == Preference::kOne);
  const auto before = c.true_evals();
  const auto r = recursive_ll(store, eval, rng, s1, Preference::kZero, s2, Preference::kOne, 2,
                              DiscoverySource::kVerification);
  CHECK(r.edge == Edge{2, 1});
  CHECK(r.group_size == 3);
  CHECK(r.levels == 2);
  CHECK(r.evals == 4);
  CHECK(c.true_evals() - before == 4);
  CHECK(r.witness.to_string(2) == "00 00 01 00");
  CHECK(r.new_edge);
}

TEST_CASE("recursive_ll base case and contract") {
  auto fe2 = fixtures::fe2();
  EvalCounter c;
  Evaluator eval(fe2, c);
  SurrogateStore store(8);
  ScriptedRng rng;
  // Only x2 differs besides g = x3.
  const auto s1 = BitVector::from_string("00 00 01 00");
  const auto s2 = BitVector::from_string("01 00 01 00");
  const auto r = recursive_ll(store, eval, rng, s1, Preference::kZero, s2, Preference::kOne, 2,
                              DiscoverySource::kVerification);
  CHECK(r.edge == Edge{2, 1});
  CHECK(r.evals == 0);
  CHECK_THROWS_AS(recursive_ll(store, eval, rng, s1, Preference::kZero, s2, Preference::kZero, 2,
                               DiscoverySource::kVerification),
                  ContractError);
}

TEST_CASE("recursive_ll finds true dependencies within the bisection bound") {
  auto fe2 = fixtures::fe2();
  EvalCounter oc;
  const Vig oracle = oracle_vig_nm(fe2, oc);
  std::mt19937_64 rng(99);
  Rng split_rng(5);
  for (int t = 0; t < 300; ++t) {
    const auto m = draw_mismatch(fe2, fixtures::fe2_partial_vig(), rng);
    SurrogateStore store(8);
    EvalCounter c;
    Evaluator eval(fe2, c);
    const auto r = recursive_ll(store, eval, split_rng, m.s1, m.p1, m.s2, m.p2, m.g, DiscoverySource::kVerification);
    const auto chk = check_discovery(r, oracle, fe2_ref);
    CHECK(chk.in_oracle);
    CHECK(chk.witness_ok);
    CHECK(chk.cost_ok);
    CHECK(c.by_purpose(Purpose::kDiscovery) == r.evals);
  }
}

TEST_CASE("a full model over the oracle graph answers every flip exactly") {
  std::vector<ProblemInstance> insts;
  insts.push_back(fixtures::fe1());
  insts.push_back(fixtures::fe2());
  insts.push_back(random_3bounded(10, 8, 4).instance);
  for (auto& inst : insts) {
    EvalCounter c;
    const Vig g = oracle_vig_nm(inst, c);
    Evaluator eval(inst, c);
    auto store = build_full_store(eval, g);
    const std::size_t n = inst.n();
    for (std::uint32_t x = 0; x < (1U << n); ++x) {
      for (std::size_t v = 0; v < n; ++v) {
        Solution s(from_index(x, n));
        const auto hit = find_pair(store, v, s.bits());
        REQUIRE(hit);
        CHECK(hit->pref == compute_b_star(eval, v, s).pref);
      }
    }
  }
}
