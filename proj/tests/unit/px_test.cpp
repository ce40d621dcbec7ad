#include <random>

#include "doctest.h"
#include "elympus/common/errors.hpp"
#include "elympus/problems/fixtures.hpp"
#include "elympus/problems/oracle.hpp"
#include "elympus/px/pxrll.hpp"
#include "support/support.hpp"

using namespace elympus;
using namespace elympus::testing;

namespace {

std::vector<std::vector<std::uint32_t>> mask_sets(const std::vector<PxMask>& masks) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& m : masks) out.push_back(m.indices);
  return out;
}

}  // namespace

TEST_CASE("mask examples") {
  auto fe2 = fixtures::fe2();
  EvalCounter c;
  const Vig oracle = oracle_vig_nm(fe2, c);
  const auto zeros = BitVector::from_string("00000000"), ones = BitVector::from_string("11111111");
  CHECK(px_masks(zeros, ones, oracle).size() == 1);
  CHECK(mask_sets(px_masks(BitVector::from_string("00"), BitVector::from_string("11"), Vig(2))) ==
        std::vector<std::vector<std::uint32_t>>{{0}, {1}});
  auto sep = fixtures::two_block_bim4();
  CHECK(mask_sets(px_masks(zeros, ones, oracle_vig_nm(sep, c))) ==
        std::vector<std::vector<std::uint32_t>>{{0, 1, 2, 3}, {4, 5, 6, 7}});
  CHECK_THROWS_AS(px_masks(zeros, zeros, oracle), ContractError);
}

TEST_CASE("exchange examples") {
  const auto x = Solution::from_string("0000"), p = Solution::from_string("1111");
  const PxMask m{BitVector::from_string("1100"), {0, 1}};
  CHECK(exchange(x, p, m).to_string() == "1100");
  const PxMask all{BitVector::from_string("1111"), {0, 1, 2, 3}};
  CHECK(exchange(x, p, all).bits() == p.bits());
  const auto s1 = Solution::from_string("00 00 11 00"), s2 = Solution::from_string("01 10 01 01");
  const PxMask x5{BitVector::from_string("00 00 10 00"), {4}};
  CHECK(exchange(s1, s2, x5).to_string(2) == "00 00 01 00");
}

TEST_CASE("masks partition the difference set") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 5 + rng() % 80;
    Vig v(n);
    for (std::size_t e = 0; e < rng() % (2 * n); ++e) {
      const auto a = rng() % n, b = rng() % n;
      if (a != b) v.add_edge(a, b);
    }
    BitVector xa(n), xb(n);
    for (std::size_t i = 0; i < n; ++i) {
      xa.set(i, rng() & 1);
      xb.set(i, rng() & 1);
    }
    if (xa == xb) continue;
    const auto masks = px_masks(xa, xb, v);
    BitVector seen(n);
    for (const auto& m : masks) {
      CHECK_FALSE(m.indices.empty());
      CHECK(and_not(m.bits, diff(xa, xb)).none());
      for (auto i : m.indices) {
        CHECK_FALSE(seen.get(i));
        seen.set(i, true);
      }
      // Components are closed under graph edges inside the difference set.
      for (auto i : m.indices) {
        for (auto j : v.neighbors(i)) {
          if (diff(xa, xb).get(j)) CHECK(m.bits.get(j));
        }
      }
    }
    CHECK(seen == diff(xa, xb));
    for (std::size_t k = 1; k < masks.size(); ++k) CHECK(masks[k - 1].indices.front() < masks[k].indices.front());
  }
}

TEST_CASE("verdict rule") {
  CHECK(make_verdict(Relation::kLess, Relation::kGreater).consistent);
  CHECK(make_verdict(Relation::kEqual, Relation::kEqual).consistent);
  CHECK_FALSE(make_verdict(Relation::kLess, Relation::kLess).consistent);
  CHECK_FALSE(make_verdict(Relation::kEqual, Relation::kGreater).consistent);
}

TEST_CASE("oracle masks on fe2 are consistent for a sample of parents") {
  auto fe2 = fixtures::fe2();
  EvalCounter c;
  const Vig oracle = oracle_vig_nm(fe2, c);
  Evaluator eval(fe2, c);
  for (std::uint32_t a = 0; a < 256; a += 3) {
    for (std::uint32_t b = 0; b < 256; b += 5) {
      if (a == b) continue;
      Solution xa(from_index(a, 8)), xb(from_index(b, 8));
      for (const auto& m : px_masks(xa.bits(), xb.bits(), oracle)) {
        const auto probe = consistency_check(eval, xa, xb, m);
        CHECK(probe.verdict.consistent);
        CHECK(probe.verdict.relation_a == static_cast<Relation>(
                                              sign3(fe2_ref(a), fe2_ref(to_index(probe.offspring_a.bits())))));
      }
    }
  }
}

TEST_CASE("incomplete graph yields inconsistent masks on fe2") {
  auto fe2 = fixtures::fe2();
  EvalCounter c;
  Evaluator eval(fe2, c);
  const Vig partial = fixtures::fe2_partial_vig();
  std::size_t bad = 0;
  for (std::uint32_t a = 0; a < 256; ++a) {
    for (std::uint32_t b = a + 1; b < 256; b += 7) {
      Solution xa(from_index(a, 8)), xb(from_index(b, 8));
      for (const auto& m : px_masks(xa.bits(), xb.bits(), partial)) {
        bad += consistency_check(eval, xa, xb, m).verdict.consistent ? 0 : 1;
      }
    }
  }
  CHECK(bad > 0);
}

TEST_CASE("separable masks preserve the fitness sum") {
  auto inst = fixtures::two_block_bim4();
  EvalCounter c;
  const Vig nl = oracle_vig_nl(inst, c);
  for (std::uint32_t a = 0; a < 256; a += 3) {
    for (std::uint32_t b = 0; b < 256; ++b) {
      if (a == b) continue;
      for (const auto& m : px_masks(from_index(a, 8), from_index(b, 8), nl)) {
        const auto oa = to_index(blend(from_index(a, 8), from_index(b, 8), m.bits));
        const auto ob = to_index(blend(from_index(b, 8), from_index(a, 8), m.bits));
        CHECK(two_block_ref(a) + two_block_ref(b) == two_block_ref(oa) + two_block_ref(ob));
      }
    }
  }
}

TEST_CASE("pxrll over the oracle graph discovers nothing") {
  auto fe2 = fixtures::fe2();
  EvalCounter oc;
  const Vig oracle = oracle_vig_nm(fe2, oc);
  std::mt19937_64 pick(4);
  for (int t = 0; t < 200; ++t) {
    SurrogateStore store(8);
    for (const auto& e : oracle.edges()) store.add_edge(e.g, e.h, DiscoverySource::kExternal);
    EvalCounter c;
    Evaluator eval(fe2, c);
    Rng rng(static_cast<std::uint64_t>(t));
    Solution a(from_index(static_cast<std::uint32_t>(pick() % 256), 8));
    Solution b(from_index(static_cast<std::uint32_t>(pick() % 256), 8));
    if (a.bits() == b.bits()) continue;
    const auto out = pxrll(store, eval, rng, a, b);
    CHECK(out.discoveries.empty());
    for (const auto& m : out.masks) CHECK(m.verdict.consistent);
    CHECK(fe2_ref(to_index(out.offspring.bits())) >= fe2_ref(to_index(a.bits())));
  }
}

TEST_CASE("pxrll discoveries on an incomplete graph are oracle edges") {
  auto fe2 = fixtures::fe2();
  EvalCounter oc;
  const Vig oracle = oracle_vig_nm(fe2, oc);
  std::mt19937_64 pick(6);
  std::size_t found = 0;
  for (int t = 0; t < 1000; ++t) {
    SurrogateStore store(8);
    for (const auto& e : fixtures::fe2_partial_vig().edges()) store.add_edge(e.g, e.h, DiscoverySource::kExternal);
    EvalCounter c;
    Evaluator eval(fe2, c);
    Rng rng(static_cast<std::uint64_t>(t));
    Solution a(from_index(static_cast<std::uint32_t>(pick() % 256), 8));
    Solution b(from_index(static_cast<std::uint32_t>(pick() % 256), 8));
    if (a.bits() == b.bits()) continue;
    const auto out = pxrll(store, eval, rng, a, b);
    for (const auto& e : out.discoveries) CHECK(oracle.has_edge(e.g, e.h));
    for (const auto& m : out.masks) {
      if (m.outside && m.size > 0) CHECK(m.discovery_evals <= 2 * ceil_log2(8) + 2 * ceil_log2(m.size) + 2);
    }
    found += out.discoveries.size();
    CHECK(store.vig().is_subgraph_of(oracle));
  }
  CHECK(found > 0);
}

TEST_CASE("link discovery probe costs four evaluations absent escalation") {
  for (int graph = 0; graph < 2; ++graph) {
    auto inst = graph == 0 ? fixtures::fe1() : fixtures::fe2();
    EvalCounter oc;
    const Vig oracle = oracle_vig_nm(inst, oc);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      SurrogateStore store(inst.n());
      if (graph == 1) {
        for (const auto& e : oracle.edges()) store.add_edge(e.g, e.h, DiscoverySource::kExternal);
      }
      EvalCounter c;
      Evaluator eval(inst, c);
      Rng rng(seed);
      const auto edges = px_link_discovery(store, eval, rng);
      CHECK(c.by_purpose(Purpose::kInitPx) <= 4);
      if (c.by_purpose(Purpose::kInitPxDiscovery) == 0) CHECK(c.true_evals() <= 4);
      CHECK(c.true_evals() >= 2);
      if (graph == 1) CHECK(edges.empty());
      for (const auto& e : edges) CHECK(oracle.has_edge(e.g, e.h));
    }
  }
}
