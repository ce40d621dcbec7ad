#pragma once

// Shared test helpers: a scripted random source and ground truth computed
// directly from the fitness formulas, independent of the library's tables.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "elympus/common/rng.hpp"
#include "elympus/problems/evaluator.hpp"
#include "elympus/problems/problem_instance.hpp"
#include "elympus/surrogate/comparison.hpp"
#include "elympus/surrogate/recursive_ll.hpp"

namespace elympus::testing {

/// Identity permutations and queued split results; coins and draws come from
/// a fixed engine so unscripted decisions stay deterministic.
class ScriptedRng final : public RandomSource {
 public:
  explicit ScriptedRng(std::uint64_t seed = 7) : engine_(seed) {}

  std::uint64_t next_u64() override { return engine_(); }

  std::vector<std::uint32_t> permutation(std::size_t n) override {
    std::vector<std::uint32_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
    return p;
  }

  void queue_split(Group a, Group b) { splits_.emplace_back(std::move(a), std::move(b)); }
  std::size_t pending_splits() const { return splits_.size(); }

  std::pair<Group, Group> split(std::span<const std::uint32_t> group) override {
    if (splits_.empty()) return RandomSource::split(group);
    auto next = std::move(splits_.front());
    splits_.pop_front();
    std::multiset<std::uint32_t> want(group.begin(), group.end());
    std::multiset<std::uint32_t> got(next.first.begin(), next.first.end());
    got.insert(next.second.begin(), next.second.end());
    if (want != got) throw std::logic_error("scripted split does not partition the group");
    return next;
  }

 private:
  std::mt19937_64 engine_;
  std::deque<std::pair<Group, Group>> splits_;
};

// Index bit i is x_i.
using RefFn = std::function<double(std::uint32_t)>;

inline int bit(std::uint32_t x, int i) { return static_cast<int>((x >> i) & 1U); }

inline double bim_ref(int u, int k) {
  if (u == 0 || u == k) return k / 2.0;
  return k / 2.0 - std::abs(u - k / 2.0) - 1.0;
}

inline double trap_ref(int u, int k) { return u == k ? k : k - 1 - u; }

inline int unitation(std::uint32_t x, int from, int len) {
  int u = 0;
  for (int i = from; i < from + len; ++i) u += bit(x, i);
  return u;
}

inline double fe1_ref(std::uint32_t x) {
  double p = 1;
  for (int i = 0; i < 3; ++i) p *= (bit(x, i) ^ bit(x, i + 1)) + 1;
  return p;
}

inline double fe2_ref(std::uint32_t x) {
  return bim_ref(unitation(x, 0, 4), 4) + bim_ref(unitation(x, 2, 4), 4) + bim_ref(unitation(x, 4, 4), 4);
}

inline double two_block_ref(std::uint32_t x) { return bim_ref(unitation(x, 0, 4), 4) + bim_ref(unitation(x, 4, 4), 4); }

inline int sign3(double a, double b) { return (a > b) - (a < b); }

/// Six clauses written out one by one.
inline bool clause_holds(double fx, double fg, double fh, double fgh) {
  const bool c1 = fx < fg && fh >= fgh;
  const bool c2 = fx == fg && fh != fgh;
  const bool c3 = fx > fg && fh <= fgh;
  const bool c4 = fx < fh && fg >= fgh;
  const bool c5 = fx == fh && fg != fgh;
  const bool c6 = fx > fh && fg <= fgh;
  return c1 || c2 || c3 || c4 || c5 || c6;
}

inline bool forward_clause_holds(double fx, double fg, double fh, double fgh) {
  return (fx < fg && fh >= fgh) || (fx == fg && fh != fgh) || (fx > fg && fh <= fgh);
}

// Adjacency matrix of the non-monotonicity graph by enumeration.
inline std::vector<std::vector<bool>> brute_gnm(const RefFn& f, int n) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::uint32_t x = 0; x < (1U << n); ++x) {
    for (int g = 0; g < n; ++g) {
      for (int h = g + 1; h < n; ++h) {
        const std::uint32_t xg = x ^ (1U << g), xh = x ^ (1U << h), xgh = xg ^ (1U << h);
        if (clause_holds(f(x), f(xg), f(xh), f(xgh))) adj[g][h] = adj[h][g] = true;
      }
    }
  }
  return adj;
}

inline std::size_t edge_total(const std::vector<std::vector<bool>>& adj) {
  std::size_t e = 0;
  for (std::size_t g = 0; g < adj.size(); ++g) {
    for (std::size_t h = g + 1; h < adj.size(); ++h) e += adj[g][h] ? 1 : 0;
  }
  return e;
}

inline std::uint32_t to_index(const BitVector& bits) {
  std::uint32_t x = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) x |= static_cast<std::uint32_t>(bits.get(i)) << i;
  return x;
}

inline BitVector from_index(std::uint32_t x, std::size_t n) {
  BitVector b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, bit(x, static_cast<int>(i)) != 0);
  return b;
}

/// Random additive instance with subfunctions of at most three variables and
/// small integer tables, plus its reference function.
struct RandomAdditive {
  ProblemInstance instance;
  RefFn ref;
};

inline RandomAdditive random_3bounded(std::size_t n, std::size_t terms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Subfunction> subs;
  for (std::size_t t = 0; t < terms; ++t) {
    const std::size_t arity = 1 + rng() % 3;
    std::vector<std::uint32_t> vars;
    while (vars.size() < arity) {
      const auto v = static_cast<std::uint32_t>(rng() % n);
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    std::vector<double> table(std::size_t{1} << arity);
    for (auto& v : table) v = static_cast<double>(rng() % 5);
    subs.push_back({std::move(vars), std::move(table)});
  }
  auto copy = subs;
  RefFn ref = [copy](std::uint32_t x) {
    double s = 0;
    for (const auto& sf : copy) {
      std::size_t idx = 0;
      for (std::size_t j = 0; j < sf.vars.size(); ++j) idx |= static_cast<std::size_t>(bit(x, static_cast<int>(sf.vars[j]))) << j;
      s += sf.table[idx];
    }
    return s;
  };
  return {ProblemInstance(n, std::move(subs), InstanceMeta{"random3", seed, {}}, true), ref};
}

/// Two solutions with equal close contexts of g in `partial` whose b*_g differ.
struct Mismatch {
  std::size_t g = 0;
  BitVector s1, s2;
  Preference p1 = Preference::kBoth, p2 = Preference::kBoth;
};

inline Mismatch draw_mismatch(const ProblemInstance& inst, const Vig& partial, std::mt19937_64& rng) {
  EvalCounter scratch;
  Evaluator eval(inst, scratch);
  const std::size_t n = inst.n();
  for (;;) {
    Mismatch m;
    m.g = rng() % n;
    m.s1 = BitVector(n);
    for (std::size_t i = 0; i < n; ++i) m.s1.set(i, rng() & 1);
    m.s2 = m.s1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != m.g && !partial.has_edge(m.g, i) && (rng() & 1)) m.s2.flip(i);
    }
    Solution a(m.s1), b(m.s2);
    m.p1 = compute_b_star(eval, m.g, a).pref;
    m.p2 = compute_b_star(eval, m.g, b).pref;
    if (m.p1 != m.p2) return m;
  }
}

inline std::size_t ceil_log2(std::size_t v) {
  std::size_t r = 0;
  while ((std::size_t{1} << r) < v) ++r;
  return r;
}

/// Outcome of one discovery checked against the oracle and the clauses.
struct DiscoveryCheck {
  bool in_oracle = false;
  bool witness_ok = false;
  bool cost_ok = false;
};

inline DiscoveryCheck check_discovery(const RecursiveLLResult& r, const Vig& oracle, const RefFn& ref) {
  DiscoveryCheck c;
  c.in_oracle = oracle.has_edge(r.edge.g, r.edge.h);
  const std::uint32_t w = to_index(r.witness);
  const std::uint32_t gm = 1U << r.edge.g, hm = 1U << r.edge.h;
  c.witness_ok = forward_clause_holds(ref(w), ref(w ^ gm), ref(w ^ hm), ref(w ^ gm ^ hm));
  c.cost_ok = r.evals <= 2 * ceil_log2(r.group_size);
  return c;
}

}  // namespace elympus::testing
