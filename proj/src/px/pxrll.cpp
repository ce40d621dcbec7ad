#include "elympus/px/pxrll.hpp"

#include "elympus/common/errors.hpp"

namespace elympus {

namespace {

struct Point {
  BitVector bits;
  double f = 0.0;    // f(y)
  double alt = 0.0;  // f of the probed variant of y
};

}  // namespace

PxMaskOutcome resolve_inconsistent_mask(SurrogateStore& store, Evaluator& eval, RandomSource& rng,
                                        Solution& receiver, Solution& donor, const PxMask& mask,
                                        Solution& offspring_receiver, Solution& offspring_donor,
                                        const PxCharges& charges) {
  PxMaskOutcome out;
  out.size = mask.indices.size();
  const std::uint64_t start = eval.counter().true_evals();
  const BitVector& m = mask.bits;
  const BitVector& donor_bits = donor.bits();

  // D(y) = relation of f(y) to f(y <-mask- donor).
  auto D = [&](const Point& p) { return eval.compare(p.f, p.alt); };
  auto probe_mask = [&](BitVector bits) {
    Solution y(bits);
    Solution ym(blend(bits, donor_bits, m));
    const double fy = eval.evaluate(y, charges.discovery);
    const double fym = eval.evaluate(ym, charges.discovery);
    return Point{std::move(bits), fy, fym};
  };

  Point lo{receiver.bits(), eval.fitness(receiver, charges.regular), eval.fitness(offspring_receiver, charges.regular)};
  Point hi{offspring_donor.bits(), eval.fitness(offspring_donor, charges.consistency),
           eval.fitness(donor, charges.consistency)};
  out.verdict = make_verdict(D(lo), reverse(D(hi)));
  if (out.verdict.consistent) throw ContractError("mask verdict is consistent");

  BitVector outside_mask = and_not(diff(lo.bits, hi.bits), m);
  Group group = outside_mask.indices();
  if (group.empty()) throw ContractError("inconsistent mask without outside differences");
  const BitVector hi_source = hi.bits;
  while (group.size() > 1) {
    auto [a, b] = rng.split(group);
    BitVector mid = lo.bits;
    for (auto i : a) mid.set(i, hi_source.get(i));
    Point p = probe_mask(std::move(mid));
    if (D(p) == D(hi)) {
      hi = std::move(p);
      group = std::move(a);
    } else {
      lo = std::move(p);
      group = std::move(b);
    }
  }
  const std::uint32_t c = group.front();
  out.outside = c;

  std::optional<std::uint32_t> partner;
  if (mask.indices.size() == 1) {
    partner = mask.indices.front();
  } else {
    // E(y) = relation of f(y) to f(y^c) along the chain lo -> lo <-mask- donor.
    Point p0{lo.bits, lo.f, hi.f};
    Point p1{blend(lo.bits, donor_bits, m), lo.alt, hi.alt};
    auto E = [&](const Point& p) { return eval.compare(p.f, p.alt); };
    auto probe_flip = [&](BitVector bits) {
      Solution y(bits);
      Solution yc(bits);
      yc.flip(c);
      const double fy = eval.evaluate(y, charges.discovery);
      const double fyc = eval.evaluate(yc, charges.discovery);
      return Point{std::move(bits), fy, fyc};
    };
    Group inside = mask.indices;
    while (inside.size() > 1) {
      auto [a, b] = rng.split(inside);
      BitVector mid = p0.bits;
      for (auto i : a) mid.set(i, donor_bits.get(i));
      Point q = probe_flip(std::move(mid));
      if (E(p0) != E(p1)) {
        if (E(q) == E(p1)) {
          p1 = std::move(q);
          inside = std::move(a);
        } else {
          p0 = std::move(q);
          inside = std::move(b);
        }
      } else if (E(q) != E(p0)) {
        p1 = std::move(q);
        inside = std::move(a);
      } else {
        p0 = std::move(q);
        inside = std::move(b);
      }
    }
    if (E(p0) != E(p1)) partner = inside.front();
  }
  if (partner) {
    const Edge e{c, *partner};
    if (store.add_edge(c, *partner, charges.source, eval.counter().true_evals(), eval.counter().surrogate_answers())) {
      out.edge = e;
    }
  }
  out.discovery_evals = eval.counter().true_evals() - start;
  return out;
}

PxrllResult pxrll(SurrogateStore& store, Evaluator& eval, RandomSource& rng, Solution& receiver, Solution& donor,
                  const PxCharges& charges) {
  PxrllResult result;
  result.offspring = receiver;
  if (receiver.bits() == donor.bits()) return result;
  const double f_start = eval.fitness(receiver, charges.regular);
  eval.fitness(donor, charges.consistency);
  const auto masks = px_masks(receiver.bits(), donor.bits(), store.vig());
  Solution& current = result.offspring;
  for (const auto& mask : masks) {
    Solution oa, ob;
    if (masks.size() == 1) {
      // The whole difference set: the offspring are the swapped parents.
      oa = donor;
      ob = current;
    } else {
      oa = exchange(current, donor, mask);
      ob = exchange(donor, current, mask);
    }
    const double fc = eval.fitness(current, charges.regular);
    const double foa = eval.fitness(oa, charges.regular);
    const double fd = eval.fitness(donor, charges.consistency);
    const double fob = eval.fitness(ob, charges.consistency);
    const ConsistencyVerdict verdict = make_verdict(eval.compare(fc, foa), eval.compare(fd, fob));
    if (!verdict.consistent) {
      PxMaskOutcome outcome = resolve_inconsistent_mask(store, eval, rng, current, donor, mask, oa, ob, charges);
      if (outcome.edge) result.discoveries.push_back(*outcome.edge);
      result.masks.push_back(std::move(outcome));
      continue;
    }
    PxMaskOutcome outcome;
    outcome.size = mask.indices.size();
    outcome.verdict = verdict;
    if (eval.compare(foa, fc) != Relation::kLess) {
      current = std::move(oa);
      outcome.applied = true;
    }
    result.masks.push_back(std::move(outcome));
  }
  result.improved = eval.compare(eval.fitness(current, charges.regular), f_start) == Relation::kGreater;
  return result;
}

std::vector<Edge> px_link_discovery(SurrogateStore& store, Evaluator& eval, RandomSource& rng) {
  const std::size_t n = store.n();
  Solution xa(n), xb(n);
  for (std::size_t i = 0; i < n; ++i) {
    xa.set(i, rng.coin());
    xb.set(i, rng.coin());
  }
  eval.evaluate(xa, Purpose::kInitPx);
  eval.evaluate(xb, Purpose::kInitPx);
  if (xa.bits() == xb.bits()) return {};
  const auto masks = px_masks(xa.bits(), xb.bits(), store.vig());
  const PxMask& mask = masks[rng.below(masks.size())];
  PxCharges charges{Purpose::kInitPx, Purpose::kInitPx, Purpose::kInitPxDiscovery, DiscoverySource::kInitPx};
  ConsistencyProbe probe = consistency_check(eval, xa, xb, mask, Purpose::kInitPx, Purpose::kInitPx);
  if (probe.verdict.consistent) return {};
  const auto outcome =
      resolve_inconsistent_mask(store, eval, rng, xa, xb, mask, probe.offspring_a, probe.offspring_b, charges);
  if (outcome.edge) return {*outcome.edge};
  return {};
}

}  // namespace elympus
