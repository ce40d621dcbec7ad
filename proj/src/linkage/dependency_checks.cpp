#include "elympus/linkage/dependency_checks.hpp"

#include <cmath>
#include <stdexcept>

#include "elympus/common/errors.hpp"

namespace elympus {

namespace {

struct Quad {
  double fx, fg, fh, fgh;
};

Quad evaluate_quad(Evaluator& eval, Solution& x, std::size_t g, std::size_t h, Purpose purpose) {
  if (g >= x.size() || h >= x.size()) throw std::out_of_range("variable index out of range");
  if (g == h) throw ContractError("dependency check needs two distinct variables");
  Quad q{};
  q.fx = eval.fitness(x, purpose);
  Solution t = x;
  t.flip(g);
  q.fg = eval.evaluate(t, purpose);
  t.flip(h);
  q.fgh = eval.evaluate(t, purpose);
  t.flip(g);
  q.fh = eval.evaluate(t, purpose);
  return q;
}

}  // namespace

NonMonotonicity classify_clauses(double fx, double fg, double fh, double fgh, double eps) {
  const Relation a = compare_fitness(fx, fg, eps);
  const Relation b = compare_fitness(fh, fgh, eps);
  const Relation c = compare_fitness(fx, fh, eps);
  const Relation d = compare_fitness(fg, fgh, eps);
  NonMonotonicity r;
  auto mark = [&](int clause, bool holds) {
    if (holds) r.clauses |= static_cast<std::uint8_t>(1U << (clause - 1));
  };
  mark(1, a == Relation::kLess && b != Relation::kLess);
  mark(2, a == Relation::kEqual && b != Relation::kEqual);
  mark(3, a == Relation::kGreater && b != Relation::kGreater);
  mark(4, c == Relation::kLess && d != Relation::kLess);
  mark(5, c == Relation::kEqual && d != Relation::kEqual);
  mark(6, c == Relation::kGreater && d != Relation::kGreater);
  return r;
}

NonMonotonicity non_monotonicity_check(Evaluator& eval, Solution& x, std::size_t g, std::size_t h, Purpose purpose) {
  const Quad q = evaluate_quad(eval, x, g, h, purpose);
  return classify_clauses(q.fx, q.fg, q.fh, q.fgh, eval.instance().tolerance());
}

bool non_linearity_check(Evaluator& eval, Solution& x, std::size_t g, std::size_t h, Purpose purpose) {
  const Quad q = evaluate_quad(eval, x, g, h, purpose);
  return std::fabs(q.fx + q.fgh - q.fg - q.fh) > eval.instance().tolerance();
}

}  // namespace elympus
