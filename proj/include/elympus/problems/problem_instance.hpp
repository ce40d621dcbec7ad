#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "elympus/bits/bit_vector.hpp"
#include "elympus/linkage/vig.hpp"
#include "json.hpp"

namespace elympus {

// Lookup-table subfunction. Bit j of a table index is the value of vars[j].
struct Subfunction {
  std::vector<std::uint32_t> vars;
  std::vector<double> table;
};

struct InstanceMeta {
  std::string family;
  std::uint64_t seed = 0;
  nlohmann::json params = nlohmann::json::object();
};

/// Immutable pseudo-Boolean benchmark instance. Additive instances are a sum
/// of table subfunctions; composed instances wrap a closure and carry their
/// argument sets only as a structural hint. The fitness itself is reachable
/// only through an Evaluator so every evaluation is counted.
class ProblemInstance {
 public:
  using Closure = std::function<double(const BitVector&)>;

  ProblemInstance(std::size_t n, std::vector<Subfunction> subfunctions, InstanceMeta meta, bool integral);

  static ProblemInstance composed(std::size_t n, Closure fn, std::vector<std::vector<std::uint32_t>> argument_sets,
                                  InstanceMeta meta, bool integral);

  std::size_t n() const { return n_; }
  bool additive() const { return !closure_; }
  std::span<const Subfunction> subfunctions() const { return subfunctions_; }
  const std::vector<std::vector<std::uint32_t>>& argument_sets() const { return argument_sets_; }

  bool integral() const { return integral_; }
  // Absolute tolerance used for every fitness comparison on this instance.
  double tolerance() const;

  const std::optional<double>& known_optimum() const { return known_optimum_; }
  void set_known_optimum(std::optional<double> value) { known_optimum_ = value; }

  // Union of cliques over subfunction argument sets.
  const Vig& structural_vig() const { return structural_; }

  const InstanceMeta& meta() const { return meta_; }
  std::string label() const;

 private:
  friend class Evaluator;

  ProblemInstance() = default;
  double value(const BitVector& bits) const;
  void build_structure();

  std::size_t n_ = 0;
  std::vector<Subfunction> subfunctions_;
  std::vector<std::vector<std::uint32_t>> argument_sets_;
  Closure closure_;
  bool integral_ = true;
  std::optional<double> known_optimum_;
  Vig structural_;
  InstanceMeta meta_;
};

}  // namespace elympus
