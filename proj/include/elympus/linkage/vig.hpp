#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "elympus/bits/bit_vector.hpp"

namespace elympus {

// Which side of the non-monotonicity check first fired for an edge.
enum class ClauseClass : std::uint8_t { kUnknown, kForward /* C1-C3 */, kBackward /* C4-C6 */ };

struct Edge {
  std::uint32_t g = 0;
  std::uint32_t h = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Symmetric variable interaction graph with append-only edges. Each row is
/// kept as a bit mask so that close-context comparisons run on packed words.
class Vig {
 public:
  Vig() = default;
  explicit Vig(std::size_t n);

  std::size_t n() const { return rows_.size(); }
  std::size_t edge_count() const { return edges_; }

  bool has_edge(std::size_t g, std::size_t h) const { return rows_[g].get(h); }

  // Returns true when the edge is new. Self-loops are rejected.
  bool add_edge(std::size_t g, std::size_t h, ClauseClass clause = ClauseClass::kUnknown);

  // Close context of g as a bit mask.
  const BitVector& row(std::size_t g) const { return rows_[g]; }
  std::vector<std::uint32_t> neighbors(std::size_t g) const { return rows_[g].indices(); }
  std::size_t degree(std::size_t g) const { return rows_[g].count(); }

  ClauseClass clause(std::size_t g, std::size_t h) const;

  // Every edge (g < h) in lexicographic order.
  std::vector<Edge> edges() const;

  // true iff every edge of this graph is also in other.
  bool is_subgraph_of(const Vig& other) const;

  friend bool operator==(const Vig& a, const Vig& b);

  // Lower-triangular 0/1 text matrix:
  //   vig <n>
  //   <row 1: empty>
  //   <row 2: a21>
  //   <row 3: a31 a32> ...
  std::string to_triangular() const;
  static Vig from_triangular(const std::string& text);

 private:
  static std::uint64_t key(std::size_t g, std::size_t h) {
    if (g > h) std::swap(g, h);
    return (static_cast<std::uint64_t>(g) << 32) | static_cast<std::uint64_t>(h);
  }

  std::vector<BitVector> rows_;
  std::size_t edges_ = 0;
  std::unordered_map<std::uint64_t, ClauseClass> clause_log_;
};

}  // namespace elympus
