#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "elympus/linkage/vig.hpp"
#include "elympus/surrogate/preference.hpp"

namespace elympus {

// Mechanism that found a dependency.
enum class DiscoverySource : std::uint8_t {
  kVerification,  // verified partial comparison disagreed with a stored pair
  kConflict,      // two stored pairs with equal contexts disagreed
  kCircuit,       // revisit in the hill climber's move log
  kPxrll,         // inconsistent partition crossover mask
  kInitPx,        // link-discovery probe
  kExternal,      // added by the caller (tests, prepopulated graphs)
  kCount,
};

inline constexpr std::size_t kDiscoverySourceCount = static_cast<std::size_t>(DiscoverySource::kCount);

std::string_view source_name(DiscoverySource s);

struct Discovery {
  Edge edge;
  DiscoverySource source = DiscoverySource::kExternal;
  std::uint64_t ffe = 0;
  std::uint64_t surrogate = 0;
};

/// The eLyMPuS model: an empirical graph plus, per variable, an append-only
/// list of (snapshot, b*) pairs. Lookups go through a per-variable hash index
/// over context projections that is rebuilt lazily whenever the variable's
/// close context grows; it returns the same pair a linear scan would.
class SurrogateStore {
 public:
  explicit SurrogateStore(std::size_t n);

  std::size_t n() const { return pairs_.size(); }
  const Vig& vig() const { return vig_; }

  bool add_edge(std::size_t g, std::size_t h, DiscoverySource source, std::uint64_t ffe = 0,
                std::uint64_t surrogate = 0, ClauseClass clause = ClauseClass::kForward);

  std::span<const StoredPair> pairs(std::size_t g) const { return pairs_[g]; }
  std::size_t pair_count() const { return total_pairs_; }

  void append(std::size_t g, BitVector snapshot, Preference pref);
  // Overwrites a stored preference (repairs and fault-injection tests).
  void set_preference(std::size_t g, std::size_t index, Preference pref);

  struct Lookup {
    std::size_t first = 0;
    // Earliest later pair with the same context but a different preference.
    std::optional<std::size_t> conflict;
  };
  std::optional<Lookup> lookup(std::size_t g, const BitVector& x);

  // Reference first-match scan.
  std::optional<std::size_t> find_linear(std::size_t g, const BitVector& x) const;

  std::span<const Discovery> discoveries() const { return discoveries_; }
  std::array<std::size_t, kDiscoverySourceCount> discoveries_by_source() const;

 private:
  struct Bucket {
    std::size_t first = 0;
    std::optional<std::size_t> conflict;
  };
  struct Index {
    bool stale = false;
    std::unordered_map<std::uint64_t, std::vector<Bucket>> buckets;
  };

  void index_pair(std::size_t g, std::size_t i);
  void rebuild(std::size_t g);

  Vig vig_;
  std::vector<std::vector<StoredPair>> pairs_;
  std::vector<Index> index_;
  std::size_t total_pairs_ = 0;
  std::vector<Discovery> discoveries_;
};

// Table-style dump: variable, close context, snapshot, projection, preference.
std::string dump_store(const SurrogateStore& store, std::size_t group = 2);

}  // namespace elympus
