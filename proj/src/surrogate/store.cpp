#include "elympus/surrogate/store.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "elympus/common/errors.hpp"
#include "elympus/linkage/hyperplane.hpp"

namespace elympus {

std::string_view source_name(DiscoverySource s) {
  switch (s) {
    case DiscoverySource::kVerification: return "verification";
    case DiscoverySource::kConflict: return "conflict";
    case DiscoverySource::kCircuit: return "circuit";
    case DiscoverySource::kPxrll: return "pxrll";
    case DiscoverySource::kInitPx: return "initpx";
    case DiscoverySource::kExternal: return "external";
    case DiscoverySource::kCount: break;
  }
  return "unknown";
}

SurrogateStore::SurrogateStore(std::size_t n) : vig_(n), pairs_(n), index_(n) {
  if (n == 0) throw SpecError("surrogate needs at least one variable");
}

bool SurrogateStore::add_edge(std::size_t g, std::size_t h, DiscoverySource source, std::uint64_t ffe,
                              std::uint64_t surrogate, ClauseClass clause) {
  if (!vig_.add_edge(g, h, clause)) return false;
  index_[g].stale = true;
  index_[h].stale = true;
  discoveries_.push_back({Edge{static_cast<std::uint32_t>(std::min(g, h)), static_cast<std::uint32_t>(std::max(g, h))},
                          source, ffe, surrogate});
  return true;
}

void SurrogateStore::append(std::size_t g, BitVector snapshot, Preference pref) {
  if (g >= n()) throw std::out_of_range("variable index out of range");
  if (snapshot.size() != n()) throw InstanceShapeError("snapshot length does not match the store");
  pairs_[g].push_back({std::move(snapshot), pref});
  ++total_pairs_;
  if (!index_[g].stale) index_pair(g, pairs_[g].size() - 1);
}

void SurrogateStore::set_preference(std::size_t g, std::size_t index, Preference pref) {
  pairs_.at(g).at(index).pref = pref;
  index_[g].stale = true;
}

void SurrogateStore::index_pair(std::size_t g, std::size_t i) {
  const BitVector& mask = vig_.row(g);
  const StoredPair& pair = pairs_[g][i];
  auto& list = index_[g].buckets[masked_hash(pair.snapshot, mask)];
  for (auto& bucket : list) {
    const StoredPair& head = pairs_[g][bucket.first];
    if (masked_equal(head.snapshot, pair.snapshot, mask)) {
      if (!bucket.conflict && head.pref != pair.pref) bucket.conflict = i;
      return;
    }
  }
  list.push_back({i, std::nullopt});
}

void SurrogateStore::rebuild(std::size_t g) {
  Index& idx = index_[g];
  idx.buckets.clear();
  idx.stale = false;
  for (std::size_t i = 0; i < pairs_[g].size(); ++i) index_pair(g, i);
}

std::optional<SurrogateStore::Lookup> SurrogateStore::lookup(std::size_t g, const BitVector& x) {
  if (g >= n()) throw std::out_of_range("variable index out of range");
  if (index_[g].stale) rebuild(g);
  const BitVector& mask = vig_.row(g);
  const auto it = index_[g].buckets.find(masked_hash(x, mask));
  if (it == index_[g].buckets.end()) return std::nullopt;
  for (const auto& bucket : it->second) {
    if (masked_equal(pairs_[g][bucket.first].snapshot, x, mask)) return Lookup{bucket.first, bucket.conflict};
  }
  return std::nullopt;
}

std::optional<std::size_t> SurrogateStore::find_linear(std::size_t g, const BitVector& x) const {
  const BitVector& mask = vig_.row(g);
  for (std::size_t i = 0; i < pairs_[g].size(); ++i) {
    if (masked_equal(pairs_[g][i].snapshot, x, mask)) return i;
  }
  return std::nullopt;
}

std::array<std::size_t, kDiscoverySourceCount> SurrogateStore::discoveries_by_source() const {
  std::array<std::size_t, kDiscoverySourceCount> out{};
  for (const auto& d : discoveries_) ++out[static_cast<std::size_t>(d.source)];
  return out;
}

std::string dump_store(const SurrogateStore& store, std::size_t group) {
  std::ostringstream out;
  out << "var\tcontext\tsnapshot\tprojection\tpref\n";
  for (std::size_t g = 0; g < store.n(); ++g) {
    std::string context = "{";
    bool first = true;
    for (auto h : store.vig().neighbors(g)) {
      context += (first ? "x" : ",x") + std::to_string(h + 1);
      first = false;
    }
    context += "}";
    for (const auto& pair : store.pairs(g)) {
      out << 'x' << g + 1 << '\t' << context << '\t' << pair.snapshot.to_string(group) << '\t'
          << context_hyperplane(store.vig(), g, pair.snapshot).to_string(group) << '\t' << to_string(pair.pref)
          << '\n';
    }
  }
  return out.str();
}

}  // namespace elympus
