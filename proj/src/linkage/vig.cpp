#include "elympus/linkage/vig.hpp"

#include <sstream>
#include <stdexcept>

#include "elympus/common/errors.hpp"

namespace elympus {

Vig::Vig(std::size_t n) : rows_(n, BitVector(n)) {}

bool Vig::add_edge(std::size_t g, std::size_t h, ClauseClass clause) {
  if (g >= n() || h >= n()) throw std::out_of_range("vig edge index out of range");
  if (g == h) throw ContractError("vig edges cannot be self-loops");
  if (rows_[g].get(h)) return false;
  rows_[g].set(h, true);
  rows_[h].set(g, true);
  ++edges_;
  if (clause != ClauseClass::kUnknown) clause_log_.emplace(key(g, h), clause);
  return true;
}

ClauseClass Vig::clause(std::size_t g, std::size_t h) const {
  const auto it = clause_log_.find(key(g, h));
  return it == clause_log_.end() ? ClauseClass::kUnknown : it->second;
}

std::vector<Edge> Vig::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (std::size_t g = 0; g < n(); ++g) {
    rows_[g].for_each_set([&](std::uint32_t h) {
      if (h > g) out.push_back({static_cast<std::uint32_t>(g), h});
    });
  }
  return out;
}

bool Vig::is_subgraph_of(const Vig& other) const {
  if (other.n() != n()) return false;
  for (std::size_t g = 0; g < n(); ++g) {
    if (!and_not(rows_[g], other.rows_[g]).none()) return false;
  }
  return true;
}

bool operator==(const Vig& a, const Vig& b) { return a.rows_ == b.rows_; }

std::string Vig::to_triangular() const {
  std::ostringstream out;
  out << "vig " << n() << '\n';
  for (std::size_t g = 0; g < n(); ++g) {
    for (std::size_t h = 0; h < g; ++h) {
      if (h > 0) out << ' ';
      out << (has_edge(g, h) ? '1' : '0');
    }
    out << '\n';
  }
  return out.str();
}

Vig Vig::from_triangular(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  std::size_t n = 0;
  if (!(in >> tag >> n) || tag != "vig") throw SpecError("triangular vig: missing 'vig <n>' header");
  std::string line;
  std::getline(in, line);
  Vig out(n);
  for (std::size_t g = 0; g < n; ++g) {
    if (!std::getline(in, line)) throw SpecError("triangular vig: truncated at row " + std::to_string(g + 1));
    std::istringstream row(line);
    for (std::size_t h = 0; h < g; ++h) {
      int v = -1;
      if (!(row >> v) || (v != 0 && v != 1)) {
        throw SpecError("triangular vig: row " + std::to_string(g + 1) + " needs " + std::to_string(g) +
                        " entries of 0/1");
      }
      if (v == 1) out.add_edge(g, h);
    }
  }
  return out;
}

}  // namespace elympus
