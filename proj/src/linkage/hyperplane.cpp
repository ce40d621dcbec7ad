#include "elympus/linkage/hyperplane.hpp"

#include "elympus/common/errors.hpp"

namespace elympus {

std::string Hyperplane::to_string(std::size_t group) const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (group != 0 && i != 0 && i % group == 0) out.push_back(' ');
    out.push_back(defined.get(i) ? (values.get(i) ? '1' : '0') : '*');
  }
  return out;
}

Hyperplane Hyperplane::parse(std::string_view text) {
  std::size_t n = 0;
  for (char c : text) {
    if (c == '0' || c == '1' || c == '*') ++n;
  }
  Hyperplane h{BitVector(n), BitVector(n)};
  std::size_t i = 0;
  for (char c : text) {
    if (c == ' ' || c == '_' || c == '|') continue;
    if (c != '0' && c != '1' && c != '*') throw SpecError(std::string("bad hyperplane character '") + c + "'");
    if (c != '*') {
      h.defined.set(i, true);
      h.values.set(i, c == '1');
    }
    ++i;
  }
  return h;
}

bool operator==(const Hyperplane& a, const Hyperplane& b) {
  return a.defined == b.defined && masked_equal(a.values, b.values, a.defined);
}

std::vector<std::uint32_t> close_context(const Vig& vig, std::size_t g) {
  if (g >= vig.n()) throw std::out_of_range("variable index out of range");
  return vig.neighbors(g);
}

Hyperplane context_hyperplane(const Vig& vig, std::size_t g, const BitVector& x) {
  if (g >= vig.n()) throw std::out_of_range("variable index out of range");
  const BitVector& mask = vig.row(g);
  return Hyperplane{mask, blend(BitVector(x.size()), x, mask)};
}

bool contexts_equal(const Vig& vig, std::size_t g, const BitVector& xa, const BitVector& xb) {
  if (xa.size() != xb.size()) throw InstanceShapeError("solutions differ in length");
  return masked_equal(xa, xb, vig.row(g));
}

}  // namespace elympus
