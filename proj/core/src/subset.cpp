#include "sylab/subset.hpp"

namespace sylab {

SubsetMask SubsetMask::from_indices(const std::vector<std::size_t>& elems) {
  SubsetMask m;
  for (auto e : elems) m = m.with(e);
  return m;
}

std::vector<std::size_t> SubsetMask::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

std::string SubsetMask::str() const {
  std::string out = "{";
  bool first_elem = true;
  for (auto e : indices()) {
    if (!first_elem) out += ",";
    out += std::to_string(e);
    first_elem = false;
  }
  return out + "}";
}

bool lex_less(SubsetMask a, SubsetMask b) {
  // The lowest differing element decides: whichever set contains it is smaller.
  std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  std::uint64_t low = diff & (~diff + 1);
  return (a.bits() & low) != 0;
}

}  // namespace sylab
