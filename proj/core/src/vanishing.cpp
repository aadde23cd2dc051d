#include "sylab/vanishing.hpp"

#include <bit>

#include "sylab/config.hpp"
#include "sylab/error.hpp"
#include "xor_basis.hpp"

namespace sylab {

void validate_partition(const BinaryMatroid& m, const PartitionSpec& p) {
  if (p.S.size() != p.c.size()) fail(ErrorKind::BadParameters, "need one count per block");
  if (p.S.size() > kMaxBlocks) fail(ErrorKind::BadParameters, "more than " + std::to_string(kMaxBlocks) + " blocks");
  SubsetMask seen;
  for (std::size_t i = 0; i < p.S.size(); ++i) {
    if (!p.S[i].disjoint(seen)) fail(ErrorKind::NotAPartition, "block " + std::to_string(i + 1) + " overlaps an earlier block");
    if (p.c[i] < 0) fail(ErrorKind::BadParameters, "negative count for block " + std::to_string(i + 1));
    seen = seen | p.S[i];
  }
  if (seen != m.ground()) fail(ErrorKind::NotAPartition, "blocks do not cover the ground set");
}

bool feasible(const BinaryMatroid& m, const PartitionSpec& p) {
  validate_partition(m, p);
  std::size_t l = p.S.size();
  // Gray-code walk: consecutive subsets differ in one block, and blocks are
  // disjoint, so the union is maintained by a single XOR.
  SubsetMask uni;
  long need = 0;
  std::uint32_t prev = 0;
  for (std::uint32_t i = 1; i < (std::uint32_t{1} << l); ++i) {
    std::uint32_t gray = i ^ (i >> 1);
    std::uint32_t flip = gray ^ prev;
    auto block = static_cast<std::size_t>(std::countr_zero(flip));
    uni = uni ^ p.S[block];
    need += (gray & flip) != 0 ? p.c[block] : -p.c[block];
    prev = gray;
    if (static_cast<long>(m.rank(uni)) < need) return false;
  }
  return true;
}

std::pair<long, long> nonvanishing_range(const BinaryMatroid& m, SubsetMask R) {
  long r = static_cast<long>(m.rank());
  PartitionSpec p{{R & m.ground(), m.ground() - R}, {0, 0}};
  long lo = -1;
  long hi = -1;
  for (long a = 0; a <= r; ++a) {
    p.c = {a, r - a};
    if (feasible(m, p)) {
      if (lo < 0) lo = a;
      hi = a;
    }
  }
  return {lo, hi};
}

namespace {

struct Search {
  const BinaryMatroid& m;
  const PartitionSpec& p;
  std::vector<std::vector<std::size_t>> blocks;

  std::optional<SubsetMask> block(std::size_t i, SubsetMask chosen, const detail::XorBasis& basis) {
    if (i == blocks.size()) return chosen;
    return pick(i, 0, p.c[i], chosen, basis);
  }

  std::optional<SubsetMask> pick(std::size_t i, std::size_t from, long left, SubsetMask chosen,
                                 const detail::XorBasis& basis) {
    if (left == 0) return block(i + 1, chosen, basis);
    const auto& elems = blocks[i];
    for (std::size_t j = from; j + static_cast<std::size_t>(left) <= elems.size(); ++j) {
      std::size_t x = elems[j];
      if (m.is_loop(x)) continue;
      detail::XorBasis next = basis;
      if (!next.insert(m.column(x))) continue;
      if (auto found = pick(i, j + 1, left - 1, chosen.with(x), next)) return found;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<SubsetMask> witness(const BinaryMatroid& m, const PartitionSpec& p) {
  validate_partition(m, p);
  require_brute_force(m.size(), "witness search");
  Search search{m, p, {}};
  for (auto s : p.S) search.blocks.push_back(s.indices());
  return search.block(0, SubsetMask(), detail::XorBasis{});
}

}  // namespace sylab
