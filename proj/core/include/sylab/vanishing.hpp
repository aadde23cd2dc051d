#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sylab/matroid.hpp"

namespace sylab {

struct PartitionSpec {
  std::vector<SubsetMask> S;
  std::vector<long> c;
};

// Throws NotAPartition unless the blocks are disjoint and cover the ground
// set; BadParameters for negative c or a size mismatch.
void validate_partition(const BinaryMatroid& m, const PartitionSpec& p);

inline constexpr std::size_t kMaxBlocks = 20;

// rk(union of S_i, i in L) >= sum of c_i over L for every nonempty L.
bool feasible(const BinaryMatroid& m, const PartitionSpec& p);

// [lo, hi] with lo = r - rk(X-R), hi = rk(R); P(M,R,a) > 0 exactly on it.
std::pair<long, long> nonvanishing_range(const BinaryMatroid& m, SubsetMask R);

// An independent set meeting each block in exactly c_i elements, found by
// backtracking block by block, or nothing.
std::optional<SubsetMask> witness(const BinaryMatroid& m, const PartitionSpec& p);

}  // namespace sylab
