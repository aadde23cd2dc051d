#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sylab/bigint.hpp"
#include "sylab/subset.hpp"

namespace sylab {

class Multigraph;

// A matroid represented by columns over F2. Coordinate j of a column (j = 0
// is the most significant coordinate in the text format) lives in bit
// dim-1-j. Deletion and contraction keep the ground set: contracted elements
// become zero columns and deleted elements are flagged and excluded from
// every independent set, so indices are stable across M, M-x and M/x.
class BinaryMatroid {
 public:
  static constexpr std::size_t kMaxDim = 64;

  BinaryMatroid() = default;
  BinaryMatroid(std::size_t dim, std::vector<std::uint64_t> columns,
                std::vector<std::string> labels = {}, SubsetMask deleted = {});

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return cols_.size(); }
  std::uint64_t column(std::size_t i) const { return cols_.at(i); }
  const std::vector<std::uint64_t>& columns() const { return cols_; }
  const std::vector<std::string>& labels() const { return labels_; }
  SubsetMask ground() const { return SubsetMask::full(size()); }
  SubsetMask deleted() const { return deleted_; }

  std::size_t rank(SubsetMask subset) const;
  std::size_t rank() const { return rank(ground()); }
  bool is_independent(SubsetMask subset) const;

  SubsetMask loops() const;
  SubsetMask nonloops() const { return ground() - loops(); }
  bool is_loop(std::size_t x) const { return loops().contains(x); }

  // Par(x): non-loops y with rk{x,y} = 1. Throws LoopArgument on a loop.
  SubsetMask parallel_class(std::size_t x) const;
  // All parallel classes, ordered by their smallest element.
  std::vector<SubsetMask> parallel_classes() const;

  bool operator==(const BinaryMatroid&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::uint64_t> cols_;
  std::vector<std::string> labels_;
  SubsetMask deleted_;
};

// Projects every column onto the quotient by span(A). Elements of A become
// loops. Throws DependentContraction if A is not independent.
BinaryMatroid contract(const BinaryMatroid& m, SubsetMask subset);
BinaryMatroid contract(const BinaryMatroid& m, std::size_t x);

BinaryMatroid delete_elements(const BinaryMatroid& m, SubsetMask subset);
BinaryMatroid delete_element(const BinaryMatroid& m, std::size_t x);

// Block-diagonal stacking; elements of n are renumbered after those of m.
BinaryMatroid direct_sum(const BinaryMatroid& m, const BinaryMatroid& n);

// Graphic matroid over F2 from the vertex-edge incidence matrix. Loops map to
// zero columns. Edge i of the graph is element i.
BinaryMatroid from_graph(const Multigraph& g);

// Free matroid on n elements (standard basis of F2^n).
BinaryMatroid free_matroid(std::size_t n);

// Visits bases (resp. independent sets) in lexicographic order of their
// sorted element tuples. Throw SizeLimit above the brute-force limit.
void for_each_basis(const BinaryMatroid& m, const std::function<void(SubsetMask)>& visit);
void for_each_independent(const BinaryMatroid& m, const std::function<void(SubsetMask)>& visit);

std::vector<SubsetMask> enumerate_bases(const BinaryMatroid& m);
BigInt count_bases(const BinaryMatroid& m);

// Ascending-index greedy scan.
SubsetMask greedy_basis(const BinaryMatroid& m);

}  // namespace sylab
