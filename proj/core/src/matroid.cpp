#include "sylab/matroid.hpp"

#include <map>

#include "sylab/config.hpp"
#include "sylab/error.hpp"
#include "sylab/multigraph.hpp"
#include "xor_basis.hpp"

namespace sylab {

namespace {

std::uint64_t coord_bit(std::size_t dim, std::size_t j) { return std::uint64_t{1} << (dim - 1 - j); }

}  // namespace

BinaryMatroid::BinaryMatroid(std::size_t dim, std::vector<std::uint64_t> columns,
                             std::vector<std::string> labels, SubsetMask deleted)
    : dim_(dim), cols_(std::move(columns)), labels_(std::move(labels)), deleted_(deleted) {
  if (dim_ > kMaxDim) fail(ErrorKind::BadParameters, "dimension " + std::to_string(dim_) + " exceeds 64");
  if (cols_.size() > SubsetMask::kMaxElements) {
    fail(ErrorKind::BadParameters, "ground set of " + std::to_string(cols_.size()) + " elements exceeds 64");
  }
  std::uint64_t space = SubsetMask::full(dim_).bits();
  for (std::size_t i = 0; i < cols_.size(); ++i) {
    if ((cols_[i] & ~space) != 0) fail(ErrorKind::BadParameters, "column " + std::to_string(i) + " has bits beyond dimension");
  }
  if (labels_.empty()) {
    labels_.reserve(cols_.size());
    for (std::size_t i = 0; i < cols_.size(); ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != cols_.size()) {
    fail(ErrorKind::BadParameters, "label count does not match element count");
  }
  if (!deleted_.subset_of(ground())) fail(ErrorKind::BadParameters, "deleted set outside ground set");
}

std::size_t BinaryMatroid::rank(SubsetMask subset) const {
  detail::XorBasis basis;
  for (auto i : (subset - deleted_).indices()) {
    if (i < cols_.size()) basis.insert(cols_[i]);
  }
  return static_cast<std::size_t>(basis.size());
}

bool BinaryMatroid::is_independent(SubsetMask subset) const {
  if (!subset.subset_of(ground()) || !subset.disjoint(deleted_)) return false;
  detail::XorBasis basis;
  for (auto i : subset.indices()) {
    if (!basis.insert(cols_[i])) return false;
  }
  return true;
}

SubsetMask BinaryMatroid::loops() const {
  SubsetMask out = deleted_;
  for (std::size_t i = 0; i < cols_.size(); ++i) {
    if (cols_[i] == 0) out = out.with(i);
  }
  return out;
}

SubsetMask BinaryMatroid::parallel_class(std::size_t x) const {
  if (x >= size()) fail(ErrorKind::BadParameters, "element " + std::to_string(x) + " out of range");
  if (is_loop(x)) fail(ErrorKind::LoopArgument, "element " + std::to_string(x) + " is a loop");
  // Over F2 two nonzero vectors are dependent exactly when they are equal.
  SubsetMask out;
  for (auto y : nonloops().indices()) {
    if (cols_[y] == cols_[x]) out = out.with(y);
  }
  return out;
}

std::vector<SubsetMask> BinaryMatroid::parallel_classes() const {
  std::vector<SubsetMask> out;
  SubsetMask seen;
  for (auto x : nonloops().indices()) {
    if (seen.contains(x)) continue;
    SubsetMask cls = parallel_class(x);
    seen = seen | cls;
    out.push_back(cls);
  }
  return out;
}

BinaryMatroid contract(const BinaryMatroid& m, SubsetMask subset) {
  if (!m.is_independent(subset)) fail(ErrorKind::DependentContraction, "contracting dependent set " + subset.str());
  detail::XorBasis basis;
  for (auto i : subset.indices()) basis.insert(m.column(i));
  std::vector<std::uint64_t> cols = m.columns();
  for (auto& c : cols) c = basis.reduce(c);
  return BinaryMatroid(m.dim(), std::move(cols), m.labels(), m.deleted());
}

BinaryMatroid contract(const BinaryMatroid& m, std::size_t x) { return contract(m, SubsetMask::singleton(x)); }

BinaryMatroid delete_elements(const BinaryMatroid& m, SubsetMask subset) {
  if (!subset.subset_of(m.ground())) fail(ErrorKind::BadParameters, "deleting elements outside ground set");
  return BinaryMatroid(m.dim(), m.columns(), m.labels(), m.deleted() | subset);
}

BinaryMatroid delete_element(const BinaryMatroid& m, std::size_t x) {
  return delete_elements(m, SubsetMask::singleton(x));
}

BinaryMatroid direct_sum(const BinaryMatroid& m, const BinaryMatroid& n) {
  std::size_t dim = m.dim() + n.dim();
  if (dim > BinaryMatroid::kMaxDim || m.size() + n.size() > SubsetMask::kMaxElements) {
    fail(ErrorKind::BadParameters, "direct sum exceeds 64 coordinates or elements");
  }
  std::vector<std::uint64_t> cols;
  std::vector<std::string> labels = m.labels();
  for (auto c : m.columns()) cols.push_back(n.dim() == 64 ? 0 : c << n.dim());
  for (auto c : n.columns()) cols.push_back(c);
  labels.insert(labels.end(), n.labels().begin(), n.labels().end());
  SubsetMask deleted(m.deleted().bits() | (n.deleted().bits() << m.size()));
  return BinaryMatroid(dim, std::move(cols), std::move(labels), deleted);
}

BinaryMatroid from_graph(const Multigraph& g) {
  std::size_t v = g.vertex_count();
  if (v > BinaryMatroid::kMaxDim) fail(ErrorKind::BadParameters, "graph has more than 64 vertices");
  std::vector<std::uint64_t> cols;
  std::vector<std::string> labels;
  for (const auto& e : g.edges()) {
    cols.push_back(e.is_loop() ? 0 : coord_bit(v, e.u) ^ coord_bit(v, e.w));
    labels.push_back("e" + std::to_string(e.id));
  }
  return BinaryMatroid(v, std::move(cols), std::move(labels));
}

BinaryMatroid free_matroid(std::size_t n) {
  std::vector<std::uint64_t> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(coord_bit(n, i));
  return BinaryMatroid(n, std::move(cols));
}

namespace {

struct Enumerator {
  const BinaryMatroid& m;
  std::size_t n;
  std::size_t r;
  bool bases_only;
  const std::function<void(SubsetMask)>& visit;
  SubsetMask usable;

  void run(std::size_t from, SubsetMask chosen, const detail::XorBasis& basis) {
    std::size_t k = chosen.size();
    if (bases_only) {
      if (k == r) {
        visit(chosen);
        return;
      }
      // Only descend when the remaining elements can still complete a basis.
      detail::XorBasis probe = basis;
      for (std::size_t j = from; j < n && probe.size() < static_cast<int>(r); ++j) {
        if (usable.contains(j)) probe.insert(m.column(j));
      }
      if (probe.size() < static_cast<int>(r)) return;
    } else {
      visit(chosen);
    }
    for (std::size_t j = from; j < n; ++j) {
      if (!usable.contains(j)) continue;
      detail::XorBasis next = basis;
      if (!next.insert(m.column(j))) continue;
      run(j + 1, chosen.with(j), next);
    }
  }
};

}  // namespace

void for_each_basis(const BinaryMatroid& m, const std::function<void(SubsetMask)>& visit) {
  require_brute_force(m.size(), "basis enumeration");
  Enumerator e{m, m.size(), m.rank(), true, visit, m.nonloops()};
  e.run(0, SubsetMask(), detail::XorBasis{});
}

void for_each_independent(const BinaryMatroid& m, const std::function<void(SubsetMask)>& visit) {
  require_brute_force(m.size(), "independent-set enumeration");
  Enumerator e{m, m.size(), m.rank(), false, visit, m.nonloops()};
  e.run(0, SubsetMask(), detail::XorBasis{});
}

std::vector<SubsetMask> enumerate_bases(const BinaryMatroid& m) {
  std::vector<SubsetMask> out;
  for_each_basis(m, [&](SubsetMask b) { out.push_back(b); });
  return out;
}

BigInt count_bases(const BinaryMatroid& m) {
  unsigned long count = 0;
  for_each_basis(m, [&](SubsetMask) { ++count; });
  return BigInt(count);
}

SubsetMask greedy_basis(const BinaryMatroid& m) {
  detail::XorBasis basis;
  SubsetMask out;
  for (auto i : m.nonloops().indices()) {
    if (basis.insert(m.column(i))) out = out.with(i);
  }
  return out;
}

}  // namespace sylab
