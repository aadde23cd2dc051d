#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace sylab {

// Subsets of a ground set of at most 64 elements, one bit per element.
class SubsetMask {
 public:
  static constexpr std::size_t kMaxElements = 64;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

  static SubsetMask of(std::initializer_list<std::size_t> elems) {
    SubsetMask m;
    for (auto e : elems) m = m.with(e);
    return m;
  }
  static SubsetMask from_indices(const std::vector<std::size_t>& elems);
  static constexpr SubsetMask full(std::size_t n) {
    return SubsetMask(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr SubsetMask singleton(std::size_t e) { return SubsetMask(std::uint64_t{1} << e); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t e) const { return e < 64 && ((bits_ >> e) & 1U) != 0; }

  constexpr SubsetMask with(std::size_t e) const { return SubsetMask(bits_ | (std::uint64_t{1} << e)); }
  constexpr SubsetMask without(std::size_t e) const { return SubsetMask(bits_ & ~(std::uint64_t{1} << e)); }

  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
  constexpr SubsetMask operator-(SubsetMask o) const { return SubsetMask(bits_ & ~o.bits_); }
  constexpr SubsetMask operator^(SubsetMask o) const { return SubsetMask(bits_ ^ o.bits_); }

  constexpr bool subset_of(SubsetMask o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool disjoint(SubsetMask o) const { return (bits_ & o.bits_) == 0; }

  constexpr auto operator<=>(const SubsetMask&) const = default;

  std::vector<std::size_t> indices() const;

  // Lowest element; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  // "{0,2,5}"
  std::string str() const;

 private:
  std::uint64_t bits_ = 0;
};

// Lexicographic order of sorted index tuples of equal-size sets.
bool lex_less(SubsetMask a, SubsetMask b);

}  // namespace sylab
