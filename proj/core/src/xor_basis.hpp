#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace sylab::detail {

// Echelon basis over F2; piv[h] has highest bit h.
struct XorBasis {
  std::array<std::uint64_t, 64> piv{};
  std::uint64_t lead = 0;  // bit h set iff piv[h] is in use

  // Canonical representative of v modulo the span: no pivot bit survives.
  // The map is linear, so it realizes the quotient projection.
  std::uint64_t reduce(std::uint64_t v) const {
    std::uint64_t hit = v & lead;
    while (hit != 0) {
      int h = 63 - std::countl_zero(hit);
      v ^= piv[h];
      hit = v & lead & ((std::uint64_t{1} << h) - 1);
    }
    return v;
  }

  // Inserts v; returns false if it was already in the span.
  bool insert(std::uint64_t v) {
    while (v != 0) {
      int h = 63 - std::countl_zero(v);
      std::uint64_t bit = std::uint64_t{1} << h;
      if ((lead & bit) == 0) {
        piv[h] = v;
        lead |= bit;
        return true;
      }
      v ^= piv[h];
    }
    return false;
  }

  bool spans(std::uint64_t v) const { return reduce(v) == 0; }
  int size() const { return std::popcount(lead); }
};

}  // namespace sylab::detail
