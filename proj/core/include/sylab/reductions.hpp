#pragma once

#include <vector>

#include "sylab/bigint.hpp"
#include "sylab/counting.hpp"
#include "sylab/matroid.hpp"

namespace sylab {

// A k-constrained instance for the log-concavity check at one level.
struct SYInstance {
  BinaryMatroid matroid;
  ConstraintSpec spec;
  long a = 1;
};

// Appends a zero coordinate to every column and two new elements u = v equal
// to the new unit vector (labels "u" and "v", indices n and n+1). Returns
// R = {x, u}, a = 1, S = X - {x, y}, c = r - 1. Throws LoopArgument if x or y
// is a loop and ParallelPair if they are parallel (or equal).
SYInstance cdc_instance(const BinaryMatroid& m, std::size_t x, std::size_t y);

struct CdcIdentities {
  BigInt b_plus;   // B_{S,c}(M',R,2) = B(M/x - y)
  BigInt b_zero;   // B_{S,c}(M',R,1) = sum of the other two
  BigInt b_minus;  // B_{S,c}(M',R,0) = B(M/y - x)
  BigInt direct_plus;   // B(M/x - y) counted on M
  BigInt direct_minus;  // B(M/y - x) counted on M
  bool counts_match = false;
  // P(1)^2 - P(2)P(0) = (B+ - B-)^2 / (r^2 (r+1)^2), r the rank of M
  bool gap_formula = false;
  Verdict verdict = Verdict::Strict;
  // Membership in the equality language: P(1)^2 = P(2)P(0) as an equation,
  // so an all-zero instance is a member even though its verdict is Vanishing.
  bool in_equality_language = false;
  bool coincidence = false;  // B(M/x - y) = B(M/y - x)
};

// Enumerates both sides; the instance is rebuilt from (m, x, y).
CdcIdentities check_cdc(const BinaryMatroid& m, std::size_t x, std::size_t y);

// Bases of M/x that avoid y.
BigInt count_contract_delete(const BinaryMatroid& m, std::size_t x, std::size_t y);

struct CdcrInstance {
  BinaryMatroid matroid;  // M + N
  std::size_t x = 0;
  std::size_t y = 0;      // index of y inside the sum
};

// Throws LoopArgument if x or y is a loop of its matroid.
CdcrInstance cdcr_to_cdc(const BinaryMatroid& m, std::size_t x, const BinaryMatroid& n, std::size_t y);

// Appends empty blocks with c = 0 until the arity is k. Throws BadParameters
// if the instance already has more blocks.
SYInstance pad_k(const SYInstance& inst, std::size_t k);

}  // namespace sylab
