#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sylab/bigint.hpp"

namespace sylab {

struct CFExpansion {
  std::vector<BigInt> quotients;  // [a0; a1, ..., as]
  Rational value;
  BigInt qsum;
};

// Euclidean expansion of p/q; the last quotient is at least 2 unless there
// is only one. p may be 0 ([0]). Throws ZeroDenominator when q = 0 and
// BadParameters for negative input.
CFExpansion cf_expand(const BigInt& p, const BigInt& q);

// Folds [a0; a1, ..., as] back into a rational. Throws BadQuotient if a
// quotient after the first is below 1 or the list is empty.
Rational cf_value(const std::vector<BigInt>& quotients);

BigInt quotient_sum(const BigInt& p, const BigInt& q);

// Fast path for machine words. Also reports gcd(p, q) through the last
// nonzero remainder.
std::uint64_t quotient_sum_u64(std::uint64_t p, std::uint64_t q, std::uint64_t* gcd_out = nullptr);

struct NtdResult {
  std::uint64_t m = 0;
  std::uint64_t score = 0;  // max(s(m/A), s((B-m)/A))
  std::uint64_t candidates = 0;
  bool exhaustive = false;
  // score / (ln A (ln ln A)^2); empty when A is too small for the baseline
  // to be positive.
  std::optional<double> quality;
};

inline constexpr std::uint64_t kDefaultNtdBudget = 4096;
inline constexpr std::uint64_t kNtdSeed = 0x6e7464ULL;

// m in [1, B-1] minimizing max(s(m/A), s((B-m)/A)), smallest m on ties.
// Exhaustive when B-1 <= budget, otherwise over budget pseudorandom
// candidates from a fixed seed. Needs 1 <= B <= A <= 2B (BadParameters);
// B = 1 has no candidate (NoCandidate).
NtdResult ntd_search(const BigInt& A, const BigInt& B, std::uint64_t budget = kDefaultNtdBudget);

// ln x (ln ln x)^2, or empty when that is not positive.
std::optional<double> log_loglog_squared(double x);

}  // namespace sylab
