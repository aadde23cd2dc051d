#pragma once

#include <string_view>
#include <vector>

#include "sylab/bigint.hpp"
#include "sylab/matroid.hpp"
#include "sylab/subset.hpp"

namespace sylab {

// Slicing data: bases (or independent sets) are filtered by |A∩S_i| = c_i
// and graded by |A∩R|.
struct ConstraintSpec {
  SubsetMask R;
  std::vector<SubsetMask> S;
  std::vector<long> c;

  std::size_t k() const { return S.size(); }
  long c_total() const;
};

// Throws OverlappingConstraints unless R, S_1..S_k are pairwise disjoint, and
// BadParameters for masks outside the ground set, |S| != |c| or c_i outside [0, r].
// In independent-set mode R is ignored.
enum class CountMode { Bases, IndependentSets };
void validate_spec(const BinaryMatroid& m, const ConstraintSpec& spec, CountMode mode = CountMode::Bases);

struct CountProfile {
  CountMode mode = CountMode::Bases;
  std::size_t r = 0;
  long m = 0;                      // n - sum c_i, only meaningful for independent sets
  std::vector<BigInt> counts;      // index a = 0..r
  std::vector<Rational> normalized;

  BigInt count(long a) const;
  Rational value(long a) const;
};

// Bases mode: B_{S,c}(M,R,a) and P = B / multinomial(r; a, c_1..c_k, r-a-sum c).
// Independent-set mode: R is replaced by X minus the union of the S_i and
// the value is I(a) / binom(m, a).
CountProfile count_profile(const BinaryMatroid& m, const ConstraintSpec& spec, CountMode mode = CountMode::Bases);

// Same profile from precomputed bases (or independent sets) of a matroid with
// rank r on n elements, for callers slicing one matroid many ways. The spec
// is not validated.
CountProfile profile_from_sets(const std::vector<SubsetMask>& sets, CountMode mode, std::size_t r, std::size_t n,
                               const ConstraintSpec& spec);

// Denominator of the normalized value at level a; 0 when a is out of range.
BigInt normalizer(const CountProfile& profile, const std::vector<long>& c, long a);

enum class Verdict { Strict, Equal, Vanishing };
std::string_view to_string(Verdict v);

// Compares P(a)^2 with P(a+1)P(a-1). Vanishing when P(a) = 0. Throws BadRange
// unless 1 <= a <= r-1 and InvariantViolation if the inequality fails.
Verdict sy_verdict(const CountProfile& profile, long a);
Verdict sy_verdict(const BinaryMatroid& m, const ConstraintSpec& spec, long a);

// I(a)^2 against (1+1/a)(1+1/(m-a)) I(a+1) I(a-1) on an independent-set profile.
// Throws BadRange unless 1 <= a <= min(r-1, m-1).
Verdict gen_mason_verdict(const CountProfile& profile, long a);
Verdict gen_mason_verdict(const BinaryMatroid& m, const ConstraintSpec& spec, long a);

// Bases of M that avoid x. For a coloop this is 0, which is what makes
// B(M) = B(M-x) + B(M/x) hold for every non-loop.
BigInt count_bases_avoiding(const BinaryMatroid& m, std::size_t x);

// B(M-x) / B(M/x) for a non-loop x. Throws LoopArgument; throws
// InvariantViolation if the value exceeds n.
Rational basis_ratio(const BinaryMatroid& m, std::size_t x);

// B(M) as a telescoping product of (1 + ratio) over a greedy basis.
BigInt count_via_ratio_product(const BinaryMatroid& m);

// Counts independent sets of the given size, filtered and graded like
// count_profile. Sets of size equal to the rank of a truncation are the bases
// of that truncation.
std::vector<BigInt> count_truncated(const BinaryMatroid& m, const ConstraintSpec& spec, std::size_t size);

// I(a) binom(m, a) = B_{S,c}(T, R, a) where T is M + free(m) truncated to
// rank n. Returns false on the first level where the two sides differ.
bool mason_substitution_holds(const BinaryMatroid& m, const ConstraintSpec& spec);

}  // namespace sylab
