#pragma once

#include <optional>
#include <vector>

#include "sylab/bigint.hpp"
#include "sylab/counting.hpp"
#include "sylab/matroid.hpp"

namespace sylab {

struct EqualityVerdict {
  enum class Kind { Equal, Strict, Vanishing };
  Kind kind = Kind::Vanishing;
  Rational s;       // Equal only
  SubsetMask A;     // Strict only
  std::size_t x = 0;
};

// Decides P(a)^2 = P(a+1)P(a-1) for k = 0 through parallel classes: for every
// independent A with |A| = r-2 and |A∩R| = a-1 each class of M/A must satisfy
// |class∩R| = s |class-R| with one s > 0 shared by all A and all classes.
// The first offending (A, x) in lexicographic order is reported.
EqualityVerdict equality_criterion(const BinaryMatroid& m, SubsetMask R, long a);

struct TotalEqualityReport {
  bool loopless = false;
  bool p0_positive = false;
  bool pr_positive = false;
  bool preconditions() const { return loopless && p0_positive && pr_positive; }

  bool power_identity = false;    // (i)  P(1)^r = P(0)^(r-1) P(r)
  bool equal_everywhere = false;  // (ii)
  bool equal_somewhere = false;   // (iii)
  bool class_ratio = false;       // (iv)
  std::optional<Rational> s;      // the ratio when (iv) holds
};

TotalEqualityReport total_equality_report(const BinaryMatroid& m, SubsetMask R);

// P(a+1)/P(a) for a = first .. first + ratios.size() - 1, over the levels
// where both values are positive.
struct RatioChain {
  long first = 0;
  std::vector<Rational> ratios;
};
RatioChain ratio_chain(const BinaryMatroid& m, SubsetMask R);

struct Fixture {
  BinaryMatroid matroid;
  SubsetMask R;
};

// Every element doubled; R is the original copy.
Fixture build_double_matroid(const BinaryMatroid& m);
// All of F2^r (zero included), R the hyperplane with leading coordinate 0.
Fixture build_linear_example(std::size_t r);
// R0 (hyperplane without 0), R1, S0 (its complement), S1 with R1 = S1 the
// first t vectors of S0; R = R0 + R1.
Fixture build_combination_example(std::size_t r, std::size_t t);

}  // namespace sylab
