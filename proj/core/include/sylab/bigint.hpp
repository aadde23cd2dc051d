#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sylab {

using BigInt = mpz_class;
using Rational = mpq_class;

// Decimal string; never abbreviated.
std::string to_string(const BigInt& x);

// Always "num/den", including integers ("3/1") so the output shape is fixed.
std::string to_string(const Rational& q);

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);

// n! / (k_1! ... k_m!) when the parts are nonnegative and sum to n, else 0.
template <typename Range>
BigInt multinomial(long n, const Range& parts) {
  long total = 0;
  for (long k : parts) {
    if (k < 0) return 0;
    total += k;
  }
  if (total != n || n < 0) return 0;
  BigInt out = factorial(static_cast<unsigned>(n));
  for (long k : parts) out /= factorial(static_cast<unsigned>(k));
  return out;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt parse_bigint(const std::string& text);
Rational parse_rational(const std::string& text);

}  // namespace sylab
