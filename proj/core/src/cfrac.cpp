#include "sylab/cfrac.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "sylab/error.hpp"

namespace sylab {

CFExpansion cf_expand(const BigInt& p, const BigInt& q) {
  if (q == 0) fail(ErrorKind::ZeroDenominator, "continued fraction of " + to_string(p) + "/0");
  if (p < 0 || q < 0) fail(ErrorKind::BadParameters, "continued fraction needs nonnegative input");
  CFExpansion out;
  BigInt a = p;
  BigInt b = q;
  while (b != 0) {
    BigInt quot = a / b;
    BigInt rem = a - quot * b;
    out.qsum += quot;
    out.quotients.push_back(std::move(quot));
    a = std::move(b);
    b = std::move(rem);
  }
  out.value = make_rational(p, q);
  return out;
}

Rational cf_value(const std::vector<BigInt>& quotients) {
  if (quotients.empty()) fail(ErrorKind::BadQuotient, "empty quotient list");
  for (std::size_t i = 1; i < quotients.size(); ++i) {
    if (quotients[i] < 1) fail(ErrorKind::BadQuotient, "quotient " + std::to_string(i) + " is below 1");
  }
  if (quotients[0] < 0) fail(ErrorKind::BadQuotient, "negative leading quotient");
  // num/den of the tail, folded from the back.
  BigInt num = quotients.back();
  BigInt den = 1;
  for (std::size_t i = quotients.size() - 1; i-- > 0;) {
    BigInt next = quotients[i] * num + den;
    den = std::move(num);
    num = std::move(next);
  }
  return make_rational(num, den);
}

BigInt quotient_sum(const BigInt& p, const BigInt& q) {
  if (q == 0) fail(ErrorKind::ZeroDenominator, "quotient sum of " + to_string(p) + "/0");
  if (p < 0 || q < 0) fail(ErrorKind::BadParameters, "quotient sum needs nonnegative input");
  if (p.fits_ulong_p() && q.fits_ulong_p()) return BigInt(quotient_sum_u64(p.get_ui(), q.get_ui()));
  return cf_expand(p, q).qsum;
}

std::uint64_t quotient_sum_u64(std::uint64_t p, std::uint64_t q, std::uint64_t* gcd_out) {
  if (q == 0) fail(ErrorKind::ZeroDenominator, "quotient sum with zero denominator");
  std::uint64_t total = 0;
  while (q != 0) {
    total += p / q;
    std::uint64_t r = p % q;
    p = q;
    q = r;
  }
  if (gcd_out != nullptr) *gcd_out = p;
  return total;
}

std::optional<double> log_loglog_squared(double x) {
  if (x <= std::exp(1.0)) return std::nullopt;
  double l = std::log(x);
  double ll = std::log(l);
  double v = l * ll * ll;
  if (!(v > 0)) return std::nullopt;
  return v;
}

NtdResult ntd_search(const BigInt& A, const BigInt& B, std::uint64_t budget) {
  if (B < 1 || B > A || A > 2 * B) fail(ErrorKind::BadParameters, "ntd_search needs 1 <= B <= A <= 2B");
  if (B == 1) fail(ErrorKind::NoCandidate, "B = 1 leaves no m in [1, B-1]");
  if (!A.fits_ulong_p() || sizeof(unsigned long) < sizeof(std::uint64_t)) {
    fail(ErrorKind::BadParameters, "ntd_search supports A below 2^64");
  }
  std::uint64_t a = A.get_ui();
  std::uint64_t b = B.get_ui();
  NtdResult best;
  best.score = std::numeric_limits<std::uint64_t>::max();
  auto consider = [&](std::uint64_t m) {
    std::uint64_t s = std::max(quotient_sum_u64(m, a), quotient_sum_u64(b - m, a));
    ++best.candidates;
    if (s < best.score || (s == best.score && m < best.m)) {
      best.score = s;
      best.m = m;
    }
  };
  if (b - 1 <= budget) {
    best.exhaustive = true;
    for (std::uint64_t m = 1; m < b; ++m) consider(m);
  } else {
    std::mt19937_64 rng(kNtdSeed);
    for (std::uint64_t i = 0; i < budget; ++i) consider(1 + rng() % (b - 1));
  }
  if (auto base = log_loglog_squared(static_cast<double>(a))) best.quality = static_cast<double>(best.score) / *base;
  return best;
}

}  // namespace sylab
