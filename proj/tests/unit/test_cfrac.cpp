#include <random>

#include "doctest.h"
#include "sylab/cfrac.hpp"
#include "sylab/error.hpp"

using namespace sylab;

namespace {

std::vector<BigInt> q(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Quotient sum by repeated subtraction; small inputs only.
std::uint64_t slow_qsum(std::uint64_t p, std::uint64_t qq) {
  std::uint64_t total = 0;
  while (qq != 0) {
    while (p >= qq) {
      p -= qq;
      ++total;
    }
    std::swap(p, qq);
  }
  return total;
}

}  // namespace

TEST_CASE("expansions") {
  CFExpansion a = cf_expand(7, 5);
  CHECK(a.quotients == q({1, 2, 2}));
  CHECK(a.qsum == 5);
  CHECK(a.value == Rational(7, 5));
  CHECK(cf_expand(3, 1).quotients == q({3}));
  CHECK(cf_expand(3, 1).qsum == 3);
  CHECK(cf_expand(5, 2).quotients == q({2, 2}));
  CHECK(cf_expand(5, 2).qsum == 4);
  CHECK(cf_expand(1, 1).quotients == q({1}));
  CHECK(cf_expand(0, 4).quotients == q({0}));
  CHECK(cf_expand(3, 7).quotients == q({0, 2, 3}));
}

TEST_CASE("quotient sums") {
  CHECK(quotient_sum(7, 3) == 5);
  for (long n = 1; n <= 20; ++n) CHECK(quotient_sum(n, 1) == n);
  CHECK(cf_expand(8, 5).quotients == q({1, 1, 1, 2}));
  CHECK(quotient_sum(8, 5) == 5);
  std::uint64_t g = 0;
  CHECK(quotient_sum_u64(12, 18, &g) == quotient_sum(12, 18));
  CHECK(g == 6);
}

TEST_CASE("errors") {
  try {
    cf_expand(3, 0);
    FAIL("zero denominator accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroDenominator);
  }
  CHECK_THROWS_AS(cf_expand(-3, 2), Error);
  try {
    cf_value(q({1, 0, 2}));
    FAIL("zero quotient accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadQuotient);
  }
  CHECK_THROWS_AS(cf_value({}), Error);
  try {
    ntd_search(1, 1);
    FAIL("B = 1 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoCandidate);
  }
  CHECK_THROWS_AS(ntd_search(7, 2), Error);
}

TEST_CASE("property: expansion round-trips and is canonical") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10000; ++trial) {
    std::uint64_t p = 1 + rng() % 1000000000ULL;
    std::uint64_t qq = 1 + rng() % 1000000000ULL;
    CFExpansion e = cf_expand(BigInt(static_cast<unsigned long>(p)), BigInt(static_cast<unsigned long>(qq)));
    Rational want = make_rational(BigInt(static_cast<unsigned long>(p)), BigInt(static_cast<unsigned long>(qq)));
    REQUIRE(e.value == want);
    REQUIRE(cf_value(e.quotients) == want);
    for (std::size_t i = 1; i < e.quotients.size(); ++i) CHECK(e.quotients[i] >= 1);
    if (e.quotients.size() > 1) CHECK(e.quotients.back() >= 2);
    BigInt sum = 0;
    for (const auto& x : e.quotients) sum += x;
    CHECK(sum == e.qsum);
    CHECK(quotient_sum_u64(p, qq) == e.qsum.get_ui());
  }
  for (std::uint64_t p = 1; p < 60; ++p) {
    for (std::uint64_t qq = 1; qq < 60; ++qq) CHECK(quotient_sum_u64(p, qq) == slow_qsum(p, qq));
  }
}

TEST_CASE("property: ntd search is the exhaustive minimum") {
  for (std::uint64_t B = 2; B <= 40; ++B) {
    for (std::uint64_t A = B; A <= 2 * B; ++A) {
      NtdResult r = ntd_search(BigInt(static_cast<unsigned long>(A)), BigInt(static_cast<unsigned long>(B)));
      CHECK(r.exhaustive);
      REQUIRE(r.m >= 1);
      REQUIRE(r.m <= B - 1);
      std::uint64_t best = ~std::uint64_t{0};
      std::uint64_t best_m = 0;
      for (std::uint64_t m = 1; m < B; ++m) {
        std::uint64_t score = std::max(slow_qsum(m, A), slow_qsum(B - m, A));
        if (score < best) {
          best = score;
          best_m = m;
        }
      }
      CHECK(r.score == best);
      CHECK(r.m == best_m);
    }
  }
  CHECK(ntd_search(2, 2).m == 1);
  CHECK(ntd_search(3, 2).m == 1);
}

TEST_CASE("sampled search stays in range and is deterministic") {
  BigInt A("1999993");
  BigInt B("1000003");
  NtdResult x = ntd_search(A, B, 256);
  NtdResult y = ntd_search(A, B, 256);
  CHECK_FALSE(x.exhaustive);
  CHECK(x.m == y.m);
  CHECK(x.m >= 1);
  CHECK(x.m < 1000003);
  CHECK(x.candidates == 256);
  CHECK(x.quality.has_value());
}
