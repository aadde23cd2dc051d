#include <map>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "sylab/counting.hpp"
#include "sylab/equality.hpp"
#include "sylab/error.hpp"

using namespace sylab;

namespace {

// B_{S,c}(M,R,a) straight from the oracle's basis list.
std::vector<BigInt> oracle_counts(const BinaryMatroid& m, const ConstraintSpec& spec) {
  std::size_t r = m.rank();
  std::vector<BigInt> out(r + 1, 0);
  for (auto b : oracle::all_bases(m.columns(), m.deleted().bits())) {
    bool ok = true;
    for (std::size_t i = 0; i < spec.k(); ++i) {
      if (static_cast<long>(oracle::pc(b & spec.S[i].bits())) != spec.c[i]) ok = false;
    }
    if (ok) out[oracle::pc(b & spec.R.bits())] += 1;
  }
  return out;
}

// Random disjoint R, S_1..S_k.
ConstraintSpec random_spec(std::mt19937_64& rng, std::size_t n, std::size_t r) {
  ConstraintSpec spec;
  std::size_t k = rng() % 3;
  spec.S.resize(k);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t slot = rng() % (k + 2);
    if (slot == 0) spec.R = spec.R.with(x);
    else if (slot <= k) spec.S[slot - 1] = spec.S[slot - 1].with(x);
  }
  for (std::size_t i = 0; i < k; ++i) spec.c.push_back(static_cast<long>(rng() % (std::min(spec.S[i].size(), r) + 1)));
  return spec;
}

}  // namespace

TEST_CASE("triangle with one graded edge") {
  BinaryMatroid k3 = from_graph(oracle::complete(3));
  ConstraintSpec spec;
  spec.R = SubsetMask::of({0});
  CountProfile p = count_profile(k3, spec);
  REQUIRE(p.counts.size() == 3);
  CHECK(p.count(0) == 1);
  CHECK(p.count(1) == 2);
  CHECK(p.count(2) == 0);
  CHECK(p.value(1) == 1);
  CHECK(p.count(-1) == 0);
  CHECK(p.count(7) == 0);
}

TEST_CASE("double of two classes") {
  BinaryMatroid m(2, {0b10, 0b01});
  Fixture f = build_double_matroid(m);
  ConstraintSpec spec;
  spec.R = f.R;
  CountProfile p = count_profile(f.matroid, spec);
  CHECK(p.count(0) == 1);
  CHECK(p.count(1) == 2);
  CHECK(p.count(2) == 1);
  for (long a = 0; a <= 2; ++a) CHECK(p.value(a) == 1);
  CHECK(sy_verdict(p, 1) == Verdict::Equal);
}

TEST_CASE("sy verdict examples") {
  BinaryMatroid m(2, {1, 2, 3});
  ConstraintSpec spec;
  spec.R = SubsetMask::of({0});
  CountProfile p = count_profile(m, spec);
  CHECK(p.value(1) * p.value(1) == 1);
  CHECK(p.value(2) * p.value(0) == 0);
  CHECK(sy_verdict(p, 1) == Verdict::Strict);

  // R of rank 0 cannot reach level 1
  BinaryMatroid loopy(2, {0, 1, 2});
  spec.R = SubsetMask::of({0});
  CHECK(sy_verdict(loopy, spec, 1) == Verdict::Vanishing);

  CHECK_THROWS_AS(sy_verdict(p, 0), Error);
  CHECK_THROWS_AS(sy_verdict(p, 2), Error);
}

TEST_CASE("overloaded constraints give zero counts") {
  BinaryMatroid m = from_graph(oracle::complete(4));
  ConstraintSpec spec;
  spec.R = SubsetMask::of({0, 1});
  spec.S = {SubsetMask::of({2, 3}), SubsetMask::of({4, 5})};
  spec.c = {2, 1};
  CountProfile p = count_profile(m, spec);
  for (long a = 1; a <= 3; ++a) CHECK(p.count(a) == 0);
}

TEST_CASE("spec validation") {
  BinaryMatroid m(2, {1, 2, 3});
  ConstraintSpec overlap;
  overlap.R = SubsetMask::of({0});
  overlap.S = {SubsetMask::of({0, 1})};
  overlap.c = {1};
  try {
    count_profile(m, overlap);
    FAIL("overlap accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OverlappingConstraints);
  }
  ConstraintSpec outside;
  outside.R = SubsetMask::of({5});
  CHECK_THROWS_AS(count_profile(m, outside), Error);
}

TEST_CASE("basis ratio and the telescoping product") {
  BinaryMatroid k3 = from_graph(oracle::complete(3));
  for (std::size_t x = 0; x < 3; ++x) CHECK(basis_ratio(k3, x) == Rational(1, 2));
  for (std::size_t k = 1; k <= 5; ++k) CHECK(basis_ratio(from_graph(oracle::bundle(k + 1)), 0) == Rational(static_cast<long>(k)));
  CHECK(count_via_ratio_product(k3) == 3);
  CHECK(count_via_ratio_product(free_matroid(4)) == 1);
  CHECK(count_via_ratio_product(from_graph(oracle::cycle(4))) == 4);
  try {
    basis_ratio(BinaryMatroid(1, {0, 1}), 0);
    FAIL("loop accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LoopArgument);
  }
}

TEST_CASE("coloops have ratio zero") {
  BinaryMatroid m(2, {0b10, 0b01, 0b01});
  CHECK(count_bases_avoiding(m, 0) == 0);
  CHECK(basis_ratio(m, 0) == 0);
}

TEST_CASE("mason on free matroids is the binomial equality case") {
  for (std::size_t n = 3; n <= 7; ++n) {
    CountProfile p = count_profile(free_matroid(n), ConstraintSpec{}, CountMode::IndependentSets);
    for (long a = 0; a <= static_cast<long>(n); ++a) CHECK(p.count(a) == binomial(static_cast<long>(n), a));
    for (long a = 1; a + 1 <= static_cast<long>(n); ++a) CHECK(gen_mason_verdict(p, a) == Verdict::Equal);
  }
}

TEST_CASE("property: profiles agree with the oracle and normalize by the multinomial") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    BinaryMatroid m = oracle::random_matroid(rng, 1 + rng() % 4, 1 + rng() % 7);
    std::size_t r = m.rank();
    ConstraintSpec spec = random_spec(rng, m.size(), r);
    CountProfile p = count_profile(m, spec);
    auto expect = oracle_counts(m, spec);
    REQUIRE(p.counts.size() == expect.size());
    for (std::size_t a = 0; a <= r; ++a) {
      REQUIRE(p.counts[a] == expect[a]);
      std::vector<long> parts{static_cast<long>(a)};
      long used = static_cast<long>(a);
      for (long c : spec.c) {
        parts.push_back(c);
        used += c;
      }
      parts.push_back(static_cast<long>(r) - used);
      if (p.counts[a] > 0) CHECK(Rational(p.counts[a]) / p.normalized[a] == Rational(multinomial(static_cast<long>(r), parts)));
    }
    for (long a = 1; a + 1 <= static_cast<long>(r); ++a) {
      Verdict v = sy_verdict(p, a);
      Rational lhs = p.value(a) * p.value(a);
      Rational rhs = p.value(a + 1) * p.value(a - 1);
      CHECK(lhs >= rhs);
      if (p.value(a) == 0) CHECK(v == Verdict::Vanishing);
      else CHECK((v == Verdict::Equal) == (lhs == rhs));
    }
  }
}

TEST_CASE("property: independent-set profiles and the generalized mason inequality") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    BinaryMatroid m = oracle::random_matroid(rng, 1 + rng() % 4, 1 + rng() % 6);
    ConstraintSpec spec = random_spec(rng, m.size(), m.rank());
    spec.R = SubsetMask{};
    CountProfile p = count_profile(m, spec, CountMode::IndependentSets);
    SubsetMask rest = m.ground();
    for (auto s : spec.S) rest = rest - s;
    std::map<long, BigInt> expect;
    for (auto s : oracle::all_independent(m.columns())) {
      bool ok = true;
      for (std::size_t i = 0; i < spec.k(); ++i) {
        if (static_cast<long>(oracle::pc(s & spec.S[i].bits())) != spec.c[i]) ok = false;
      }
      if (ok) expect[static_cast<long>(oracle::pc(s & rest.bits()))] += 1;
    }
    for (long a = 0; a < static_cast<long>(p.counts.size()); ++a) REQUIRE(p.count(a) == expect[a]);
    long top = std::min(static_cast<long>(p.r) - 1, p.m - 1);
    for (long a = 1; a <= top; ++a) {
      Rational lhs = Rational(p.count(a) * p.count(a));
      Rational rhs = Rational(a + 1, a) * make_rational(BigInt(p.m - a + 1), BigInt(p.m - a)) *
                     Rational(p.count(a + 1) * p.count(a - 1));
      CHECK(lhs >= rhs);
      CHECK((gen_mason_verdict(p, a) == Verdict::Equal) == (p.count(a) > 0 && lhs == rhs));
    }
    if (m.size() <= 5) CHECK(mason_substitution_holds(m, spec));
  }
}

TEST_CASE("property: ratio bound and telescoping product") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    BinaryMatroid m = oracle::random_matroid(rng, 1 + rng() % 4, 1 + rng() % 7);
    for (auto x : m.nonloops().indices()) {
      Rational q = basis_ratio(m, x);
      CHECK(q <= Rational(static_cast<long>(m.size())));
      BigInt del = oracle::all_bases(m.columns(), m.deleted().bits() | (1ULL << x)).size();
      if (oracle::rank_of(m.columns(), m.ground().bits() & ~(1ULL << x)) < m.rank()) del = 0;
      CHECK(q == make_rational(del, count_bases(contract(m, x))));
    }
    CHECK(count_via_ratio_product(m) == BigInt(static_cast<unsigned long>(oracle::all_bases(m.columns()).size())));
  }
}

TEST_CASE("truncated counts") {
  BinaryMatroid m = free_matroid(4);
  ConstraintSpec spec;
  spec.R = SubsetMask::of({0, 1});
  auto t = count_truncated(m, spec, 2);
  // 2-subsets of 4 graded by how many of {0,1} they hold: 1, 4, 1
  REQUIRE(t.size() >= 3);
  CHECK(t[0] == 1);
  CHECK(t[1] == 4);
  CHECK(t[2] == 1);
}
