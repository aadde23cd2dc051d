#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "sylab/counting.hpp"
#include "sylab/equality.hpp"
#include "sylab/error.hpp"

using namespace sylab;

namespace {

CountProfile profile(const BinaryMatroid& m, SubsetMask R) {
  ConstraintSpec spec;
  spec.R = R;
  return count_profile(m, spec);
}

}  // namespace

TEST_CASE("double matroids have total equality with s = 1") {
  std::vector<BinaryMatroid> seeds{BinaryMatroid(2, {1, 2, 3}), from_graph(oracle::complete(4)),
                                   BinaryMatroid(3, {1, 2, 3, 4, 5, 6, 7}), free_matroid(3)};
  for (const auto& m : seeds) {
    Fixture f = build_double_matroid(m);
    for (std::size_t y = 0; y < f.matroid.size(); ++y) {
      SubsetMask cls = f.matroid.parallel_class(y);
      CHECK((cls & f.R).size() == (cls - f.R).size());
    }
    for (long a = 1; a + 1 <= static_cast<long>(f.matroid.rank()); ++a) {
      EqualityVerdict v = equality_criterion(f.matroid, f.R, a);
      CHECK(v.kind == EqualityVerdict::Kind::Equal);
      CHECK(v.s == 1);
    }
    TotalEqualityReport rep = total_equality_report(f.matroid, f.R);
    CHECK(rep.preconditions());
    CHECK(rep.power_identity);
    CHECK(rep.equal_everywhere);
    CHECK(rep.equal_somewhere);
    CHECK(rep.class_ratio);
    REQUIRE(rep.s);
    CHECK(*rep.s == 1);
    RatioChain chain = ratio_chain(f.matroid, f.R);
    for (const auto& q : chain.ratios) CHECK(q == 1);
  }
  CHECK_THROWS_AS(build_double_matroid(BinaryMatroid(1, {0, 1})), Error);
}

TEST_CASE("linear example: equality at level 1 with P(r) = 0") {
  for (std::size_t r = 3; r <= 4; ++r) {
    Fixture f = build_linear_example(r);
    CHECK(f.matroid.size() == (std::size_t{1} << r));
    EqualityVerdict v = equality_criterion(f.matroid, f.R, 1);
    CHECK(v.kind == EqualityVerdict::Kind::Equal);
    CHECK(v.s == 1);
    CountProfile p = profile(f.matroid, f.R);
    // R spans a hyperplane, so no basis lies inside it
    CHECK(p.count(static_cast<long>(r)) == 0);
    CHECK(p.count(0) > 0);
  }
}

TEST_CASE("combination example separates somewhere-equality from everywhere-equality") {
  for (std::size_t t = 1; t <= 4; ++t) {
    Fixture f = build_combination_example(3, t);
    EqualityVerdict low = equality_criterion(f.matroid, f.R, 1);
    CHECK(low.kind == EqualityVerdict::Kind::Equal);
    EqualityVerdict high = equality_criterion(f.matroid, f.R, 2);
    REQUIRE(high.kind == EqualityVerdict::Kind::Strict);
    CHECK(f.matroid.is_independent(high.A));
    CHECK(high.A.size() == 1);
    CHECK((high.A & f.R).size() == 1);
    CHECK_FALSE(contract(f.matroid, high.A).is_loop(high.x));
    TotalEqualityReport rep = total_equality_report(f.matroid, f.R);
    CHECK(rep.preconditions());
    CHECK(rep.equal_somewhere);
    CHECK_FALSE(rep.equal_everywhere);
  }
}

TEST_CASE("free matroid with a single graded element fails the preconditions") {
  // the only basis holds exactly one graded element, so both ends vanish
  TotalEqualityReport rep = total_equality_report(free_matroid(3), SubsetMask::of({0}));
  CHECK(rep.loopless);
  CHECK_FALSE(rep.p0_positive);
  CHECK_FALSE(rep.pr_positive);
  CHECK_FALSE(rep.preconditions());
}

TEST_CASE("triangle chain") {
  RatioChain chain = ratio_chain(from_graph(oracle::complete(3)), SubsetMask::of({0}));
  // P(0) = 1, P(1) = 2 / 2 = 1, P(2) = 0
  REQUIRE(chain.ratios.size() == 1);
  CHECK(chain.first == 0);
  CHECK(chain.ratios[0] == 1);
}

TEST_CASE("equality criterion range errors") {
  BinaryMatroid m(2, {1, 2, 3});
  CHECK_THROWS_AS(equality_criterion(m, SubsetMask::of({0}), 0), Error);
  CHECK_THROWS_AS(equality_criterion(m, SubsetMask::of({0}), 2), Error);
  CHECK(equality_criterion(BinaryMatroid(2, {0, 1, 2}), SubsetMask::of({0}), 1).kind ==
        EqualityVerdict::Kind::Vanishing);
}

TEST_CASE("property: criterion matches the profile comparison") {
  std::mt19937_64 rng(41);
  int equal_seen = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    BinaryMatroid m = oracle::random_matroid(rng, 2 + rng() % 2, 2 + rng() % 6);
    if (rng() % 2 == 0) m = build_double_matroid(BinaryMatroid(m.dim(), {1, 2, 3})).matroid;
    if (m.rank() < 2) continue;
    SubsetMask R(rng() & m.ground().bits());
    CountProfile p = profile(m, R);
    for (long a = 1; a + 1 <= static_cast<long>(m.rank()); ++a) {
      EqualityVerdict v = equality_criterion(m, R, a);
      if (p.value(a) == 0) {
        CHECK(v.kind == EqualityVerdict::Kind::Vanishing);
        continue;
      }
      bool eq = p.value(a) * p.value(a) == p.value(a + 1) * p.value(a - 1);
      REQUIRE((v.kind == EqualityVerdict::Kind::Equal) == eq);
      if (eq) {
        ++equal_seen;
        CHECK(v.s == p.value(a + 1) / p.value(a));
        CHECK(v.s == p.value(a) / p.value(a - 1));
      } else {
        CHECK(v.A.size() + 2 == m.rank());
        CHECK(static_cast<long>((v.A & R).size()) == a - 1);
      }
    }
  }
  CHECK(equal_seen > 0);
}

TEST_CASE("property: total-equality flags on loopless instances") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    BinaryMatroid m = oracle::random_matroid(rng, 3, 2 + rng() % 5);
    if (!m.loops().empty() || m.rank() < 2) continue;
    SubsetMask R(rng() & m.ground().bits());
    TotalEqualityReport rep = total_equality_report(m, R);
    if (!rep.preconditions()) continue;
    CHECK(rep.power_identity == rep.equal_everywhere);
    CHECK(rep.class_ratio == rep.equal_everywhere);
    if (rep.equal_everywhere) CHECK(rep.equal_somewhere);
    RatioChain chain = ratio_chain(m, R);
    for (std::size_t i = 1; i < chain.ratios.size(); ++i) CHECK(chain.ratios[i - 1] >= chain.ratios[i]);
  }
}
