#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "sylab/config.hpp"
#include "sylab/counting.hpp"
#include "sylab/error.hpp"
#include "sylab/matroid.hpp"
#include "sylab/multigraph.hpp"

using namespace sylab;

namespace {

std::uint64_t all(const BinaryMatroid& m) { return m.ground().bits(); }

bool throws_kind(ErrorKind kind, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("rank and independence on small column sets") {
  BinaryMatroid m(2, {0b10, 0b01, 0b11});
  CHECK(m.rank() == 2);
  CHECK(m.is_independent(SubsetMask::of({0, 1})));
  CHECK_FALSE(m.is_independent(SubsetMask::of({0, 1, 2})));
  CHECK(m.rank(SubsetMask::of({0, 1, 2})) == 2);
  CHECK(m.is_independent(SubsetMask{}));
}

TEST_CASE("loops") {
  BinaryMatroid m(2, {0b10, 0b01, 0b00});
  CHECK(m.loops() == SubsetMask::of({2}));
  CHECK(m.nonloops() == SubsetMask::of({0, 1}));
  CHECK(BinaryMatroid(2, {1, 2, 3}).loops().empty());
  BinaryMatroid c = contract(m, 0);
  CHECK(c.is_loop(0));
  CHECK(c.rank(SubsetMask::of({0})) == 0);
}

TEST_CASE("parallel classes") {
  BinaryMatroid m(2, {0b10, 0b10, 0b01});
  CHECK(m.parallel_class(0) == SubsetMask::of({0, 1}));
  CHECK(m.parallel_class(2) == SubsetMask::of({2}));
  CHECK(throws_kind(ErrorKind::LoopArgument, [] { BinaryMatroid(1, {0, 1}).parallel_class(0); }));

  BinaryMatroid distinct(3, {1, 2, 3, 4, 5, 6, 7});
  for (std::size_t i = 0; i < 7; ++i) CHECK(distinct.parallel_class(i) == SubsetMask::singleton(i));
}

TEST_CASE("contraction") {
  BinaryMatroid m(2, {0b10, 0b01, 0b11});
  CHECK(contract(m, SubsetMask{}) == m);
  BinaryMatroid c = contract(m, SubsetMask::of({0}));
  CHECK(c.rank(SubsetMask::of({1, 2})) == 1);
  CHECK(c.parallel_class(1) == SubsetMask::of({1, 2}));
  CHECK(throws_kind(ErrorKind::DependentContraction, [&] { contract(m, SubsetMask::of({0, 1, 2})); }));
}

TEST_CASE("graphic matroids") {
  CHECK(count_bases(from_graph(oracle::complete(3))) == 3);
  CHECK(count_bases(from_graph(oracle::cycle(4))) == 4);
  CHECK(greedy_basis(from_graph(oracle::complete(3))) == SubsetMask::of({0, 1}));
  // rank = |V| - 1 on connected graphs
  CHECK(from_graph(oracle::complete(5)).rank() == 4);
}

TEST_CASE("rank-2 on three pairwise independent elements has three bases") {
  CHECK(enumerate_bases(BinaryMatroid(2, {1, 2, 3})).size() == 3);
}

TEST_CASE("enumeration refuses large ground sets") {
  BinaryMatroid big(5, std::vector<std::uint64_t>(brute_force_limit() + 1, 1));
  CHECK(throws_kind(ErrorKind::SizeLimit, [&] { enumerate_bases(big); }));
}

TEST_CASE("property: rank, bases and independent sets agree with the oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t d = 1 + rng() % 4;
    std::size_t n = 1 + rng() % 7;
    BinaryMatroid m = oracle::random_matroid(rng, d, n);
    if (rng() % 3 == 0) m = delete_element(m, rng() % n);
    auto del = m.deleted().bits();
    CHECK(m.rank() == oracle::rank_of(m.columns(), all(m), del));
    for (std::uint64_t s = 0; s <= all(m); ++s) {
      REQUIRE(m.rank(SubsetMask(s)) == oracle::rank_of(m.columns(), s, del));
    }
    std::vector<std::uint64_t> bases;
    for (auto b : enumerate_bases(m)) bases.push_back(b.bits());
    std::sort(bases.begin(), bases.end());
    CHECK(bases == oracle::all_bases(m.columns(), del));
    std::size_t ind = 0;
    for_each_independent(m, [&](SubsetMask) { ++ind; });
    CHECK(ind == oracle::all_independent(m.columns(), del).size());
    CHECK(m.is_independent(greedy_basis(m)));
    CHECK(greedy_basis(m).size() == m.rank());
  }
}

TEST_CASE("property: exchange axiom") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    BinaryMatroid m = oracle::random_matroid(rng, 3, 6);
    auto ind = oracle::all_independent(m.columns());
    std::uint64_t a = ind[rng() % ind.size()];
    std::uint64_t b = ind[rng() % ind.size()];
    if (oracle::pc(a) >= oracle::pc(b)) continue;
    bool found = false;
    for (std::size_t x = 0; x < m.size(); ++x) {
      if ((b >> x & 1U) && !(a >> x & 1U) && m.is_independent(SubsetMask(a | (std::uint64_t{1} << x)))) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("property: parallel classes partition the non-loops") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    BinaryMatroid m = oracle::random_matroid(rng, 2 + rng() % 2, 1 + rng() % 7);
    SubsetMask covered;
    for (auto cls : m.parallel_classes()) {
      CHECK(cls.disjoint(covered));
      covered = covered | cls;
      for (auto x : cls.indices()) {
        CHECK(m.parallel_class(x) == cls);
        for (auto y : cls.indices()) CHECK(oracle::rank_of(m.columns(), (1ULL << x) | (1ULL << y)) == 1);
      }
    }
    CHECK(covered == m.nonloops());
  }
}

TEST_CASE("property: contraction behaves like the quotient") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    BinaryMatroid m = oracle::random_matroid(rng, 4, 6);
    auto ind = oracle::all_independent(m.columns());
    std::uint64_t a = ind[rng() % ind.size()];
    BinaryMatroid c = contract(m, SubsetMask(a));
    CHECK(c.rank() == m.rank() - oracle::pc(a));
    // independent sets of M/A are the B disjoint from A with A+B independent
    for (std::uint64_t s = 0; s <= all(m); ++s) {
      bool expect = !(s & a) && oracle::independent(m.columns(), s | a);
      REQUIRE(c.is_independent(SubsetMask(s)) == expect);
    }
    for (auto x : SubsetMask(a).indices()) CHECK(c.is_loop(x));
    if (oracle::pc(a) == 2) {
      auto idx = SubsetMask(a).indices();
      BinaryMatroid step = contract(contract(m, idx[0]), idx[1]);
      for (std::uint64_t s = 0; s <= all(m); ++s) REQUIRE(step.rank(SubsetMask(s)) == c.rank(SubsetMask(s)));
    }
  }
}

TEST_CASE("property: deletion-contraction and direct sums") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    BinaryMatroid m = oracle::random_matroid(rng, 3, 1 + rng() % 6);
    for (auto x : m.nonloops().indices()) {
      // a coloop has no basis avoiding it; M - x then has smaller rank
      bool coloop = delete_element(m, x).rank() < m.rank();
      BigInt avoiding = coloop ? BigInt(0) : count_bases(delete_element(m, x));
      CHECK(avoiding == count_bases_avoiding(m, x));
      CHECK(count_bases(m) == avoiding + count_bases(contract(m, x)));
    }
    BinaryMatroid n = oracle::random_matroid(rng, 2, 1 + rng() % 3);
    BinaryMatroid s = direct_sum(m, n);
    CHECK(s.size() == m.size() + n.size());
    CHECK(count_bases(s) == count_bases(m) * count_bases(n));
  }
}

TEST_CASE("deleted elements are excluded everywhere") {
  BinaryMatroid m = delete_element(BinaryMatroid(2, {1, 2, 3}), 2);
  CHECK(m.size() == 3);
  CHECK_FALSE(m.is_independent(SubsetMask::of({2})));
  CHECK(m.rank() == 2);
  CHECK(count_bases(m) == 1);
}

TEST_CASE("free matroid") {
  for (std::size_t n = 1; n <= 6; ++n) {
    BinaryMatroid f = free_matroid(n);
    CHECK(f.rank() == n);
    CHECK(count_bases(f) == 1);
  }
}
