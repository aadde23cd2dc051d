#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "sylab/counting.hpp"
#include "sylab/error.hpp"
#include "sylab/reductions.hpp"

using namespace sylab;

namespace {

// Bases of M containing x and avoiding y, straight from the oracle list.
BigInt with_without(const BinaryMatroid& m, std::size_t x, std::size_t y) {
  BigInt n = 0;
  for (auto b : oracle::all_bases(m.columns())) {
    if ((b >> x & 1U) && !(b >> y & 1U)) n += 1;
  }
  return n;
}

Rational rho(const BinaryMatroid& m, std::size_t x) {
  BigInt avoid = 0;
  BigInt contain = 0;
  for (auto b : oracle::all_bases(m.columns())) {
    if (b >> x & 1U) contain += 1;
    else avoid += 1;
  }
  return make_rational(avoid, contain);
}

}  // namespace

TEST_CASE("opposite edges of a four-cycle coincide") {
  BinaryMatroid c4 = from_graph(oracle::cycle(4));
  CdcIdentities id = check_cdc(c4, 0, 2);
  CHECK(id.direct_plus == 1);
  CHECK(id.direct_minus == 1);
  CHECK(id.coincidence);
  CHECK(id.counts_match);
  CHECK(id.gap_formula);
  CHECK(id.verdict == Verdict::Equal);
  CHECK(id.in_equality_language);
}

TEST_CASE("an asymmetric pair gives a strict instance") {
  // K4 minus an edge: the edge opposite the missing one against a side edge
  Multigraph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  g.add_edge(0, 1);
  BinaryMatroid m = from_graph(g);
  bool found = false;
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = 0; y < m.size(); ++y) {
      if (x == y || m.parallel_class(x).contains(y)) continue;
      CdcIdentities id = check_cdc(m, x, y);
      CHECK(id.direct_plus == with_without(m, x, y));
      CHECK(id.direct_minus == with_without(m, y, x));
      if (!id.coincidence) {
        found = true;
        CHECK(id.verdict == Verdict::Strict);
        CHECK_FALSE(id.in_equality_language);
      }
    }
  }
  CHECK(found);
}

TEST_CASE("instance shape") {
  BinaryMatroid m = from_graph(oracle::complete(4));
  SYInstance inst = cdc_instance(m, 0, 5);
  CHECK(inst.matroid.size() == m.size() + 2);
  CHECK(inst.matroid.dim() == m.dim() + 1);
  CHECK(inst.matroid.rank() == m.rank() + 1);
  CHECK(inst.matroid.labels()[m.size()] == "u");
  CHECK(inst.matroid.labels()[m.size() + 1] == "v");
  CHECK(inst.spec.R == SubsetMask::of({0, m.size()}));
  REQUIRE(inst.spec.k() == 1);
  CHECK(inst.spec.S[0] == m.ground().without(0).without(5));
  CHECK(inst.spec.c[0] == static_cast<long>(m.rank()) - 1);
  CHECK(inst.a == 1);

  BinaryMatroid par(2, {1, 1, 2});
  try {
    cdc_instance(par, 0, 1);
    FAIL("parallel pair accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParallelPair);
  }
  try {
    cdc_instance(BinaryMatroid(2, {0, 1, 2}), 0, 1);
    FAIL("loop accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LoopArgument);
  }
}

TEST_CASE("ratio coincidence through the direct sum") {
  BinaryMatroid k3 = from_graph(oracle::complete(3));
  BinaryMatroid b2 = from_graph(oracle::bundle(2));
  CdcrInstance inst = cdcr_to_cdc(k3, 0, b2, 0);
  CHECK(inst.y == 3);
  CHECK(rho(k3, 0) == Rational(1, 2));
  CHECK(rho(b2, 0) == 1);
  CHECK_FALSE(check_cdc(inst.matroid, inst.x, inst.y).coincidence);

  CdcrInstance same = cdcr_to_cdc(k3, 1, k3, 1);
  CHECK(check_cdc(same.matroid, same.x, same.y).coincidence);
  CHECK_THROWS_AS(cdcr_to_cdc(BinaryMatroid(1, {0}), 0, k3, 0), Error);
}

TEST_CASE("padding") {
  BinaryMatroid m = from_graph(oracle::complete(4));
  SYInstance inst{m, ConstraintSpec{SubsetMask::of({0}), {SubsetMask::of({1, 2})}, {1}}, 1};
  SYInstance same = pad_k(inst, 1);
  CHECK(same.spec.k() == 1);
  SYInstance two = pad_k(inst, 2);
  REQUIRE(two.spec.k() == 2);
  CHECK(two.spec.S[1].empty());
  CHECK(two.spec.c[1] == 0);
  CHECK(count_profile(m, two.spec).normalized == count_profile(m, inst.spec).normalized);
  CHECK_THROWS_AS(pad_k(two, 1), Error);
}

TEST_CASE("property: reduction identities on random instances") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 300; ++trial) {
    BinaryMatroid m = oracle::random_matroid(rng, 3, 2 + rng() % 5);
    std::size_t x = rng() % m.size();
    std::size_t y = rng() % m.size();
    if (m.is_loop(x) || m.is_loop(y) || m.parallel_class(x).contains(y)) continue;
    CdcIdentities id = check_cdc(m, x, y);
    CHECK(id.counts_match);
    CHECK(id.gap_formula);
    CHECK(id.direct_plus == with_without(m, x, y));
    CHECK(id.direct_minus == with_without(m, y, x));
    CHECK(id.in_equality_language == id.coincidence);

    BinaryMatroid n = oracle::random_matroid(rng, 2, 1 + rng() % 3);
    std::size_t z = rng() % n.size();
    if (m.is_loop(x) || n.is_loop(z)) continue;
    CdcrInstance c = cdcr_to_cdc(m, x, n, z);
    CHECK(check_cdc(c.matroid, c.x, c.y).coincidence == (rho(m, x) == rho(n, z)));
    CHECK(count_contract_delete(c.matroid, c.x, c.y) == count_bases(contract(m, x)) * count_bases_avoiding(n, z));
  }
}
