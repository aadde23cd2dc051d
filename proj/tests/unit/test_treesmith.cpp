#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "sylab/cfrac.hpp"
#include "sylab/error.hpp"
#include "sylab/multigraph.hpp"
#include "sylab/treesmith.hpp"

using namespace sylab;

namespace {

std::vector<BigInt> q(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Matrix-tree on the marked realization against the term's (T, F).
void check_realization(const SPTerm& t) {
  Multigraph g = realize(t, true);
  REQUIRE(g.marked());
  std::size_t e = *g.marked();
  CHECK(tau(delete_edge(g, e)) == t.T());
  CHECK(tau(contract_edge(g, e)) == t.F());
  CHECK(g.edge_count() == t.leaf_count() + 1);
  CHECK(realize(t, false).edge_count() == t.leaf_count());
}

SPTerm bundle_term(std::uint64_t k) { return par_extend(SPTerm::leaf(), k - 1); }

}  // namespace

TEST_CASE("leaf and duality") {
  SPTerm l = SPTerm::leaf();
  CHECK(l.T() == 1);
  CHECK(l.F() == 1);
  CHECK(dualize(l).T() == 1);
  SPTerm b = bundle_term(4);
  CHECK(b.T() == 4);
  CHECK(b.F() == 1);
  SPTerm d = dualize(b);
  CHECK(d.T() == 1);
  CHECK(d.F() == 4);
  SPTerm dd = dualize(d);
  CHECK(dd.T() == b.T());
  CHECK(dd.F() == b.F());
  CHECK(dd.dual() == b.dual());
  check_realization(d);
}

TEST_CASE("parallel extension") {
  SPTerm three = bundle_term(3);
  SPTerm four = par_extend(three);
  CHECK(four.T() == 4);
  CHECK(four.F() == 1);
  CHECK(four.leaf_count() == three.leaf_count() + 1);
  // ratio 1/2 becomes 3/2
  SPTerm half = dualize(bundle_term(2));
  CHECK(half.ratio() == Rational(1, 2));
  CHECK(par_extend(half).ratio() == Rational(3, 2));
  for (std::uint64_t k = 1; k <= 6; ++k) {
    SPTerm t = par_extend(SPTerm::leaf(), k);
    CHECK(t.T() == k + 1);
    CHECK(t.F() == 1);
  }
}

TEST_CASE("from continued fractions") {
  SPTerm t3 = from_cf(q({3}));
  CHECK(t3.T() == 3);
  CHECK(t3.F() == 1);
  Multigraph g3 = realize(t3, true);
  CHECK(g3.vertex_count() == 2);
  CHECK(g3.edge_count() == 4);

  SPTerm t = from_cf(q({2, 3}));
  CHECK(t.T() == 7);
  CHECK(t.F() == 3);
  CHECK(realize(t, true).edge_count() == 6);
  check_realization(t);

  SPTerm u = from_cf(q({1, 2, 2}));
  CHECK(u.T() == 7);
  CHECK(u.F() == 5);
  check_realization(u);

  try {
    from_cf(q({2, 0, 1}));
    FAIL("zero quotient accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadQuotient);
  }
}

TEST_CASE("sums of continued fractions") {
  SPTerm a = dualize(from_cf(q({2})));
  SPTerm b = dualize(from_cf(q({3})));
  SPTerm s = sum_terms(a, b);
  CHECK(s.ratio() == Rational(5, 6));
  CHECK(realize(s, true).edge_count() == 6);
  check_realization(s);
  SPTerm one_more = sum_terms(s, dualize(SPTerm::leaf()));
  CHECK(one_more.ratio() == s.ratio() + 1);
  SPTerm other = sum_terms(b, a);
  CHECK(other.T() == s.T());
  CHECK(other.F() == s.F());
}

TEST_CASE("exact tree counts") {
  for (long n : {1L, 2L, 3L, 5L, 12L, 97L, 360L, 1024L}) {
    ExactTreeResult r = exact_tree_graph(BigInt(n));
    CHECK(tau(r.graph) == n);
    CHECK(tau(exact_tree_graph_factored(BigInt(n))) == n);
  }
  ExactTreeResult five = exact_tree_graph(BigInt(5));
  CHECK(five.graph.edge_count() <= 4);
  Multigraph twelve = exact_tree_graph_factored(BigInt(12));
  CHECK(tau(twelve) == 12);
}

TEST_CASE("ratio graphs") {
  for (auto [A, B] : std::vector<std::pair<long, long>>{{7, 5}, {1, 1}, {7, 2}, {2, 7}, {5, 1}, {1, 5}, {6, 4}}) {
    RatioGraphResult r = ratio_graph(BigInt(A), BigInt(B));
    CHECK(tree_ratio(r.graph, r.marked) == make_rational(BigInt(A), BigInt(B)));
    CHECK(r.graph.edge_count() == r.predicted_edges);
    CHECK(r.graph.is_connected());
  }
  CHECK_THROWS_AS(ratio_graph(BigInt(50), BigInt(3), BigInt(10)), Error);
}

TEST_CASE("property: term semantics on random terms") {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<SPTerm> pool{SPTerm::leaf()};
    std::size_t leaves = 1;
    while (leaves < 2 + rng() % 25) {
      SPTerm a = pool[rng() % pool.size()];
      SPTerm b = pool[rng() % pool.size()];
      SPTerm next = SPTerm::leaf();
      switch (rng() % 5) {
        case 0: next = SPTerm::series(a, b); break;
        case 1: next = SPTerm::parallel(a, b); break;
        case 2: next = dualize(a); break;
        case 3: next = par_extend(a, 1 + rng() % 3); break;
        default: next = sum_terms(a, b); break;
      }
      pool.push_back(next);
      leaves = next.leaf_count();
      if (leaves > 40) break;
    }
    SPTerm t = pool.back();
    if (t.leaf_count() > 40) continue;
    check_realization(t);
    // dual realization inverts the ratio
    Multigraph g = realize(t, true);
    Multigraph h = realize(dualize(t), true);
    CHECK(tree_ratio(h, *h.marked()) == 1 / tree_ratio(g, *g.marked()));
  }
}

TEST_CASE("property: continued fraction graphs hit value and edge count") {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<BigInt> qs;
    std::size_t len = 1 + rng() % 5;
    BigInt sum = 0;
    for (std::size_t i = 0; i < len; ++i) {
      qs.emplace_back(static_cast<long>(1 + rng() % 6));
      sum += qs.back();
    }
    SPTerm t = from_cf(qs);
    CHECK(t.ratio() == cf_value(qs));
    CHECK(gcd(t.T(), t.F()) == 1);
    CHECK(t.T() * cf_value(qs).get_den() == cf_value(qs).get_num() * t.F());
    CHECK(BigInt(static_cast<unsigned long>(realize(t, true).edge_count())) == sum + 1);
    check_realization(t);
  }
}

TEST_CASE("property: exact trees and ratio graphs on sampled targets") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 100; ++trial) {
    BigInt n(static_cast<unsigned long>(3 + rng() % 100000));
    ExactTreeResult r = exact_tree_graph(n);
    REQUIRE(tau(r.graph) == n);
    BigInt qsum = 0;
    for (const auto& x : r.quotients) qsum += x;
    CHECK(BigInt(static_cast<unsigned long>(r.graph.edge_count())) <= qsum + 1);
  }
  for (int trial = 0; trial < 100; ++trial) {
    BigInt A(static_cast<unsigned long>(1 + rng() % 1000000));
    BigInt B(static_cast<unsigned long>(1 + rng() % 1000000));
    RatioGraphResult r = ratio_graph(A, B);
    REQUIRE(tree_ratio(r.graph, r.marked) == make_rational(A, B));
    CHECK(r.graph.edge_count() == r.predicted_edges);
  }
}
