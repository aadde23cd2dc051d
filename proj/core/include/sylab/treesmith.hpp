#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "sylab/bigint.hpp"
#include "sylab/multigraph.hpp"

namespace sylab {

// Two-terminal series-parallel network. T counts spanning trees and F counts
// spanning 2-forests separating the terminals. Nodes are shared and carry a
// duality bit, so dualize is O(1); the dual swaps series with parallel and
// T with F.
class SPTerm {
 public:
  enum class Kind { Leaf, Ser, Par, Extend };

  static SPTerm leaf();
  static SPTerm series(const SPTerm& left, const SPTerm& right);
  static SPTerm parallel(const SPTerm& left, const SPTerm& right);

  // Kind as seen through the duality bit. The dual of Extend is still
  // reported as Extend; see extend_is_series().
  Kind kind() const;
  bool dual() const { return dual_; }
  bool extend_is_series() const { return kind() == Kind::Extend && dual_; }

  const BigInt& T() const;
  const BigInt& F() const;
  Rational ratio() const { return make_rational(T(), F()); }

  // Edges of the realized network (the marked edge not included).
  std::uint64_t leaf_count() const;

  // Children with the duality bit pushed down. Leaf has none; Extend has one
  // child plus extend_count() extra leaves.
  SPTerm left() const;
  SPTerm right() const;
  std::uint64_t extend_count() const;

  friend SPTerm dualize(const SPTerm& t);
  friend SPTerm par_extend(const SPTerm& t, std::uint64_t times);

 private:
  struct Node;
  SPTerm(std::shared_ptr<const Node> node, bool dual) : node_(std::move(node)), dual_(dual) {}
  std::shared_ptr<const Node> node_;
  bool dual_ = false;
};

SPTerm dualize(const SPTerm& t);

// Puts `times` new edges in parallel with t: (T, F) -> (T + times F, F).
// Consecutive calls share one node, so long chains stay shallow.
SPTerm par_extend(const SPTerm& t, std::uint64_t times = 1);

// Network for [a0; a1, ..., as]; T/F is the value in lowest terms and the
// realized graph with its marked edge has sum(a) + 1 edges. Throws
// BadQuotient if a quotient is below 1.
SPTerm from_cf(const std::vector<BigInt>& quotients);

// Parallel composition: the ratios add.
SPTerm sum_terms(const SPTerm& a, const SPTerm& b);

// Terminals are vertices 0 and 1. With with_marked the marked edge joins
// them and is the last edge added.
Multigraph realize(const SPTerm& t, bool with_marked);

// Graph with exactly N spanning trees from a single continued fraction N/d,
// d coprime to N chosen to keep the quotient sum small (every d when
// N <= exhaustive_limit, otherwise sampled).
inline constexpr std::uint64_t kExactTreeExhaustiveLimit = 100000;
inline constexpr std::uint64_t kExactTreeSamples = 20000;

struct ExactTreeResult {
  Multigraph graph;
  BigInt d;
  std::vector<BigInt> quotients;
};
ExactTreeResult exact_tree_graph(const BigInt& N);

// Per-prime graphs wedged at a common vertex. Cross-check only.
Multigraph exact_tree_graph_factored(const BigInt& N);

struct RatioGraphResult {
  Multigraph graph;
  std::size_t marked = 0;
  std::optional<std::uint64_t> m;  // the split used when ntd_search ran
  std::uint64_t predicted_edges = 0;
};

// Graph with tree_ratio(G, marked) = A/B. The ratio is reduced first. With
// n_bound, A and B must not exceed it (BadParameters).
RatioGraphResult ratio_graph(const BigInt& A, const BigInt& B, std::optional<BigInt> n_bound = std::nullopt);

}  // namespace sylab
