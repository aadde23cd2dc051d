#include "sylab/treesmith.hpp"

#include <random>

#include "sylab/cfrac.hpp"
#include "sylab/error.hpp"

namespace sylab {

struct SPTerm::Node {
  Kind kind = Kind::Leaf;
  std::optional<SPTerm> a;  // left child, or the extended child
  std::optional<SPTerm> b;
  std::uint64_t k = 0;      // Extend only
  BigInt T;
  BigInt F;
  std::uint64_t leaves = 0;
};

SPTerm SPTerm::leaf() {
  static const auto node = [] {
    auto n = std::make_shared<Node>();
    n->T = 1;
    n->F = 1;
    n->leaves = 1;
    return std::shared_ptr<const Node>(n);
  }();
  return SPTerm(node, false);
}

SPTerm SPTerm::series(const SPTerm& left, const SPTerm& right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Ser;
  n->T = left.T() * right.T();
  n->F = left.F() * right.T() + left.T() * right.F();
  n->leaves = left.leaf_count() + right.leaf_count();
  n->a = left;
  n->b = right;
  return SPTerm(n, false);
}

SPTerm SPTerm::parallel(const SPTerm& left, const SPTerm& right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Par;
  n->T = left.T() * right.F() + left.F() * right.T();
  n->F = left.F() * right.F();
  n->leaves = left.leaf_count() + right.leaf_count();
  n->a = left;
  n->b = right;
  return SPTerm(n, false);
}

SPTerm::Kind SPTerm::kind() const {
  switch (node_->kind) {
    case Kind::Ser: return dual_ ? Kind::Par : Kind::Ser;
    case Kind::Par: return dual_ ? Kind::Ser : Kind::Par;
    default: return node_->kind;
  }
}

const BigInt& SPTerm::T() const { return dual_ ? node_->F : node_->T; }
const BigInt& SPTerm::F() const { return dual_ ? node_->T : node_->F; }
std::uint64_t SPTerm::leaf_count() const { return node_->leaves; }
std::uint64_t SPTerm::extend_count() const { return node_->kind == Kind::Extend ? node_->k : 0; }

SPTerm SPTerm::left() const {
  if (!node_->a) fail(ErrorKind::BadParameters, "leaf has no children");
  return SPTerm(node_->a->node_, node_->a->dual_ != dual_);
}

SPTerm SPTerm::right() const {
  if (!node_->b) fail(ErrorKind::BadParameters, "node has no right child");
  return SPTerm(node_->b->node_, node_->b->dual_ != dual_);
}

SPTerm dualize(const SPTerm& t) { return SPTerm(t.node_, !t.dual_); }

SPTerm par_extend(const SPTerm& t, std::uint64_t times) {
  if (times == 0) return t;
  auto n = std::make_shared<SPTerm::Node>();
  n->kind = SPTerm::Kind::Extend;
  if (t.node_->kind == SPTerm::Kind::Extend && !t.dual_) {
    n->a = *t.node_->a;
    n->k = t.node_->k + times;
  } else {
    n->a = t;
    n->k = times;
  }
  n->T = t.T() + times * t.F();
  n->F = t.F();
  n->leaves = t.leaf_count() + times;
  return SPTerm(n, false);
}

SPTerm from_cf(const std::vector<BigInt>& quotients) {
  if (quotients.empty()) fail(ErrorKind::BadQuotient, "empty quotient list");
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    if (quotients[i] < 1) fail(ErrorKind::BadQuotient, "quotient " + std::to_string(i) + " is below 1");
    if (!quotients[i].fits_ulong_p()) fail(ErrorKind::BadQuotient, "quotient " + std::to_string(i) + " is too large");
  }
  // Built from the back: [a_s] is a bundle of a_s edges, and each earlier
  // quotient dualizes and then adds a_i parallel edges.
  SPTerm term = par_extend(SPTerm::leaf(), quotients.back().get_ui() - 1);
  for (std::size_t i = quotients.size() - 1; i-- > 0;) term = par_extend(dualize(term), quotients[i].get_ui());
  return term;
}

SPTerm sum_terms(const SPTerm& a, const SPTerm& b) { return SPTerm::parallel(a, b); }

namespace {

void realize_into(const SPTerm& t, std::size_t s, std::size_t u, Multigraph& g) {
  switch (t.kind()) {
    case SPTerm::Kind::Leaf:
      g.add_edge(s, u);
      return;
    case SPTerm::Kind::Ser: {
      std::size_t mid = g.add_vertex();
      realize_into(t.left(), s, mid, g);
      realize_into(t.right(), mid, u, g);
      return;
    }
    case SPTerm::Kind::Par:
      realize_into(t.left(), s, u, g);
      realize_into(t.right(), s, u, g);
      return;
    case SPTerm::Kind::Extend: {
      std::uint64_t k = t.extend_count();
      if (!t.extend_is_series()) {
        for (std::uint64_t i = 0; i < k; ++i) g.add_edge(s, u);
        realize_into(t.left(), s, u, g);
      } else {
        // Dual of k parallel edges is a path of k edges in series.
        std::size_t cur = s;
        for (std::uint64_t i = 0; i < k; ++i) {
          std::size_t next = g.add_vertex();
          g.add_edge(cur, next);
          cur = next;
        }
        realize_into(t.left(), cur, u, g);
      }
      return;
    }
  }
}

std::uint64_t to_u64(const BigInt& x, const char* what) {
  if (x < 0 || !x.fits_ulong_p() || sizeof(unsigned long) < sizeof(std::uint64_t)) {
    fail(ErrorKind::BadParameters, std::string(what) + " must lie in [0, 2^64)");
  }
  return x.get_ui();
}

}  // namespace

Multigraph realize(const SPTerm& t, bool with_marked) {
  Multigraph g(2);
  realize_into(t, 0, 1, g);
  if (with_marked) g.set_marked(g.add_edge(0, 1));
  return g;
}

ExactTreeResult exact_tree_graph(const BigInt& N) {
  if (N < 1) fail(ErrorKind::BadParameters, "spanning-tree target must be positive");
  ExactTreeResult out;
  if (N == 1) {
    out.graph = Multigraph(1);
    out.d = 1;
    return out;
  }
  std::uint64_t n = to_u64(N, "spanning-tree target");
  std::uint64_t best_d = 1;
  std::uint64_t best_s = n;
  auto consider = [&](std::uint64_t d) {
    if (d < 1 || d >= n) return;
    std::uint64_t g = 0;
    std::uint64_t s = quotient_sum_u64(n, d, &g);
    if (g == 1 && (s < best_s || (s == best_s && d < best_d))) {
      best_s = s;
      best_d = d;
    }
  };
  if (n <= kExactTreeExhaustiveLimit) {
    for (std::uint64_t d = 1; d < n; ++d) consider(d);
  } else {
    // Ratios near the golden ratio tend to have all-small quotients.
    auto centre = static_cast<std::uint64_t>(static_cast<double>(n) / 1.6180339887498949);
    for (std::uint64_t off = 0; off <= 1000; ++off) {
      consider(centre + off);
      if (off <= centre) consider(centre - off);
    }
    std::mt19937_64 rng(kNtdSeed ^ n);
    for (std::uint64_t i = 0; i < kExactTreeSamples; ++i) consider(1 + rng() % (n - 1));
  }
  out.d = BigInt(static_cast<unsigned long>(best_d));
  out.quotients = cf_expand(N, out.d).quotients;
  out.graph = realize(from_cf(out.quotients), false);
  return out;
}

Multigraph exact_tree_graph_factored(const BigInt& N) {
  std::uint64_t n = to_u64(N, "spanning-tree target");
  if (n < 1) fail(ErrorKind::BadParameters, "spanning-tree target must be positive");
  Multigraph g(1);
  auto attach = [&](std::uint64_t p) {
    g = wedge(g, exact_tree_graph(BigInt(static_cast<unsigned long>(p))).graph, 0, 0);
  };
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      attach(p);
      n /= p;
    }
  }
  if (n > 1) attach(n);
  return g;
}

namespace {

struct RatioTerm {
  SPTerm term;
  std::optional<std::uint64_t> m;
  std::uint64_t predicted = 0;  // leaves, marked edge not included
};

RatioTerm ratio_term(const BigInt& A, const BigInt& B) {
  if (B == 1) {
    std::uint64_t a = to_u64(A, "ratio numerator");
    return {par_extend(SPTerm::leaf(), a - 1), std::nullopt, a};
  }
  if (A < B) {
    RatioTerm inv = ratio_term(B, A);
    inv.term = dualize(inv.term);
    return inv;
  }
  BigInt q = A / B;
  BigInt a1 = A - (q - 1) * B;  // in (B, 2B) since gcd(A, B) = 1 and B >= 2
  NtdResult ntd = ntd_search(a1, B);
  BigInt m(static_cast<unsigned long>(ntd.m));
  CFExpansion first = cf_expand(a1, m);
  CFExpansion second = cf_expand(a1, B - m);
  SPTerm sum = sum_terms(dualize(from_cf(first.quotients)), dualize(from_cf(second.quotients)));
  std::uint64_t extra = to_u64(q - 1, "integer part");
  RatioTerm out{par_extend(dualize(sum), extra), ntd.m, 0};
  out.predicted = to_u64(first.qsum + second.qsum, "quotient sum") + extra;
  return out;
}

}  // namespace

RatioGraphResult ratio_graph(const BigInt& A, const BigInt& B, std::optional<BigInt> n_bound) {
  if (A < 1 || B < 1) fail(ErrorKind::BadParameters, "ratio needs positive A and B");
  if (n_bound && (A > *n_bound || B > *n_bound)) fail(ErrorKind::BadParameters, "A and B must not exceed the bound");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
  RatioTerm built = ratio_term(A / g, B / g);
  RatioGraphResult out;
  out.graph = realize(built.term, true);
  out.marked = *out.graph.marked();
  out.m = built.m;
  out.predicted_edges = built.predicted + 1;
  return out;
}

}  // namespace sylab
