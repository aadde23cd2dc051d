#include "sylab/atlas.hpp"

#include <algorithm>
#include <random>

#include "sylab/counting.hpp"
#include "sylab/error.hpp"
#include "sylab/vanishing.hpp"

namespace sylab {

BigInt comp_count(const BinaryMatroid& m, SubsetMask R, long a) {
  long r = static_cast<long>(m.rank());
  if (a < 0 || a > r) return 0;
  CountProfile prof = count_profile(m, ConstraintSpec{R & m.ground(), {}, {}});
  return factorial(static_cast<unsigned>(a)) * factorial(static_cast<unsigned>(r - a)) * prof.count(a);
}

namespace {

// Calls visit on every word compatible with (M, R, a).
template <typename Visit>
void for_each_word(const BinaryMatroid& m, SubsetMask R, long a, Visit&& visit) {
  long r = static_cast<long>(m.rank());
  if (a < 0 || a > r) return;
  for_each_basis(m, [&](SubsetMask b) {
    if (static_cast<long>((b & R).size()) != a) return;
    std::vector<std::size_t> word = b.indices();
    do {
      bool ok = true;
      for (long i = 0; i < r && ok; ++i) ok = R.contains(word[static_cast<std::size_t>(i)]) == (i < a);
      if (ok) visit(word);
    } while (std::next_permutation(word.begin(), word.end()));
  });
}

void check_level(const BinaryMatroid& m, long a) {
  long r = static_cast<long>(m.rank());
  if (r < 2 || a < 1 || a > r - 1) {
    fail(ErrorKind::BadRange, "a = " + std::to_string(a) + " needs 1 <= a <= r-1 with r = " + std::to_string(r) + " >= 2");
  }
}

}  // namespace

BigInt comp_count_by_words(const BinaryMatroid& m, SubsetMask R, long a) {
  unsigned long count = 0;
  for_each_word(m, R, a, [&](const std::vector<std::size_t>&) { ++count; });
  return BigInt(count);
}

IntMatrix build_C_extended(const BinaryMatroid& m, SubsetMask R, long a) {
  std::size_t n = m.size();
  long r = static_cast<long>(m.rank());
  IntMatrix out(n, n);
  if (a < 1 || a > r - 1) return out;
  // Bases of M/{x,y} are the bases of M through x and y with x, y removed.
  std::vector<unsigned long> tally(n * n, 0);
  for_each_basis(m, [&](SubsetMask b) {
    long in_r = static_cast<long>((b & R).size());
    auto elems = b.indices();
    for (auto x : elems) {
      for (auto y : elems) {
        if (x == y) continue;
        long rest = in_r - (R.contains(x) ? 1 : 0) - (R.contains(y) ? 1 : 0);
        if (rest == a - 1) ++tally[x * n + y];
      }
    }
  });
  BigInt scale = factorial(static_cast<unsigned>(a - 1)) * factorial(static_cast<unsigned>(r - a - 1));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (tally[x * n + y] != 0) out(x, y) = scale * tally[x * n + y];
    }
  }
  return out;
}

IntMatrix build_C(const BinaryMatroid& m, SubsetMask R, long a) {
  check_level(m, a);
  return build_C_extended(m, R, a);
}

IntMatrix build_C_by_contraction(const BinaryMatroid& m, SubsetMask R, long a) {
  check_level(m, a);
  std::size_t n = m.size();
  long r = static_cast<long>(m.rank());
  IntMatrix out(n, n);
  BigInt scale = factorial(static_cast<unsigned>(a - 1)) * factorial(static_cast<unsigned>(r - a - 1));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      SubsetMask pair = SubsetMask::of({x, y});
      if (x == y || !m.is_independent(pair)) continue;
      CountProfile prof = count_profile(contract(m, pair), ConstraintSpec{R & m.ground(), {}, {}});
      out(x, y) = scale * prof.count(a - 1);
    }
  }
  return out;
}

IntMatrix build_C_by_words(const BinaryMatroid& m, SubsetMask R, long a) {
  check_level(m, a);
  std::size_t n = m.size();
  std::vector<unsigned long> tally(n * n, 0);
  auto bump = [&](std::size_t x, std::size_t y) {
    ++tally[x * n + y];
    ++tally[y * n + x];
  };
  // x in R, y outside: x γ y at level a.
  for_each_word(m, R, a, [&](const std::vector<std::size_t>& w) {
    if (R.contains(w.front()) && !R.contains(w.back())) bump(w.front(), w.back());
  });
  // both in R: x y γ at level a+1 (ordered pairs, so count each order once).
  for_each_word(m, R, a + 1, [&](const std::vector<std::size_t>& w) {
    if (w.size() >= 2 && R.contains(w[0]) && R.contains(w[1])) ++tally[w[0] * n + w[1]];
  });
  // both outside: γ x y at level a-1.
  for_each_word(m, R, a - 1, [&](const std::vector<std::size_t>& w) {
    std::size_t k = w.size();
    if (k >= 2 && !R.contains(w[k - 2]) && !R.contains(w[k - 1])) ++tally[w[k - 2] * n + w[k - 1]];
  });
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n * n; ++i) out(i / n, i % n) = BigInt(tally[i]);
  return out;
}

Inertia inertia(const RatMatrix& input) {
  if (!input.is_symmetric()) fail(ErrorKind::NotSymmetric, "inertia needs a symmetric matrix");
  RatMatrix a = input;
  std::size_t n = a.rows();
  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;
  Inertia out;
  while (!live.empty()) {
    auto pivot = std::find_if(live.begin(), live.end(), [&](std::size_t i) { return a(i, i) != 0; });
    if (pivot == live.end()) {
      // No diagonal pivot: adding row/column j to row/column i makes
      // a(i,i) = 2 a(i,j), which is nonzero when a(i,j) is.
      bool found = false;
      for (std::size_t p = 0; p < live.size() && !found; ++p) {
        for (std::size_t q = p + 1; q < live.size() && !found; ++q) {
          std::size_t i = live[p];
          std::size_t j = live[q];
          if (a(i, j) == 0) continue;
          for (auto k : live) a(i, k) += a(j, k);
          for (auto k : live) a(k, i) += a(k, j);
          found = true;
        }
      }
      if (!found) {
        out.zero += live.size();
        break;
      }
      continue;
    }
    std::size_t p = *pivot;
    Rational d = a(p, p);
    if (d > 0) {
      ++out.positive;
    } else {
      ++out.negative;
    }
    live.erase(pivot);
    for (auto i : live) {
      if (a(i, p) == 0) continue;
      Rational factor = a(i, p) / d;
      for (auto j : live) a(i, j) -= factor * a(p, j);
    }
  }
  return out;
}

Inertia inertia(const IntMatrix& m) {
  RatMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  }
  return inertia(q);
}

const std::vector<Rational>& atlas_t_sample() {
  static const std::vector<Rational> sample{Rational(0), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)};
  return sample;
}

std::vector<Rational> AtlasContext::f() const {
  std::vector<Rational> v(matroid.size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = R.contains(x) ? 1 : 0;
  return v;
}

std::vector<Rational> AtlasContext::g() const {
  std::vector<Rational> v(matroid.size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = R.contains(x) ? 0 : 1;
  return v;
}

std::vector<Rational> AtlasContext::h() const {
  std::vector<Rational> v(matroid.size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = R.contains(x) ? t : Rational(1 - t);
  return v;
}

std::vector<Rational> AtlasContext::z() const {
  if (!s) fail(ErrorKind::BadParameters, "z = f - s g needs s");
  auto v = f();
  auto w = g();
  for (std::size_t x = 0; x < v.size(); ++x) v[x] -= *s * w[x];
  return v;
}

namespace {

RatMatrix blend(const IntMatrix& c, const IntMatrix& prev, const Rational& t) {
  RatMatrix out(c.rows(), c.cols());
  Rational u = 1 - t;
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) out(i, j) = t * c(i, j) + u * prev(i, j);
  }
  return out;
}

template <typename T>
SubsetMask support(const Matrix<T>& m) {
  SubsetMask out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) {
        out = out.with(i);
        break;
      }
    }
  }
  return out;
}

// Integer test vectors with entries in [-5, 5]; the raw engine output keeps
// them identical across standard libraries.
std::vector<std::vector<BigInt>> test_vectors(std::size_t count, std::size_t dim) {
  std::mt19937_64 rng(kHypSeed);
  std::vector<std::vector<BigInt>> out(count, std::vector<BigInt>(dim));
  for (auto& v : out) {
    for (auto& x : v) x = static_cast<long>(rng() % 11) - 5;
  }
  return out;
}

bool positive_level(const BinaryMatroid& m, SubsetMask R, long a) {
  auto [lo, hi] = nonvanishing_range(m, R);
  return lo <= a && a <= hi;
}

}  // namespace

RatMatrix AtlasContext::blended() const { return blend(C, C_prev, t); }

AtlasContext make_atlas(const BinaryMatroid& m, SubsetMask R, long a, Rational t, std::optional<Rational> s) {
  if (t < 0 || t > 1) fail(ErrorKind::BadParameters, "t = " + to_string(t) + " outside [0, 1]");
  AtlasContext ctx;
  ctx.matroid = m;
  ctx.R = R & m.ground();
  ctx.a = a;
  ctx.r = static_cast<long>(m.rank());
  ctx.C = build_C(m, ctx.R, a);
  ctx.C_prev = build_C_extended(m, ctx.R, a - 1);
  ctx.t = t;
  ctx.s = s;
  return ctx;
}

CfgReport cfg_identities(const AtlasContext& ctx) {
  CountProfile prof = count_profile(ctx.matroid, ConstraintSpec{ctx.R, {}, {}});
  Rational rf = factorial(static_cast<unsigned>(ctx.r));
  auto f = ctx.f();
  auto g = ctx.g();
  CfgReport rep;
  rep.ff = ctx.C.form(f, f) == rf * prof.value(ctx.a + 1);
  rep.fg = ctx.C.form(f, g) == rf * prof.value(ctx.a);
  rep.gg = ctx.C.form(g, g) == rf * prof.value(ctx.a - 1);
  return rep;
}

HyperbolicReport hyperbolic_report(const AtlasContext& ctx) {
  if (!positive_level(ctx.matroid, ctx.R, ctx.a)) fail(ErrorKind::PreconditionUnmet, "P(M,R,a) > 0");
  HyperbolicReport rep;
  std::size_t n = ctx.matroid.size();
  auto vecs = test_vectors(kHypVectors, n);
  for (const auto& t : atlas_t_sample()) {
    Inertia in = inertia(blend(ctx.C, ctx.C_prev, t));
    rep.inertia_by_t.emplace_back(t, in);
    rep.ope = rep.ope && in.positive <= 1;
    // The inequality is homogeneous, so q M_t with t = p/q is an integer stand-in.
    BigInt p = t.get_num();
    BigInt q = t.get_den();
    IntMatrix scaled(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) scaled(i, j) = p * ctx.C(i, j) + (q - p) * ctx.C_prev(i, j);
    }
    for (std::size_t k = 0; k + 1 < vecs.size(); k += 2) {
      const auto& v = vecs[k];
      const auto& w = vecs[k + 1];
      BigInt vw = scaled.form(v, w);
      BigInt vv = scaled.form(v, v);
      BigInt ww = scaled.form(w, w);
      if (ww > 0) {
        ++rep.pairs_tested;
        rep.spot_check = rep.spot_check && vw * vw >= vv * ww;
      }
      if (vv > 0) {
        ++rep.pairs_tested;
        rep.spot_check = rep.spot_check && vw * vw >= vv * ww;
      }
    }
  }
  return rep;
}

bool hyperbolic_check(const AtlasContext& ctx) { return hyperbolic_report(ctx).ok(); }

BatteryReport property_battery(const AtlasContext& ctx) {
  if (ctx.a < 2 || ctx.a > ctx.r - 1) fail(ErrorKind::PreconditionUnmet, "2 <= a <= r-1");
  if (!positive_level(ctx.matroid, ctx.R, ctx.a)) fail(ErrorKind::PreconditionUnmet, "P(M,R,a) > 0");
  if (!positive_level(ctx.matroid, ctx.R, ctx.a - 1)) fail(ErrorKind::PreconditionUnmet, "P(M,R,a-1) > 0");

  const BinaryMatroid& m = ctx.matroid;
  std::size_t n = m.size();
  RatMatrix big = ctx.blended();
  SubsetMask supp = support(big);
  auto h = ctx.h();
  std::vector<IntMatrix> child(n, IntMatrix(n, n));
  for (auto x : m.nonloops().indices()) child[x] = build_C_extended(contract(m, x), ctx.R, ctx.a - 1);

  BatteryReport rep;
  rep.inh = true;
  for (auto x : supp.indices()) {
    for (std::size_t y = 0; y < n && rep.inh; ++y) {
      Rational rhs = 0;
      for (std::size_t z = 0; z < n; ++z) rhs += child[x](y, z) * h[z];
      rep.inh = big(x, y) == rhs;
    }
  }

  rep.t_inv = true;
  auto idx = supp.indices();
  for (auto i : idx) {
    for (auto j : idx) {
      for (auto k : idx) {
        const BigInt& v = child[i](j, k);
        if (v != child[j](k, i) || v != child[k](i, j)) rep.t_inv = false;
      }
    }
  }

  rep.dec_supp = true;
  for (auto i : idx) rep.dec_supp = rep.dec_supp && support(child[i]).subset_of(supp);

  rep.pull_eq = true;
  for (const auto& vi : test_vectors(8, n)) {
    std::vector<Rational> v(vi.begin(), vi.end());
    Rational lhs = 0;
    for (auto i : idx) lhs += h[i] * child[i].form(v, v);
    rep.pull_eq = rep.pull_eq && lhs == big.form(v, v);
  }

  SubsetMask csupp = support(ctx.C);
  rep.support_is_nonloops = csupp == m.nonloops();
  // Connectivity of the support graph of C by a flood fill.
  if (csupp.empty()) {
    rep.irr = false;
  } else {
    SubsetMask reached = SubsetMask::singleton(csupp.first());
    SubsetMask frontier = reached;
    while (!frontier.empty()) {
      SubsetMask next;
      for (auto x : frontier.indices()) {
        for (auto y : csupp.indices()) {
          if (ctx.C(x, y) != 0 && !reached.contains(y)) next = next.with(y);
        }
      }
      reached = reached | next;
      frontier = next;
    }
    rep.irr = reached == csupp;
  }

  rep.h_pos = std::all_of(idx.begin(), idx.end(), [&](std::size_t x) { return h[x] > 0; });
  return rep;
}

KernelReport kernel_equality_check(const AtlasContext& ctx) {
  if (!ctx.s || *ctx.s <= 0) fail(ErrorKind::BadParameters, "kernel check needs s > 0");
  const Rational& s = *ctx.s;
  auto f = ctx.f();
  auto g = ctx.g();
  Rational ff = ctx.C.form(f, f);
  Rational gf = ctx.C.form(g, f);
  Rational gg = ctx.C.form(g, g);
  KernelReport rep;
  rep.s_equ = ff == s * gf && s * gf == s * s * gg;
  auto cz = ctx.C.apply(ctx.z());
  rep.kernel_zero = std::all_of(cz.begin(), cz.end(), [](const Rational& v) { return v == 0; });
  return rep;
}

}  // namespace sylab
