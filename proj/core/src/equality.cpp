#include "sylab/equality.hpp"

#include "sylab/error.hpp"
#include "sylab/vanishing.hpp"

namespace sylab {

namespace {

// Shared bookkeeping for the class-ratio condition: every class must meet R
// and its complement, and all ratios must agree.
struct RatioTracker {
  SubsetMask R;
  std::optional<Rational> s;

  bool accept(SubsetMask cls) {
    std::size_t in = (cls & R).size();
    std::size_t out = (cls - R).size();
    if (in == 0 || out == 0) return false;
    Rational q(static_cast<long>(in), static_cast<long>(out));
    q.canonicalize();
    if (!s) {
      s = q;
      return true;
    }
    return *s == q;
  }
};

}  // namespace

EqualityVerdict equality_criterion(const BinaryMatroid& m, SubsetMask R, long a) {
  long r = static_cast<long>(m.rank());
  if (r < 2 || a < 1 || a > r - 1) {
    fail(ErrorKind::BadRange, "a = " + std::to_string(a) + " needs 1 <= a <= r-1 with r = " + std::to_string(r) + " >= 2");
  }
  EqualityVerdict verdict;
  auto [lo, hi] = nonvanishing_range(m, R);
  if (a < lo || a > hi) return verdict;

  RatioTracker tracker{R & m.ground(), std::nullopt};
  bool violated = false;
  auto target = static_cast<std::size_t>(r - 2);
  auto in_r = static_cast<std::size_t>(a - 1);
  for_each_independent(m, [&](SubsetMask A) {
    if (violated || A.size() != target || (A & R).size() != in_r) return;
    for (auto cls : contract(m, A).parallel_classes()) {
      if (!tracker.accept(cls)) {
        violated = true;
        verdict.kind = EqualityVerdict::Kind::Strict;
        verdict.A = A;
        verdict.x = cls.first();
        return;
      }
    }
  });
  if (!violated) {
    verdict.kind = EqualityVerdict::Kind::Equal;
    verdict.s = *tracker.s;
  }
  return verdict;
}

TotalEqualityReport total_equality_report(const BinaryMatroid& m, SubsetMask R) {
  TotalEqualityReport rep;
  CountProfile prof = count_profile(m, ConstraintSpec{R & m.ground(), {}, {}});
  long r = static_cast<long>(prof.r);
  rep.loopless = m.loops().empty();
  rep.p0_positive = prof.value(0) > 0;
  rep.pr_positive = prof.value(r) > 0;

  Rational lhs = 1;
  Rational rhs = 1;
  for (long i = 0; i < r; ++i) lhs *= prof.value(1);
  for (long i = 0; i + 1 < r; ++i) rhs *= prof.value(0);
  rhs *= prof.value(r);
  rep.power_identity = lhs == rhs;

  rep.equal_everywhere = true;
  for (long a = 1; a <= r - 1; ++a) {
    Rational p = prof.value(a);
    bool eq = p * p == prof.value(a + 1) * prof.value(a - 1);
    rep.equal_everywhere = rep.equal_everywhere && eq;
    rep.equal_somewhere = rep.equal_somewhere || eq;
  }

  RatioTracker tracker{R & m.ground(), std::nullopt};
  rep.class_ratio = true;
  for (auto cls : m.parallel_classes()) {
    if (!tracker.accept(cls)) {
      rep.class_ratio = false;
      break;
    }
  }
  if (rep.class_ratio && tracker.s) rep.s = tracker.s;
  if (!tracker.s) rep.class_ratio = false;
  return rep;
}

RatioChain ratio_chain(const BinaryMatroid& m, SubsetMask R) {
  CountProfile prof = count_profile(m, ConstraintSpec{R & m.ground(), {}, {}});
  RatioChain chain;
  bool started = false;
  for (long a = 0; a < static_cast<long>(prof.r); ++a) {
    if (prof.value(a) > 0 && prof.value(a + 1) > 0) {
      if (!started) chain.first = a;
      started = true;
      chain.ratios.push_back(prof.value(a + 1) / prof.value(a));
    }
  }
  return chain;
}

Fixture build_double_matroid(const BinaryMatroid& m) {
  if (!m.loops().empty()) fail(ErrorKind::BadParameters, "double matroid needs a loopless input");
  if (2 * m.size() > SubsetMask::kMaxElements) fail(ErrorKind::BadParameters, "doubled ground set exceeds 64");
  std::vector<std::uint64_t> cols = m.columns();
  cols.insert(cols.end(), m.columns().begin(), m.columns().end());
  std::vector<std::string> labels = m.labels();
  for (const auto& l : m.labels()) labels.push_back(l + "'");
  return {BinaryMatroid(m.dim(), std::move(cols), std::move(labels)), SubsetMask::full(m.size())};
}

Fixture build_linear_example(std::size_t r) {
  if (r < 3 || r > 6) fail(ErrorKind::BadParameters, "linear example needs 3 <= r <= 6");
  std::vector<std::uint64_t> cols;
  std::size_t total = std::size_t{1} << r;
  for (std::uint64_t v = 0; v < total; ++v) cols.push_back(v);
  // Vectors with leading coordinate 0 are exactly the first half.
  return {BinaryMatroid(r, std::move(cols)), SubsetMask::full(total / 2)};
}

Fixture build_combination_example(std::size_t r, std::size_t t) {
  if (r < 3) fail(ErrorKind::BadParameters, "combination example needs r >= 3");
  std::size_t half = r >= 7 ? 64 : std::size_t{1} << (r - 1);
  if (t < 1 || t > half) fail(ErrorKind::BadParameters, "t must lie in [1, 2^(r-1)]");
  std::size_t n = (half - 1) + t + half + t;
  if (r > 6 || n > SubsetMask::kMaxElements) fail(ErrorKind::BadParameters, "combination example exceeds 64 elements");
  std::vector<std::uint64_t> cols;
  std::vector<std::string> labels;
  for (std::uint64_t v = 1; v < half; ++v) {
    cols.push_back(v);
    labels.push_back("r0_" + std::to_string(v));
  }
  for (std::uint64_t j = 0; j < t; ++j) {
    cols.push_back(half + j);
    labels.push_back("r1_" + std::to_string(half + j));
  }
  for (std::uint64_t v = half; v < 2 * half; ++v) {
    cols.push_back(v);
    labels.push_back("s0_" + std::to_string(v));
  }
  for (std::uint64_t j = 0; j < t; ++j) {
    cols.push_back(half + j);
    labels.push_back("s1_" + std::to_string(half + j));
  }
  return {BinaryMatroid(r, std::move(cols), std::move(labels)), SubsetMask::full(half - 1 + t)};
}

}  // namespace sylab
