#include "sylab/counting.hpp"

#include <algorithm>
#include <numeric>

#include "sylab/config.hpp"
#include "sylab/error.hpp"

namespace sylab {

long ConstraintSpec::c_total() const { return std::accumulate(c.begin(), c.end(), 0L); }

void validate_spec(const BinaryMatroid& m, const ConstraintSpec& spec, CountMode mode) {
  if (spec.S.size() != spec.c.size()) fail(ErrorKind::BadParameters, "need one count per constraint block");
  SubsetMask ground = m.ground();
  long r = static_cast<long>(m.rank());
  SubsetMask seen = mode == CountMode::Bases ? spec.R : SubsetMask();
  if (!seen.subset_of(ground)) fail(ErrorKind::BadParameters, "R outside the ground set");
  for (std::size_t i = 0; i < spec.k(); ++i) {
    if (!spec.S[i].subset_of(ground)) fail(ErrorKind::BadParameters, "S" + std::to_string(i + 1) + " outside the ground set");
    if (!spec.S[i].disjoint(seen)) {
      fail(ErrorKind::OverlappingConstraints, "S" + std::to_string(i + 1) + " meets an earlier block");
    }
    seen = seen | spec.S[i];
    if (spec.c[i] < 0 || spec.c[i] > r) {
      fail(ErrorKind::BadParameters, "c" + std::to_string(i + 1) + " = " + std::to_string(spec.c[i]) + " outside [0, r]");
    }
  }
}

BigInt CountProfile::count(long a) const {
  if (a < 0 || a >= static_cast<long>(counts.size())) return 0;
  return counts[static_cast<std::size_t>(a)];
}

Rational CountProfile::value(long a) const {
  if (a < 0 || a >= static_cast<long>(normalized.size())) return 0;
  return normalized[static_cast<std::size_t>(a)];
}

BigInt normalizer(const CountProfile& profile, const std::vector<long>& c, long a) {
  long r = static_cast<long>(profile.r);
  if (a < 0 || a > r) return 0;
  if (profile.mode == CountMode::IndependentSets) return binomial(profile.m, a);
  long total = std::accumulate(c.begin(), c.end(), 0L);
  std::vector<long> parts{a};
  parts.insert(parts.end(), c.begin(), c.end());
  parts.push_back(r - a - total);
  return multinomial(r, parts);
}

namespace {

bool matches(SubsetMask set, const ConstraintSpec& spec) {
  for (std::size_t i = 0; i < spec.k(); ++i) {
    if (static_cast<long>((set & spec.S[i]).size()) != spec.c[i]) return false;
  }
  return true;
}

SubsetMask mason_R(const BinaryMatroid& m, const ConstraintSpec& spec) {
  SubsetMask rest = m.ground();
  for (auto s : spec.S) rest = rest - s;
  return rest;
}

}  // namespace

namespace {

CountProfile finish_profile(CountMode mode, std::size_t r, std::size_t n, const ConstraintSpec& spec,
                            const std::vector<unsigned long>& tally) {
  CountProfile out;
  out.mode = mode;
  out.r = r;
  out.m = static_cast<long>(n) - spec.c_total();
  for (long a = 0; a <= static_cast<long>(out.r); ++a) {
    BigInt count(tally[static_cast<std::size_t>(a)]);
    BigInt den = normalizer(out, spec.c, a);
    if (den == 0) {
      if (count != 0) fail(ErrorKind::InvariantViolation, "positive count with zero normalizer at a=" + std::to_string(a));
      out.normalized.emplace_back(0);
    } else {
      out.normalized.push_back(make_rational(count, den));
    }
    out.counts.push_back(std::move(count));
  }
  return out;
}

}  // namespace

CountProfile count_profile(const BinaryMatroid& m, const ConstraintSpec& spec, CountMode mode) {
  validate_spec(m, spec, mode);
  std::size_t r = m.rank();
  std::vector<unsigned long> tally(r + 1, 0);
  if (mode == CountMode::Bases) {
    for_each_basis(m, [&](SubsetMask b) {
      if (matches(b, spec)) ++tally[(b & spec.R).size()];
    });
  } else {
    SubsetMask R = mason_R(m, spec);
    for_each_independent(m, [&](SubsetMask s) {
      if (matches(s, spec)) ++tally[(s & R).size()];
    });
  }
  return finish_profile(mode, r, m.size(), spec, tally);
}

CountProfile profile_from_sets(const std::vector<SubsetMask>& sets, CountMode mode, std::size_t r, std::size_t n,
                               const ConstraintSpec& spec) {
  SubsetMask R = spec.R;
  if (mode == CountMode::IndependentSets) {
    R = SubsetMask::full(n);
    for (auto s : spec.S) R = R - s;
  }
  std::vector<unsigned long> tally(r + 1, 0);
  for (auto s : sets) {
    if (!matches(s, spec)) continue;
    std::size_t a = (s & R).size();
    if (a > r) fail(ErrorKind::BadParameters, "set larger than the stated rank");
    ++tally[a];
  }
  return finish_profile(mode, r, n, spec, tally);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Strict: return "strict";
    case Verdict::Equal: return "equal";
    case Verdict::Vanishing: return "vanishing";
  }
  return "unknown";
}

namespace {

Verdict compare(const Rational& lhs, const Rational& rhs, const std::string& what) {
  int cmp = ::cmp(lhs, rhs);
  if (cmp > 0) return Verdict::Strict;
  if (cmp == 0) return Verdict::Equal;
  fail(ErrorKind::InvariantViolation, what + " violated: " + to_string(lhs) + " < " + to_string(rhs));
}

}  // namespace

Verdict sy_verdict(const CountProfile& profile, long a) {
  long r = static_cast<long>(profile.r);
  if (a < 1 || a > r - 1) fail(ErrorKind::BadRange, "a = " + std::to_string(a) + " outside [1, r-1] with r = " + std::to_string(r));
  Rational p = profile.value(a);
  if (p == 0) return Verdict::Vanishing;
  return compare(p * p, profile.value(a + 1) * profile.value(a - 1), "log-concavity at a=" + std::to_string(a));
}

Verdict sy_verdict(const BinaryMatroid& m, const ConstraintSpec& spec, long a) {
  return sy_verdict(count_profile(m, spec), a);
}

Verdict gen_mason_verdict(const CountProfile& profile, long a) {
  if (profile.mode != CountMode::IndependentSets) fail(ErrorKind::BadParameters, "needs an independent-set profile");
  long r = static_cast<long>(profile.r);
  long hi = std::min(r - 1, profile.m - 1);
  if (a < 1 || a > hi) fail(ErrorKind::BadRange, "a = " + std::to_string(a) + " outside [1, min(r-1, m-1)]");
  BigInt i = profile.count(a);
  if (i == 0) return Verdict::Vanishing;
  Rational factor = Rational(a + 1, a) * Rational(profile.m - a + 1, profile.m - a);
  Rational rhs = factor * Rational(profile.count(a + 1) * profile.count(a - 1));
  return compare(Rational(i * i), rhs, "ultra-log-concavity at a=" + std::to_string(a));
}

Verdict gen_mason_verdict(const BinaryMatroid& m, const ConstraintSpec& spec, long a) {
  return gen_mason_verdict(count_profile(m, spec, CountMode::IndependentSets), a);
}

BigInt count_bases_avoiding(const BinaryMatroid& m, std::size_t x) {
  unsigned long count = 0;
  for_each_basis(m, [&](SubsetMask b) {
    if (!b.contains(x)) ++count;
  });
  return BigInt(count);
}

Rational basis_ratio(const BinaryMatroid& m, std::size_t x) {
  if (x >= m.size()) fail(ErrorKind::BadParameters, "element " + std::to_string(x) + " out of range");
  if (m.is_loop(x)) fail(ErrorKind::LoopArgument, "element " + std::to_string(x) + " is a loop");
  Rational rho = make_rational(count_bases_avoiding(m, x), count_bases(contract(m, x)));
  if (rho > static_cast<long>(m.size())) {
    fail(ErrorKind::InvariantViolation, "basis ratio " + to_string(rho) + " exceeds n = " + std::to_string(m.size()));
  }
  return rho;
}

BigInt count_via_ratio_product(const BinaryMatroid& m) {
  Rational product = 1;
  BinaryMatroid current = m;
  for (auto x : greedy_basis(m).indices()) {
    product *= 1 + basis_ratio(current, x);
    current = contract(current, x);
  }
  if (product.get_den() != 1) fail(ErrorKind::InvariantViolation, "ratio product is not an integer");
  return product.get_num();
}

std::vector<BigInt> count_truncated(const BinaryMatroid& m, const ConstraintSpec& spec, std::size_t size) {
  validate_spec(m, spec);
  std::vector<unsigned long> tally(size + 1, 0);
  for_each_independent(m, [&](SubsetMask s) {
    if (s.size() == size && matches(s, spec)) ++tally[(s & spec.R).size()];
  });
  return {tally.begin(), tally.end()};
}

bool mason_substitution_holds(const BinaryMatroid& m, const ConstraintSpec& spec) {
  CountProfile direct = count_profile(m, spec, CountMode::IndependentSets);
  long free_rank = direct.m;
  if (free_rank < 0) return std::all_of(direct.counts.begin(), direct.counts.end(), [](const BigInt& v) { return v == 0; });
  BinaryMatroid sum = direct_sum(m, free_matroid(static_cast<std::size_t>(free_rank)));
  ConstraintSpec lifted = spec;
  lifted.R = mason_R(m, spec);
  std::vector<BigInt> via = count_truncated(sum, lifted, m.size());
  for (long a = 0; a < static_cast<long>(via.size()); ++a) {
    if (via[static_cast<std::size_t>(a)] != direct.count(a) * binomial(free_rank, a)) return false;
  }
  for (long a = static_cast<long>(via.size()); a <= static_cast<long>(direct.r); ++a) {
    if (direct.count(a) != 0) return false;
  }
  return true;
}

}  // namespace sylab
