#include "sylab/reductions.hpp"

#include "sylab/error.hpp"

namespace sylab {

namespace {

void require_nonloop(const BinaryMatroid& m, std::size_t x) {
  if (x >= m.size()) fail(ErrorKind::BadParameters, "element " + std::to_string(x) + " out of range");
  if (m.is_loop(x)) fail(ErrorKind::LoopArgument, "element " + std::to_string(x) + " is a loop");
}

}  // namespace

SYInstance cdc_instance(const BinaryMatroid& m, std::size_t x, std::size_t y) {
  require_nonloop(m, x);
  require_nonloop(m, y);
  if (!m.is_independent(SubsetMask::of({x, y})) || x == y) {
    fail(ErrorKind::ParallelPair, "elements " + std::to_string(x) + " and " + std::to_string(y) + " are parallel");
  }
  if (m.dim() + 1 > BinaryMatroid::kMaxDim || m.size() + 2 > SubsetMask::kMaxElements) {
    fail(ErrorKind::BadParameters, "instance would exceed 64 coordinates or elements");
  }
  std::vector<std::uint64_t> cols;
  for (auto c : m.columns()) cols.push_back(c << 1);
  cols.push_back(1);
  cols.push_back(1);
  std::vector<std::string> labels = m.labels();
  labels.emplace_back("u");
  labels.emplace_back("v");
  std::size_t n = m.size();
  SYInstance inst;
  inst.matroid = BinaryMatroid(m.dim() + 1, std::move(cols), std::move(labels), m.deleted());
  inst.spec.R = SubsetMask::of({x, n});
  inst.spec.S = {m.ground().without(x).without(y)};
  inst.spec.c = {static_cast<long>(m.rank()) - 1};
  inst.a = 1;
  return inst;
}

BigInt count_contract_delete(const BinaryMatroid& m, std::size_t x, std::size_t y) {
  unsigned long count = 0;
  for_each_basis(contract(m, x), [&](SubsetMask b) {
    if (!b.contains(y)) ++count;
  });
  return BigInt(count);
}

CdcIdentities check_cdc(const BinaryMatroid& m, std::size_t x, std::size_t y) {
  SYInstance inst = cdc_instance(m, x, y);
  CountProfile prof = count_profile(inst.matroid, inst.spec);
  CdcIdentities out;
  out.b_plus = prof.count(2);
  out.b_zero = prof.count(1);
  out.b_minus = prof.count(0);
  out.direct_plus = count_contract_delete(m, x, y);
  out.direct_minus = count_contract_delete(m, y, x);
  out.counts_match = out.b_plus == out.direct_plus && out.b_minus == out.direct_minus &&
                     out.b_zero == out.b_plus + out.b_minus;
  long r = static_cast<long>(m.rank());
  Rational gap = prof.value(1) * prof.value(1) - prof.value(2) * prof.value(0);
  BigInt diff = out.direct_plus - out.direct_minus;
  out.gap_formula = gap == make_rational(diff * diff, BigInt(r * r * (r + 1) * (r + 1)));
  out.verdict = sy_verdict(prof, inst.a);
  out.in_equality_language = gap == 0;
  out.coincidence = out.direct_plus == out.direct_minus;
  return out;
}

CdcrInstance cdcr_to_cdc(const BinaryMatroid& m, std::size_t x, const BinaryMatroid& n, std::size_t y) {
  require_nonloop(m, x);
  require_nonloop(n, y);
  return {direct_sum(m, n), x, m.size() + y};
}

SYInstance pad_k(const SYInstance& inst, std::size_t k) {
  if (k < inst.spec.k()) fail(ErrorKind::BadParameters, "cannot pad to a smaller arity");
  SYInstance out = inst;
  while (out.spec.k() < k) {
    out.spec.S.emplace_back();
    out.spec.c.push_back(0);
  }
  return out;
}

}  // namespace sylab
