#include "sylab/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "json.hpp"
#include "sylab/atlas.hpp"
#include "sylab/cfrac.hpp"
#include "sylab/config.hpp"
#include "sylab/equality.hpp"
#include "sylab/error.hpp"
#include "sylab/reductions.hpp"
#include "sylab/text_io.hpp"
#include "sylab/treesmith.hpp"
#include "sylab/vanishing.hpp"

namespace sylab {

using json = nlohmann::ordered_json;

namespace {

// Report order. Every name a family records must appear here.
const std::vector<std::pair<int, std::string>>& check_table() {
  static const std::vector<std::pair<int, std::string>> table = {
      {1, "sy-inequality"},
      {1, "profile-enumeration"},
      {2, "equality-oracle"},
      {2, "equality-constant"},
      {2, "equality-witness"},
      {2, "equality-vanishing"},
      {3, "feasible-iff-witness"},
      {3, "feasible-vs-oracle"},
      {3, "witness-valid"},
      {3, "nonvanishing-range"},
      {4, "total-equivalence"},
      {4, "combination-fixture"},
      {4, "double-fixture"},
      {4, "linear-fixture"},
      {5, "atlas-ope"},
      {5, "atlas-hyp-spot"},
      {5, "atlas-cfg"},
      {5, "atlas-support"},
      {5, "atlas-battery"},
      {5, "atlas-center"},
      {5, "atlas-kernel"},
      {5, "atlas-kernel-equal"},
      {5, "atlas-equ-base"},
      {5, "atlas-tran"},
      {6, "cf-realization"},
      {6, "sp-semantics"},
      {6, "duality"},
      {6, "cf-sum"},
      {6, "exact-tree-range"},
      {6, "exact-tree-factored"},
      {6, "exact-tree-random"},
      {6, "ratio-graph"},
      {7, "cdc-identities"},
      {7, "cdc-direct-oracle"},
      {7, "cdc-equivalence"},
      {7, "cdcr-coincidence"},
      {7, "cdcr-products"},
      {7, "pad-profile"},
      {7, "pad-verdict"},
      {7, "ratio-product"},
      {7, "deletion-contraction"},
      {7, "ratio-bound"},
      {8, "gen-mason"},
      {8, "mason-substitution"},
  };
  return table;
}

int criterion_of(const std::string& name) {
  for (const auto& [c, n] : check_table()) {
    if (n == name) return c;
  }
  fail(ErrorKind::InvariantViolation, "unregistered check '" + name + "'");
}

struct Probe {
  Probe() = default;
  explicit Probe(ConstraintSpec s, long level = 0) : spec(std::move(s)), a(level) {}

  ConstraintSpec spec;
  long a = 0;
  std::optional<std::size_t> x;
  std::optional<std::size_t> y;
  const BinaryMatroid* other = nullptr;
};

json mask_json(SubsetMask s) {
  json out = json::array();
  for (auto i : s.indices()) out.push_back(i);
  return out;
}

json probe_json(const std::string& family, const std::string& key, const BinaryMatroid& m, const Probe& p) {
  json j;
  j["family"] = family;
  j["instance"] = key;
  j["matroid"] = emit_matroid(m);
  j["R"] = mask_json(p.spec.R);
  json S = json::array();
  for (auto s : p.spec.S) S.push_back(mask_json(s));
  j["S"] = S;
  j["c"] = p.spec.c;
  j["a"] = p.a;
  if (p.x) j["x"] = *p.x;
  if (p.y) j["y"] = *p.y;
  if (p.other) j["other"] = emit_matroid(*p.other);
  return j;
}

class Sink {
 public:
  virtual ~Sink() = default;
  virtual void record(const std::string& name, bool ok, const std::string& detail) = 0;
  virtual void tally(const std::string& name, const std::string& what) = 0;
  void note(const std::string& name, const std::string& key, const std::string& value) { notes[name][key] = value; }
  std::map<std::string, std::map<std::string, std::string>> notes;
};

class Recorder : public Sink {
 public:
  void set_context(const std::string* family, const Prepared* prepared, const Probe* probe) {
    family_ = family;
    prepared_ = prepared;
    probe_ = probe;
  }

  void record(const std::string& name, bool ok, const std::string& detail) override {
    CheckResult& r = slot(name);
    ++r.instances;
    if (ok) return;
    ++r.violations;
    if (r.counterexamples.size() >= kMaxDumps) return;
    json j;
    if (prepared_ != nullptr && probe_ != nullptr) {
      j = probe_json(*family_, prepared_->key, prepared_->matroid, *probe_);
    }
    j["check"] = name;
    j["detail"] = detail;
    r.counterexamples.push_back(j.dump());
  }

  void tally(const std::string& name, const std::string& what) override { ++slot(name).tallies[what]; }

  CheckResult& slot(const std::string& name) {
    auto it = results.find(name);
    if (it == results.end()) {
      CheckResult fresh;
      fresh.criterion = criterion_of(name);
      fresh.name = name;
      it = results.emplace(name, std::move(fresh)).first;
    }
    return it->second;
  }

  std::map<std::string, CheckResult> results;

 private:
  const std::string* family_ = nullptr;
  const Prepared* prepared_ = nullptr;
  const Probe* probe_ = nullptr;
};

std::string str(const Rational& q) { return to_string(q); }

// ---------------------------------------------------------------- families

void fam_sy(const Prepared& p, const Probe& pr, Sink& sink) {
  long r = static_cast<long>(p.r);
  CountProfile prof = profile_from_sets(p.bases, CountMode::Bases, p.r, p.matroid.size(), pr.spec);
  std::string k = "k" + std::to_string(pr.spec.k()) + " ";
  for (long a = 1; a <= r - 1; ++a) {
    try {
      Verdict v = sy_verdict(prof, a);
      sink.tally("sy-inequality", k + std::string(to_string(v)));
      sink.record("sy-inequality", true, "");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvariantViolation) throw;
      sink.record("sy-inequality", false, "a=" + std::to_string(a) + ": " + e.what());
    }
  }
}

void fam_enum(const Prepared& p, const Probe& pr, Sink& sink) {
  CountProfile direct = count_profile(p.matroid, pr.spec);
  CountProfile cached = profile_from_sets(p.bases, CountMode::Bases, p.r, p.matroid.size(), pr.spec);
  sink.record("profile-enumeration", direct.counts == cached.counts && direct.normalized == cached.normalized, "");
}

void fam_equality(const Prepared& p, const Probe& pr, Sink& sink) {
  const BinaryMatroid& m = p.matroid;
  long r = static_cast<long>(p.r);
  SubsetMask R = pr.spec.R;
  CountProfile prof = profile_from_sets(p.bases, CountMode::Bases, p.r, m.size(), ConstraintSpec{R, {}, {}});
  for (long a = 1; a <= r - 1; ++a) {
    std::string at = "a=" + std::to_string(a);
    Rational P = prof.value(a);
    EqualityVerdict ev = equality_criterion(m, R, a);
    if (P == 0) {
      sink.record("equality-vanishing", ev.kind == EqualityVerdict::Kind::Vanishing, at);
      continue;
    }
    bool expected = P * P == prof.value(a + 1) * prof.value(a - 1);
    bool got = ev.kind == EqualityVerdict::Kind::Equal;
    sink.tally("equality-oracle", expected ? "equal" : "strict");
    sink.record("equality-oracle", got == expected,
                at + ": profile says " + (expected ? "equal" : "strict") + ", criterion says " + (got ? "equal" : "strict"));
    if (ev.kind == EqualityVerdict::Kind::Equal) {
      Rational s = prof.value(a + 1) / P;
      sink.record("equality-constant", ev.s == s, at + ": s = " + str(ev.s) + ", P(a+1)/P(a) = " + str(s));
    } else if (ev.kind == EqualityVerdict::Kind::Strict) {
      bool valid = m.is_independent(ev.A) && static_cast<long>(ev.A.size()) == r - 2 &&
                   static_cast<long>((ev.A & R).size()) == a - 1 && ev.x < m.size() && !contract(m, ev.A).is_loop(ev.x);
      sink.record("equality-witness", valid, at + ": A = " + ev.A.str() + ", x = " + std::to_string(ev.x));
    }
  }
}

void fam_vanishing(const Prepared& p, const Probe& pr, Sink& sink) {
  const BinaryMatroid& m = p.matroid;
  PartitionSpec part{pr.spec.S, pr.spec.c};
  auto matches = [&](SubsetMask s) {
    for (std::size_t i = 0; i < part.S.size(); ++i) {
      if (static_cast<long>((s & part.S[i]).size()) != part.c[i]) return false;
    }
    return true;
  };
  bool f = feasible(m, part);
  auto w = witness(m, part);
  bool oracle = std::any_of(p.independent.begin(), p.independent.end(), matches);
  sink.tally("feasible-iff-witness", f ? "feasible" : "infeasible");
  sink.record("feasible-iff-witness", f == w.has_value(), std::string("feasible = ") + (f ? "true" : "false"));
  sink.record("feasible-vs-oracle", f == oracle, std::string("oracle = ") + (oracle ? "true" : "false"));
  if (w) sink.record("witness-valid", m.is_independent(*w) && matches(*w), "witness " + w->str());
}

void fam_range(const Prepared& p, const Probe& pr, Sink& sink) {
  CountProfile prof = profile_from_sets(p.bases, CountMode::Bases, p.r, p.matroid.size(), ConstraintSpec{pr.spec.R, {}, {}});
  auto [lo, hi] = nonvanishing_range(p.matroid, pr.spec.R);
  bool ok = true;
  for (long a = 0; a <= static_cast<long>(p.r); ++a) ok = ok && ((prof.count(a) > 0) == (lo <= a && a <= hi));
  sink.record("nonvanishing-range", ok, "range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

void fam_total(const Prepared& p, const Probe& pr, Sink& sink) {
  TotalEqualityReport rep = total_equality_report(p.matroid, pr.spec.R);
  if (!rep.preconditions()) return;
  bool ok = rep.power_identity == rep.equal_everywhere && rep.equal_everywhere == rep.class_ratio &&
            rep.s.has_value() == rep.class_ratio;
  sink.tally("total-equivalence", rep.equal_everywhere ? "total equality" : "no total equality");
  if (rep.equal_somewhere && !rep.equal_everywhere) sink.tally("total-equivalence", "partial equality");
  sink.record("total-equivalence", ok,
              std::string("(i) ") + (rep.power_identity ? "1" : "0") + " (ii) " + (rep.equal_everywhere ? "1" : "0") +
                  " (iv) " + (rep.class_ratio ? "1" : "0"));
}

std::vector<SubsetMask> contract_bases(const std::vector<SubsetMask>& bases, std::size_t x) {
  std::vector<SubsetMask> out;
  for (auto b : bases) {
    if (b.contains(x)) out.push_back(b.without(x));
  }
  return out;
}

bool support_ok(const IntMatrix& C, SubsetMask nonloops) {
  std::size_t n = C.rows();
  SubsetMask supp;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (C(x, y) != 0) supp = supp.with(x);
    }
  }
  if (supp != nonloops) return false;
  if (supp.empty()) return true;
  SubsetMask seen = SubsetMask::singleton(supp.first());
  std::vector<std::size_t> stack{supp.first()};
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y = 0; y < n; ++y) {
      if (C(x, y) != 0 && !seen.contains(y)) {
        seen = seen.with(y);
        stack.push_back(y);
      }
    }
  }
  return seen == supp;
}

bool chain(const Rational& hi, const Rational& mid, const Rational& lo, const Rational& s) {
  return hi == s * mid && s * mid == s * s * lo;
}

void fam_atlas(const Prepared& p, const Probe& pr, Sink& sink) {
  const BinaryMatroid& m = p.matroid;
  std::size_t n = m.size();
  long r = static_cast<long>(p.r);
  long a = pr.a;
  SubsetMask R = pr.spec.R;
  ConstraintSpec plain{R, {}, {}};
  CountProfile prof = profile_from_sets(p.bases, CountMode::Bases, p.r, n, plain);
  if (prof.value(a) == 0) return;
  std::string at = "a=" + std::to_string(a);

  AtlasContext ctx = make_atlas(m, R, a);
  HyperbolicReport hyp = hyperbolic_report(ctx);
  std::string inert;
  for (const auto& [t, in] : hyp.inertia_by_t) {
    inert += " t=" + str(t) + ":(" + std::to_string(in.positive) + "," + std::to_string(in.zero) + "," +
             std::to_string(in.negative) + ")";
  }
  sink.record("atlas-ope", hyp.ope, at + inert);
  sink.record("atlas-hyp-spot", hyp.spot_check, at);
  sink.record("atlas-cfg", cfg_identities(ctx).all(), at);
  sink.record("atlas-support", support_ok(ctx.C, m.nonloops()), at);

  if (a >= 2 && prof.value(a - 1) > 0) {
    BatteryReport b = property_battery(ctx);
    bool all = b.inh && b.t_inv && b.dec_supp && b.pull_eq && b.irr && b.h_pos && b.support_is_nonloops;
    sink.record("atlas-battery", all,
                at + " inh=" + std::to_string(b.inh) + " t_inv=" + std::to_string(b.t_inv) + " dec_supp=" +
                    std::to_string(b.dec_supp) + " pull_eq=" + std::to_string(b.pull_eq) + " irr=" + std::to_string(b.irr) +
                    " h_pos=" + std::to_string(b.h_pos) + " supp=" + std::to_string(b.support_is_nonloops));
    bool center = true;
    for (auto x : m.nonloops().indices()) {
      CountProfile sub = profile_from_sets(contract_bases(p.bases, x), CountMode::Bases, p.r - 1, n, plain);
      center = center && sub.value(a - 1) > 0;
    }
    sink.record("atlas-center", center, at);
  }

  if (prof.value(a + 1) > 0) {
    Rational s = prof.value(a + 1) / prof.value(a);
    bool equal = prof.value(a) * prof.value(a) == prof.value(a + 1) * prof.value(a - 1);
    for (const Rational& cand : std::vector<Rational>{s, Rational(s * 2)}) {
      ctx.s = cand;
      KernelReport k = kernel_equality_check(ctx);
      sink.record("atlas-kernel", k.agrees(), at + " s=" + str(cand));
      if (equal) {
        bool expect = cand == s;
        sink.record("atlas-kernel-equal", k.s_equ == expect && k.kernel_zero == expect, at + " s=" + str(cand));
      }
    }
  }

  // Candidate constants for the two biconditionals: the profile's own ratio
  // and whatever the first witness on the other side suggests.
  if (r == 2 && a == 1) {
    std::vector<Rational> cands;
    if (prof.value(2) > 0) cands.push_back(prof.value(2) / prof.value(1));
    for (auto cls : m.parallel_classes()) {
      std::size_t in = (cls & R).size();
      std::size_t out = (cls - R).size();
      if (in > 0 && out > 0) cands.push_back(make_rational(BigInt(static_cast<long>(in)), BigInt(static_cast<long>(out))));
    }
    for (const auto& s : cands) {
      bool lhs = chain(prof.value(2), prof.value(1), prof.value(0), s);
      bool rhs = true;
      for (auto cls : m.parallel_classes()) {
        rhs = rhs && Rational(static_cast<long>((cls & R).size())) == s * static_cast<long>((cls - R).size());
      }
      sink.record("atlas-equ-base", lhs == rhs, "s=" + str(s));
    }
  }

  if (r >= 3 && a >= 2) {
    SubsetMask xs = R & m.nonloops();
    std::vector<CountProfile> subs;
    for (auto x : xs.indices()) {
      subs.push_back(profile_from_sets(contract_bases(p.bases, x), CountMode::Bases, p.r - 1, n, plain));
    }
    std::vector<Rational> cands;
    if (prof.value(a + 1) > 0) cands.push_back(prof.value(a + 1) / prof.value(a));
    if (!subs.empty() && subs[0].value(a) > 0 && subs[0].value(a - 1) > 0) {
      cands.push_back(subs[0].value(a) / subs[0].value(a - 1));
    }
    for (const auto& s : cands) {
      bool lhs = chain(prof.value(a + 1), prof.value(a), prof.value(a - 1), s);
      bool rhs = true;
      for (const auto& sub : subs) {
        rhs = rhs && chain(sub.value(a), sub.value(a - 1), sub.value(a - 2), s) && sub.value(a - 2) > 0;
      }
      sink.record("atlas-tran", lhs == rhs, at + " s=" + str(s));
    }
  }
}

std::size_t count_with(const std::vector<SubsetMask>& bases, std::size_t in, std::size_t out) {
  return static_cast<std::size_t>(std::count_if(bases.begin(), bases.end(), [&](SubsetMask b) {
    return b.contains(in) && !b.contains(out);
  }));
}

void fam_cdc(const Prepared& p, const Probe& pr, Sink& sink) {
  std::size_t x = *pr.x;
  std::size_t y = *pr.y;
  CdcIdentities id = check_cdc(p.matroid, x, y);
  SYInstance inst = cdc_instance(p.matroid, x, y);
  std::string xy = "x=" + std::to_string(x) + " y=" + std::to_string(y);
  sink.record("cdc-identities", id.counts_match && id.gap_formula && inst.matroid.rank() == p.r + 1, xy);
  bool direct = id.direct_plus == count_with(p.bases, x, y) && id.direct_minus == count_with(p.bases, y, x);
  sink.record("cdc-direct-oracle", direct, xy);
  sink.tally("cdc-equivalence", id.coincidence ? "coincidence" : "no coincidence");
  bool equal_or_zero = id.verdict == Verdict::Equal || id.verdict == Verdict::Vanishing;
  sink.record("cdc-equivalence", id.in_equality_language == id.coincidence && equal_or_zero == id.coincidence,
              xy + " verdict " + std::string(to_string(id.verdict)));
}

void fam_cdcr(const Prepared& p, const Probe& pr, Sink& sink) {
  const BinaryMatroid& m = p.matroid;
  const BinaryMatroid& other = *pr.other;
  std::size_t x = *pr.x;
  std::size_t y = *pr.y;
  CdcrInstance inst = cdcr_to_cdc(m, x, other, y);
  CdcIdentities id = check_cdc(inst.matroid, inst.x, inst.y);
  bool rho_equal = basis_ratio(m, x) == basis_ratio(other, y);
  std::string xy = "x=" + std::to_string(x) + " y=" + std::to_string(y);
  sink.record("cdcr-coincidence", id.coincidence == rho_equal, xy);
  bool products = id.direct_plus == count_bases(contract(m, x)) * count_bases_avoiding(other, y) &&
                  id.direct_minus == count_bases(contract(other, y)) * count_bases_avoiding(m, x);
  sink.record("cdcr-products", products, xy);
}

void fam_pad(const Prepared& p, const Probe& pr, Sink& sink) {
  SYInstance inst{p.matroid, pr.spec, 1};
  SYInstance padded = pad_k(inst, 2);
  validate_spec(p.matroid, padded.spec);
  CountProfile before = profile_from_sets(p.bases, CountMode::Bases, p.r, p.matroid.size(), pr.spec);
  CountProfile after = profile_from_sets(p.bases, CountMode::Bases, p.r, p.matroid.size(), padded.spec);
  sink.record("pad-profile", before.counts == after.counts && before.normalized == after.normalized, "");
  for (long a = 1; a + 1 <= static_cast<long>(p.r); ++a) {
    sink.record("pad-verdict", sy_verdict(before, a) == sy_verdict(after, a), "a=" + std::to_string(a));
  }
}

void fam_core(const Prepared& p, const Probe& pr, Sink& sink) {
  const BinaryMatroid& m = p.matroid;
  BigInt total(static_cast<unsigned long>(p.bases.size()));
  if (!pr.x) {
    sink.record("ratio-product", count_via_ratio_product(m) == total, "");
    return;
  }
  std::size_t x = *pr.x;
  BigInt avoid = count_bases_avoiding(m, x);
  BigInt through = count_bases(contract(m, x));
  std::size_t oracle = static_cast<std::size_t>(
      std::count_if(p.bases.begin(), p.bases.end(), [&](SubsetMask b) { return !b.contains(x); }));
  sink.record("deletion-contraction", avoid + through == total && avoid == static_cast<unsigned long>(oracle),
              "x=" + std::to_string(x));
  try {
    Rational rho = basis_ratio(m, x);
    sink.record("ratio-bound", rho <= static_cast<long>(m.size()), "x=" + std::to_string(x) + " rho=" + str(rho));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvariantViolation) throw;
    sink.record("ratio-bound", false, e.what());
  }
}

void fam_mason(const Prepared& p, const Probe& pr, Sink& sink) {
  CountProfile prof = profile_from_sets(p.independent, CountMode::IndependentSets, p.r, p.matroid.size(), pr.spec);
  long hi = std::min(static_cast<long>(p.r) - 1, prof.m - 1);
  for (long a = 1; a <= hi; ++a) {
    try {
      Verdict v = gen_mason_verdict(prof, a);
      sink.tally("gen-mason", std::string(to_string(v)));
      sink.record("gen-mason", true, "");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvariantViolation) throw;
      sink.record("gen-mason", false, "a=" + std::to_string(a) + ": " + e.what());
    }
  }
}

void fam_substitution(const Prepared& p, const Probe& pr, Sink& sink) {
  sink.record("mason-substitution", mason_substitution_holds(p.matroid, pr.spec), "");
}

using Family = void (*)(const Prepared&, const Probe&, Sink&);

const std::map<std::string, Family>& families() {
  static const std::map<std::string, Family> table = {
      {"sy", fam_sy},           {"enum", fam_enum},   {"equality", fam_equality}, {"vanishing", fam_vanishing},
      {"range", fam_range},     {"total", fam_total}, {"atlas", fam_atlas},       {"cdc", fam_cdc},
      {"cdcr", fam_cdcr},       {"pad", fam_pad},     {"core", fam_core},         {"mason", fam_mason},
      {"substitution", fam_substitution},
  };
  return table;
}

// ------------------------------------------------------------------ sweeps

// Runs one family on one probe, with dumps pointing at the instance.
struct Runner {
  Recorder& rec;
  const Prepared& p;
  void operator()(const std::string& family, const Probe& probe) {
    rec.set_context(&family, &p, &probe);
    families().at(family)(p, probe, rec);
    rec.set_context(nullptr, nullptr, nullptr);
  }
};

template <typename Fn>
void for_each_submask(SubsetMask mask, Fn&& fn) {
  std::uint64_t all = mask.bits();
  std::uint64_t s = 0;
  // Ascending order: s runs through the submasks of all by carry propagation.
  while (true) {
    fn(SubsetMask(s));
    if (s == all) break;
    s = (s - all) & all;
  }
}

long cap(std::size_t size, std::size_t r) { return static_cast<long>(std::min(size, r)); }

// k = 0: every R. k = 1: every S1 disjoint from R. k = 2: every pair of
// disjoint nonempty blocks outside R, counted once (min S1 < min S2).
template <typename Fn>
void constrained_specs(SubsetMask ground, std::size_t r, bool with_R, Fn&& fn) {
  auto over_R = [&](SubsetMask R) {
    fn(ConstraintSpec{R, {}, {}});
    SubsetMask rest = ground - R;
    for_each_submask(rest, [&](SubsetMask s1) {
      if (s1.empty()) return;
      for (long c1 = 0; c1 <= cap(s1.size(), r); ++c1) fn(ConstraintSpec{R, {s1}, {c1}});
      for_each_submask(rest - s1, [&](SubsetMask s2) {
        if (s2.empty() || s2.first() < s1.first()) return;
        for (long c1 = 0; c1 <= cap(s1.size(), r); ++c1) {
          for (long c2 = 0; c2 <= cap(s2.size(), r) && c1 + c2 <= static_cast<long>(r); ++c2) {
            fn(ConstraintSpec{R, {s1, s2}, {c1, c2}});
          }
        }
      });
    });
  };
  if (with_R) {
    for_each_submask(ground, over_R);
  } else {
    over_R(SubsetMask());
  }
}

// Set partitions into at most three nonempty blocks.
template <typename Fn>
void small_partitions(std::size_t n, Fn&& fn) {
  std::vector<int> label(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (i == n) {
      std::vector<SubsetMask> blocks(static_cast<std::size_t>(used));
      for (std::size_t e = 0; e < n; ++e) blocks[static_cast<std::size_t>(label[e])] = blocks[static_cast<std::size_t>(label[e])].with(e);
      fn(blocks);
      return;
    }
    for (int b = 0; b <= std::min(used, 2); ++b) {
      label[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  if (n > 0) rec(0, 0);
}

struct SweepContext {
  const SuiteConfig& config;
  const std::vector<Prepared>& universe;
};

void sweep(int criterion, const SweepContext& ctx, const Prepared& p, Recorder& rec) {
  Runner run{rec, p};
  const BinaryMatroid& m = p.matroid;
  std::size_t n = m.size();
  std::size_t r = p.r;
  SubsetMask ground = m.ground();
  auto each_R = [&](auto&& fn) { for_each_submask(ground, fn); };

  switch (criterion) {
    case 1:
      if (r < 2) return;
      constrained_specs(ground, r, true, [&](const ConstraintSpec& spec) {
        run("sy", Probe{spec});
        if (n <= ctx.config.enumeration_max_n && spec.k() <= 1) run("enum", Probe{spec});
      });
      return;
    case 2:
      if (r < 2) return;
      each_R([&](SubsetMask R) { run("equality", Probe{ConstraintSpec{R, {}, {}}}); });
      return;
    case 3:
      small_partitions(n, [&](const std::vector<SubsetMask>& blocks) {
        std::vector<long> c(blocks.size(), 0);
        std::function<void(std::size_t, long)> rec_c = [&](std::size_t i, long total) {
          if (i == blocks.size()) {
            run("vanishing", Probe{ConstraintSpec{SubsetMask(), blocks, c}});
            return;
          }
          for (long v = 0; v <= static_cast<long>(blocks[i].size()) && total + v <= static_cast<long>(r) + 1; ++v) {
            c[i] = v;
            rec_c(i + 1, total + v);
          }
        };
        rec_c(0, 0);
      });
      each_R([&](SubsetMask R) { run("range", Probe{ConstraintSpec{R, {}, {}}}); });
      return;
    case 4:
      if (!m.loops().empty()) return;
      each_R([&](SubsetMask R) { run("total", Probe{ConstraintSpec{R, {}, {}}}); });
      return;
    case 5:
      if (r < 2) return;
      each_R([&](SubsetMask R) {
        CountProfile prof = profile_from_sets(p.bases, CountMode::Bases, r, n, ConstraintSpec{R, {}, {}});
        for (long a = 1; a + 1 <= static_cast<long>(r); ++a) {
          if (prof.count(a) > 0) run("atlas", Probe{ConstraintSpec{R, {}, {}}, a});
        }
      });
      return;
    case 7: {
      SubsetMask nl = m.nonloops();
      run("core", Probe{});
      for (auto x : nl.indices()) {
        Probe probe;
        probe.x = x;
        run("core", probe);
        SubsetMask par = m.parallel_class(x);
        for (auto y : (nl - par).indices()) {
          Probe pair;
          pair.x = x;
          pair.y = y;
          run("cdc", pair);
        }
      }
      each_R([&](SubsetMask R) {
        run("pad", Probe{ConstraintSpec{R, {}, {}}});
        SubsetMask rest = ground - R;
        if (rest.empty()) return;
        for (long c1 = 0; c1 <= cap(rest.size(), r); ++c1) run("pad", Probe{ConstraintSpec{R, {rest}, {c1}}});
      });
      if (n <= ctx.config.pair_max_n) {
        for (const auto& q : ctx.universe) {
          if (q.matroid.size() > ctx.config.pair_max_n) continue;
          for (auto x : nl.indices()) {
            for (auto y : q.matroid.nonloops().indices()) {
              Probe pair;
              pair.x = x;
              pair.y = y;
              pair.other = &q.matroid;
              run("cdcr", pair);
            }
          }
        }
      }
      return;
    }
    case 8:
      if (r < 2) return;
      constrained_specs(ground, r, false, [&](const ConstraintSpec& spec) {
        run("mason", Probe{spec});
        if (n <= ctx.config.substitution_max_n && spec.k() <= 1) run("substitution", Probe{spec});
      });
      return;
    default:
      return;
  }
}

// ------------------------------------------------------- standalone checks

SPTerm random_term(std::mt19937_64& rng, std::uint64_t leaves) {
  if (leaves == 1) return SPTerm::leaf();
  std::uniform_int_distribution<int> coin(0, 9);
  int roll = coin(rng);
  auto build = [&]() {
    if (roll < 2) {
      std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(1, leaves - 1)(rng);
      return par_extend(random_term(rng, leaves - k), k);
    }
    std::uint64_t left = std::uniform_int_distribution<std::uint64_t>(1, leaves - 1)(rng);
    SPTerm l = random_term(rng, left);
    SPTerm r = random_term(rng, leaves - left);
    return roll < 6 ? SPTerm::series(l, r) : SPTerm::parallel(l, r);
  };
  SPTerm out = build();
  if (coin(rng) < 3) out = dualize(out);
  return out;
}

// Matrix-tree on the realization with its marked edge.
bool realization_matches(const SPTerm& t, std::string& detail) {
  Multigraph g = realize(t, true);
  std::size_t e = *g.marked();
  BigInt T = tau(delete_edge(g, e));
  BigInt F = tau(contract_edge(g, e));
  detail = "T=" + to_string(t.T()) + " F=" + to_string(t.F()) + " tau(G-e)=" + to_string(T) + " tau(G/e)=" + to_string(F);
  return T == t.T() && F == t.F() && g.edge_count() == t.leaf_count() + 1 && passes_planar_edge_bound(g);
}

std::vector<BigInt> random_quotients(std::mt19937_64& rng, std::size_t max_len, long max_q) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<long> q(1, max_q);
  std::vector<BigInt> out(len(rng));
  for (auto& v : out) v = q(rng);
  return out;
}

BigInt sum_of(const std::vector<BigInt>& v) {
  BigInt s = 0;
  for (const auto& x : v) s += x;
  return s;
}

std::string list_str(const std::vector<BigInt>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : ",") + to_string(x);
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void run_trees(const SuiteConfig& config, Sink& sink) {
  std::mt19937_64 rng(config.seed);

  for (std::size_t i = 0; i < config.cf_lists; ++i) {
    auto q = random_quotients(rng, 6, 9);
    SPTerm t = from_cf(q);
    std::string detail;
    bool ok = realization_matches(t, detail);
    ok = ok && gcd(t.T(), t.F()) == 1 && t.ratio() == cf_value(q) && BigInt(t.leaf_count() + 1) == sum_of(q) + 1;
    sink.record("cf-realization", ok, "[" + list_str(q) + "] " + detail);
  }

  std::uniform_int_distribution<std::uint64_t> leaves(1, 40);
  for (std::size_t i = 0; i < config.sp_terms; ++i) {
    SPTerm t = random_term(rng, leaves(rng));
    std::string detail;
    sink.record("sp-semantics", realization_matches(t, detail), detail);
    Multigraph g = realize(dualize(t), true);
    Rational back = tree_ratio(g, *g.marked());
    sink.record("duality", back == make_rational(t.F(), t.T()), "ratio " + str(t.ratio()) + " dual " + str(back));
  }

  for (std::size_t i = 0; i < config.cf_lists; ++i) {
    auto qa = random_quotients(rng, 4, 9);
    auto qb = random_quotients(rng, 4, 9);
    SPTerm t = sum_terms(dualize(from_cf(qa)), dualize(from_cf(qb)));
    std::string detail;
    bool ok = realization_matches(t, detail);
    ok = ok && t.ratio() == 1 / cf_value(qa) + 1 / cf_value(qb) &&
         BigInt(t.leaf_count() + 1) == sum_of(qa) + sum_of(qb) + 1;
    sink.record("cf-sum", ok, "[" + list_str(qa) + "] + [" + list_str(qb) + "] " + detail);
  }

  double worst = 0;
  for (std::uint64_t N = 1; N <= config.tree_exact_max; ++N) {
    ExactTreeResult res = exact_tree_graph(N);
    std::uint64_t edges = res.graph.edge_count();
    bool ok = tau(res.graph) == N;
    if (N >= 3) {
      std::uint64_t best = ~std::uint64_t{0};
      for (std::uint64_t d = 1; d < N; ++d) {
        std::uint64_t g = 0;
        std::uint64_t s = quotient_sum_u64(N, d, &g);
        if (g == 1) best = std::min(best, s);
      }
      ok = ok && BigInt(edges) == sum_of(res.quotients) && edges <= best + 1;
      if (auto base = log_loglog_squared(static_cast<double>(N)); base && N >= 16) {
        worst = std::max(worst, static_cast<double>(edges) / (std::log(static_cast<double>(N)) * std::log(std::log(static_cast<double>(N)))));
      }
      sink.record("exact-tree-factored", tau(exact_tree_graph_factored(N)) == N, "N=" + std::to_string(N));
    }
    sink.record("exact-tree-range", ok, "N=" + std::to_string(N) + " edges=" + std::to_string(edges));
  }
  sink.note("exact-tree-range", "max edges/(ln N ln ln N), 16 <= N", fmt(worst));

  std::uniform_int_distribution<std::uint64_t> bigN(3, 1000000000ULL);
  double sum_quality = 0;
  double max_quality = 0;
  for (std::size_t i = 0; i < config.tree_random; ++i) {
    std::uint64_t N = bigN(rng);
    ExactTreeResult res = exact_tree_graph(N);
    std::uint64_t edges = res.graph.edge_count();
    bool ok = tau(res.graph) == N && BigInt(edges) == sum_of(res.quotients);
    double q = static_cast<double>(edges) / (std::log(static_cast<double>(N)) * std::log(std::log(static_cast<double>(N))));
    sum_quality += q;
    max_quality = std::max(max_quality, q);
    sink.record("exact-tree-random", ok, "N=" + std::to_string(N) + " edges=" + std::to_string(edges));
  }
  if (config.tree_random > 0) {
    sink.note("exact-tree-random", "mean edges/(ln N ln ln N)", fmt(sum_quality / static_cast<double>(config.tree_random)));
    sink.note("exact-tree-random", "max edges/(ln N ln ln N)", fmt(max_quality));
  }

  const std::uint64_t top = 1000000;
  for (std::size_t i = 0; i < config.ratio_pairs; ++i) {
    std::uint64_t A = 0;
    std::uint64_t B = 0;
    switch (i % 3) {
      case 0: {
        B = std::uniform_int_distribution<std::uint64_t>(2, top)(rng);
        A = std::uniform_int_distribution<std::uint64_t>(1, B - 1)(rng);
        sink.tally("ratio-graph", "A < B");
        break;
      }
      case 1: {
        A = std::uniform_int_distribution<std::uint64_t>(1, top)(rng);
        B = std::uniform_int_distribution<std::uint64_t>((A + 1) / 2, A)(rng);
        sink.tally("ratio-graph", "B <= A <= 2B");
        break;
      }
      default: {
        A = std::uniform_int_distribution<std::uint64_t>(3, top)(rng);
        B = std::uniform_int_distribution<std::uint64_t>(1, (A - 1) / 2)(rng);
        sink.tally("ratio-graph", "A > 2B");
        break;
      }
    }
    RatioGraphResult res = ratio_graph(A, B);
    Rational got = tree_ratio(res.graph, res.marked);
    bool ok = got == make_rational(A, B) && res.graph.edge_count() == res.predicted_edges;
    sink.record("ratio-graph", ok,
                std::to_string(A) + "/" + std::to_string(B) + " got " + str(got) + " edges " +
                    std::to_string(res.graph.edge_count()) + " predicted " + std::to_string(res.predicted_edges));
  }
}

Multigraph complete_graph(std::size_t v) {
  Multigraph g(v);
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) g.add_edge(i, j);
  }
  return g;
}

void run_fixtures(const std::vector<Prepared>& universe, Sink& sink) {
  for (std::size_t t = 1; t <= 4; ++t) {
    Fixture f = build_combination_example(3, t);
    TotalEqualityReport rep = total_equality_report(f.matroid, f.R);
    EqualityVerdict ev = equality_criterion(f.matroid, f.R, 1);
    bool ok = rep.preconditions() && rep.equal_somewhere && !rep.equal_everywhere &&
              ev.kind == EqualityVerdict::Kind::Equal;
    sink.record("combination-fixture", ok, "r=3 t=" + std::to_string(t));
  }

  std::vector<std::pair<std::string, BinaryMatroid>> bases;
  for (std::size_t k = 1; k <= 3; ++k) bases.emplace_back("free" + std::to_string(k), free_matroid(k));
  bases.emplace_back("K3", from_graph(complete_graph(3)));
  bases.emplace_back("K4", from_graph(complete_graph(4)));
  bases.emplace_back("fano", BinaryMatroid(3, {1, 2, 3, 4, 5, 6, 7}));
  for (const auto& p : universe) {
    if (p.matroid.size() <= 3 && p.matroid.loops().empty() && p.key[0] == 'b') bases.emplace_back(p.key, p.matroid);
  }
  for (const auto& [name, m] : bases) {
    Fixture f = build_double_matroid(m);
    TotalEqualityReport rep = total_equality_report(f.matroid, f.R);
    bool ok = rep.preconditions() && rep.power_identity && rep.equal_everywhere && rep.class_ratio && rep.s &&
              *rep.s == 1;
    sink.record("double-fixture", ok, name);
  }

  // r = 5 has 32 elements, past the enumeration cap.
  for (std::size_t r = 3; r <= 4; ++r) {
    Fixture f = build_linear_example(r);
    EqualityVerdict ev = equality_criterion(f.matroid, f.R, 1);
    sink.record("linear-fixture", ev.kind == EqualityVerdict::Kind::Equal && ev.s == 1, "r=" + std::to_string(r));
  }
}

// Deterministic merge: shard results arrive in universe order.
void merge_into(std::map<std::string, CheckResult>& into, const std::map<std::string, CheckResult>& from) {
  for (const auto& [name, r] : from) {
    auto& dst = into[name];
    if (dst.name.empty()) {
      dst.name = r.name;
      dst.criterion = r.criterion;
    }
    dst.instances += r.instances;
    dst.violations += r.violations;
    for (const auto& c : r.counterexamples) {
      if (dst.counterexamples.size() < kMaxDumps) dst.counterexamples.push_back(c);
    }
    for (const auto& [k, v] : r.tallies) dst.tallies[k] += v;
    for (const auto& [k, v] : r.notes) dst.notes[k] = v;
  }
}

std::string dump_key(const std::string& dump) {
  json j = json::parse(dump);
  return j.value("instance", std::string()) + "\x1f" + dump;
}

}  // namespace

// ----------------------------------------------------------------- public

void validate(const SuiteConfig& config) {
  std::size_t cap = brute_force_limit();
  auto limit = [&](std::size_t value, std::size_t max, const char* what) {
    if (value > max) {
      fail(ErrorKind::SizeLimit, std::string(what) + " = " + std::to_string(value) + " exceeds the cap " + std::to_string(max));
    }
  };
  limit(config.max_n, cap, "max_n");
  limit(config.max_edges, cap, "max_edges");
  limit(config.max_d, 8, "max_d");
  limit(config.max_vertices, 8, "max_vertices");
  limit(2 * config.pair_max_n + 2, cap, "2 pair_max_n + 2");
  limit(2 * config.substitution_max_n, cap, "2 substitution_max_n");
  limit(config.enumeration_max_n, cap, "enumeration_max_n");
  if (config.shards == 0) fail(ErrorKind::BadParameters, "need at least one shard");
  if (config.tree_exact_max > kExactTreeExhaustiveLimit) {
    fail(ErrorKind::SizeLimit, "tree_exact_max above " + std::to_string(kExactTreeExhaustiveLimit));
  }
}

Prepared prepare(const BinaryMatroid& m, std::string key) {
  Prepared p;
  p.key = std::move(key);
  p.matroid = m;
  p.r = m.rank();
  p.bases = enumerate_bases(m);
  for_each_independent(m, [&](SubsetMask s) { p.independent.push_back(s); });
  return p;
}

std::vector<BinaryMatroid> binary_universe(std::size_t d, std::size_t max_n) {
  std::vector<BinaryMatroid> out;
  std::uint64_t values = std::uint64_t{1} << d;
  std::vector<std::uint64_t> cols;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t lo) {
    if (!cols.empty()) out.emplace_back(d, cols);
    if (cols.size() == max_n) return;
    for (std::uint64_t v = lo; v < values; ++v) {
      cols.push_back(v);
      rec(v);
      cols.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Multigraph> graph_universe(std::size_t max_vertices, std::size_t max_edges) {
  using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;
  std::vector<Multigraph> out;
  for (std::size_t v = 1; v <= max_vertices; ++v) {
    EdgeList slots;
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = i; j < v; ++j) slots.emplace_back(i, j);
    }
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::set<EdgeList> seen;
    EdgeList current;
    auto connected = [&]() {
      std::vector<std::size_t> parent(v);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
      };
      for (auto [a, b] : current) parent[find(a)] = find(b);
      for (std::size_t i = 1; i < v; ++i) {
        if (find(i) != find(0)) return false;
      }
      return true;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t lo) {
      if (!current.empty() && connected()) {
        EdgeList best;
        for (const auto& p : perms) {
          EdgeList mapped;
          for (auto [a, b] : current) mapped.emplace_back(std::min(p[a], p[b]), std::max(p[a], p[b]));
          std::sort(mapped.begin(), mapped.end());
          if (best.empty() || mapped < best) best = std::move(mapped);
        }
        if (seen.insert(best).second) {
          Multigraph g(v);
          for (auto [a, b] : best) g.add_edge(a, b);
          out.push_back(std::move(g));
        }
      }
      if (current.size() == max_edges) return;
      for (std::size_t s = lo; s < slots.size(); ++s) {
        current.push_back(slots[s]);
        rec(s);
        current.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

std::string matroid_key(const BinaryMatroid& m) {
  std::string out = "b" + std::to_string(m.dim()) + ":";
  for (std::size_t i = 0; i < m.size(); ++i) out += (i == 0 ? "" : ".") + std::to_string(m.column(i));
  return out;
}

std::string graph_key(const Multigraph& g) {
  std::string out = "g" + std::to_string(g.vertex_count()) + ":";
  bool first = true;
  for (const auto& e : g.edges()) {
    out += (first ? "" : ".") + std::to_string(e.u) + "-" + std::to_string(e.w);
    first = false;
  }
  return out;
}

std::vector<Prepared> build_universe(const SuiteConfig& config) {
  validate(config);
  std::vector<Prepared> out;
  for (const auto& m : binary_universe(config.max_d, config.max_n)) out.push_back(prepare(m, matroid_key(m)));
  for (const auto& g : graph_universe(config.max_vertices, config.max_edges)) {
    out.push_back(prepare(from_graph(g), graph_key(g)));
  }
  return out;
}

std::vector<CheckResult> run_criterion(int criterion, const SuiteConfig& config, const std::vector<Prepared>& universe) {
  validate(config);
  if (criterion < 1 || criterion > 8) fail(ErrorKind::BadParameters, "criterion must lie in 1..8");
  std::map<std::string, CheckResult> merged;
  if (criterion == 6) {
    Recorder rec;
    run_trees(config, rec);
    for (const auto& [name, kv] : rec.notes) {
      for (const auto& [k, v] : kv) rec.slot(name).notes[k] = v;
    }
    merge_into(merged, rec.results);
  } else {
    SweepContext ctx{config, universe};
    std::size_t shards = std::max<std::size_t>(1, std::min(config.shards, universe.size()));
    std::vector<Recorder> recs(shards);
    std::vector<std::exception_ptr> errors(shards);
    auto work = [&](std::size_t shard) {
      try {
        std::size_t lo = universe.size() * shard / shards;
        std::size_t hi = universe.size() * (shard + 1) / shards;
        for (std::size_t i = lo; i < hi; ++i) sweep(criterion, ctx, universe[i], recs[shard]);
      } catch (...) {
        errors[shard] = std::current_exception();
      }
    };
    if (shards == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (std::size_t s = 0; s < shards; ++s) threads.emplace_back(work, s);
      for (auto& t : threads) t.join();
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (const auto& r : recs) merge_into(merged, r.results);
    if (criterion == 4) {
      Recorder rec;
      run_fixtures(universe, rec);
      merge_into(merged, rec.results);
    }
  }

  std::vector<CheckResult> out;
  for (const auto& [c, name] : check_table()) {
    if (c != criterion) continue;
    auto it = merged.find(name);
    CheckResult r;
    if (it != merged.end()) {
      r = it->second;
    } else {
      r.criterion = c;
      r.name = name;
    }
    std::sort(r.counterexamples.begin(), r.counterexamples.end(),
              [](const std::string& x, const std::string& y) { return dump_key(x) < dump_key(y); });
    out.push_back(std::move(r));
  }
  return out;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

bool SuiteReport::criterion_passed(int criterion) const {
  return std::all_of(checks.begin(), checks.end(),
                     [&](const CheckResult& c) { return c.criterion != criterion || c.passed(); });
}

std::string SuiteReport::json(const SuiteConfig& config) const {
  sylab::json j;
  j["config"] = {
      {"max_n", config.max_n},
      {"max_d", config.max_d},
      {"max_vertices", config.max_vertices},
      {"max_edges", config.max_edges},
      {"seed", config.seed},
      {"cf_lists", config.cf_lists},
      {"sp_terms", config.sp_terms},
      {"tree_exact_max", config.tree_exact_max},
      {"tree_random", config.tree_random},
      {"ratio_pairs", config.ratio_pairs},
      {"pair_max_n", config.pair_max_n},
      {"substitution_max_n", config.substitution_max_n},
      {"enumeration_max_n", config.enumeration_max_n},
  };
  j["universe"] = {{"binary", binary_count}, {"graphic", graphic_count}};
  j["passed"] = passed();
  sylab::json checks = sylab::json::array();
  for (const auto& c : this->checks) {
    sylab::json cj;
    cj["criterion"] = c.criterion;
    cj["name"] = c.name;
    cj["instances"] = c.instances;
    cj["violations"] = c.violations;
    cj["passed"] = c.passed();
    if (!c.tallies.empty()) cj["tallies"] = c.tallies;
    if (!c.notes.empty()) cj["notes"] = c.notes;
    sylab::json dumps = sylab::json::array();
    for (const auto& d : c.counterexamples) dumps.push_back(sylab::json::parse(d));
    cj["counterexamples"] = dumps;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

SuiteReport run_suite(const SuiteConfig& config) {
  validate(config);
  std::vector<Prepared> universe = build_universe(config);
  SuiteReport report;
  for (const auto& p : universe) (p.key[0] == 'b' ? report.binary_count : report.graphic_count)++;
  for (int c = 1; c <= 8; ++c) {
    auto part = run_criterion(c, config, universe);
    report.checks.insert(report.checks.end(), part.begin(), part.end());
  }
  if (!config.output_path.empty()) {
    std::ofstream f(config.output_path);
    if (!f) fail(ErrorKind::ParseError, "cannot write '" + config.output_path + "'");
    f << report.json(config);
  }
  return report;
}

namespace {

class ReplaySink : public Sink {
 public:
  json outcomes = json::array();
  json tallies = json::object();
  bool violation = false;
  void record(const std::string& name, bool ok, const std::string& detail) override {
    outcomes.push_back({{"check", name}, {"ok", ok}, {"detail", detail}});
    violation = violation || !ok;
  }
  void tally(const std::string& name, const std::string& what) override {
    tallies[name + ": " + what] = tallies.value(name + ": " + what, 0) + 1;
  }
};

SubsetMask mask_from(const json& j, std::size_t n) {
  SubsetMask out;
  for (const auto& v : j) {
    auto e = v.get<std::size_t>();
    if (e >= n) fail(ErrorKind::ParseError, "element " + std::to_string(e) + " out of range");
    out = out.with(e);
  }
  return out;
}

}  // namespace

std::string make_dump(const std::string& family, const BinaryMatroid& m, const ConstraintSpec& spec, long a,
                      std::optional<std::size_t> x, std::optional<std::size_t> y) {
  if (families().count(family) == 0 || family == "cdcr") {
    fail(ErrorKind::BadParameters, "no single-matroid family named '" + family + "'");
  }
  Probe p(spec, a);
  p.x = x;
  p.y = y;
  return probe_json(family, matroid_key(m), m, p).dump();
}

std::string replay(const std::string& dump) {
  json j;
  try {
    j = json::parse(dump);
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("dump is not JSON: ") + e.what());
  }
  try {
    std::string family = j.at("family").get<std::string>();
    auto it = families().find(family);
    if (it == families().end()) fail(ErrorKind::ParseError, "unknown family '" + family + "'");
    BinaryMatroid m = parse_matroid(j.at("matroid").get<std::string>());
    std::size_t n = m.size();
    Probe probe;
    probe.spec.R = mask_from(j.value("R", json::array()), n);
    for (const auto& s : j.value("S", json::array())) probe.spec.S.push_back(mask_from(s, n));
    probe.spec.c = j.value("c", std::vector<long>{});
    probe.a = j.value("a", 0L);
    if (j.contains("x")) probe.x = j["x"].get<std::size_t>();
    if (j.contains("y")) probe.y = j["y"].get<std::size_t>();
    std::optional<BinaryMatroid> other;
    if (j.contains("other")) {
      other = parse_matroid(j["other"].get<std::string>());
      probe.other = &*other;
    }
    if ((family == "cdc" || family == "cdcr") && (!probe.x || !probe.y)) fail(ErrorKind::ParseError, "family needs x and y");
    if (family == "cdcr" && !other) fail(ErrorKind::ParseError, "cdcr needs the other matroid");
    Prepared p = prepare(m, j.value("instance", matroid_key(m)));
    ReplaySink sink;
    it->second(p, probe, sink);
    json out;
    out["family"] = family;
    out["instance"] = p.key;
    out["violation"] = sink.violation;
    out["outcomes"] = sink.outcomes;
    if (!sink.tallies.empty()) out["tallies"] = sink.tallies;
    return out.dump(2) + "\n";
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("malformed dump: ") + e.what());
  }
}

}  // namespace sylab
