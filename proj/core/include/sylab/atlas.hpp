#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sylab/bigint.hpp"
#include "sylab/matrix.hpp"
#include "sylab/matroid.hpp"

namespace sylab {

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

// a!(r-a)! B(M,R,a): words x_1..x_r spelling a basis with the first a letters
// in R and the rest outside. Zero for a outside [0, r].
BigInt comp_count(const BinaryMatroid& m, SubsetMask R, long a);

// The same number by generating every word. Tiny instances only.
BigInt comp_count_by_words(const BinaryMatroid& m, SubsetMask R, long a);

// C(M,R,a)_xy = (a-1)!(r-a-1)! B(M/{x,y}, R, a-1) on independent pairs, else 0.
// Computed from one pass over the bases of M. Throws BadRange unless r >= 2 and
// 1 <= a <= r-1.
IntMatrix build_C(const BinaryMatroid& m, SubsetMask R, long a);

// Same matrix with a in [0, r]; the ends give the zero matrix.
IntMatrix build_C_extended(const BinaryMatroid& m, SubsetMask R, long a);

// Entry by entry through explicit contraction.
IntMatrix build_C_by_contraction(const BinaryMatroid& m, SubsetMask R, long a);

// Entry by entry by counting words x γ y, x y γ or γ x y of Comp(M,R,·).
IntMatrix build_C_by_words(const BinaryMatroid& m, SubsetMask R, long a);

struct Inertia {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;
  bool operator==(const Inertia&) const = default;
};

// Exact signature by congruence. Throws NotSymmetric.
Inertia inertia(const RatMatrix& m);
Inertia inertia(const IntMatrix& m);

// t-values at which the atlas matrices are examined.
const std::vector<Rational>& atlas_t_sample();

struct AtlasContext {
  BinaryMatroid matroid;
  SubsetMask R;
  long a = 1;
  long r = 0;
  IntMatrix C;       // C(M,R,a)
  IntMatrix C_prev;  // C(M,R,a-1)
  Rational t{1, 2};
  std::optional<Rational> s;

  std::vector<Rational> f() const;
  std::vector<Rational> g() const;
  std::vector<Rational> h() const;
  std::vector<Rational> z() const;  // f - s g; requires s
  RatMatrix blended() const;        // t C + (1-t) C_prev
};

// Throws BadRange like build_C and BadParameters for t outside [0, 1].
AtlasContext make_atlas(const BinaryMatroid& m, SubsetMask R, long a, Rational t = Rational(1, 2),
                        std::optional<Rational> s = std::nullopt);

struct CfgReport {
  bool ff = false;  // <f,Cf> = r! P(a+1)
  bool fg = false;  // <f,Cg> = r! P(a)
  bool gg = false;  // <g,Cg> = r! P(a-1)
  bool all() const { return ff && fg && gg; }
};
CfgReport cfg_identities(const AtlasContext& ctx);

struct HyperbolicReport {
  std::vector<std::pair<Rational, Inertia>> inertia_by_t;
  bool ope = true;        // at most one positive eigenvalue at every sampled t
  bool spot_check = true; // quadratic-form inequality on the random pairs
  std::size_t pairs_tested = 0;
  bool ok() const { return ope && spot_check; }
};

inline constexpr std::size_t kHypVectors = 64;
inline constexpr std::uint64_t kHypSeed = 0x5eed5eedULL;

// Requires P(M,R,a) > 0 (PreconditionUnmet otherwise).
HyperbolicReport hyperbolic_report(const AtlasContext& ctx);
bool hyperbolic_check(const AtlasContext& ctx);

struct BatteryReport {
  bool inh = false;
  bool t_inv = false;
  bool dec_supp = false;
  bool pull_eq = false;
  bool irr = false;
  bool h_pos = false;
  bool support_is_nonloops = false;
};

// Checks the atlas identities at ctx.t. Throws PreconditionUnmet naming the
// failed hypothesis unless 2 <= a <= r-1, P(a) > 0 and P(a-1) > 0.
BatteryReport property_battery(const AtlasContext& ctx);

struct KernelReport {
  bool s_equ = false;        // <f,Cf> = s<g,Cf> = s^2<g,Cg>
  bool kernel_zero = false;  // C (f - s g) = 0
  bool agrees() const { return s_equ == kernel_zero; }
};

// Needs ctx.s > 0 (BadParameters otherwise).
KernelReport kernel_equality_check(const AtlasContext& ctx);

}  // namespace sylab
