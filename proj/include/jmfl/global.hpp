// Copyright 2026 The jmfl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef JMFL_GLOBAL_HPP_
#define JMFL_GLOBAL_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jmfl/orbital.hpp"

namespace jmfl {

// Irreducible factorisation as places with multiplicities; throws on zero.
std::vector<std::pair<Place, int>> factor_places(const Poly& P);

// t = diag(a_1, a_2/a_1, ..., a_r/a_{r-1}) with monic polynomial a_i.
struct GlobalTorus {
  std::vector<Poly> a;

  int r() const { return static_cast<int>(a.size()); }
  const Field& field() const { return a.front().field(); }
  std::vector<int> degrees() const;
  Poly support_poly() const;  // a_1···a_{r-1}
  // Distinct places dividing a_1···a_{r-1}, sorted.
  std::vector<Place> support() const;
  // gcd(a_1···a_{r-1}, a_r) = 1.
  bool admissible() const;
  TorusParam param() const { return TorusParam::from_polys(a); }
};

enum class GlobalMode { Product, Direct };

using Alpha = std::vector<Field::Elem>;

// Values for each α in alphas; one enumeration per place (product) or one
// global enumeration (direct).
std::vector<CycloValue> I_global(const CycloRing& R, const GlobalTorus& t, const std::vector<Alpha>& alphas,
                                 GlobalMode mode, Exec ex = Exec::Serial);
std::vector<CycloValue> J_global(const CycloRing& R, const GlobalTorus& t, const std::vector<Alpha>& alphas,
                                 GlobalMode mode, Exec ex = Exec::Serial);
CycloValue I_global(const CycloRing& R, const GlobalTorus& t, const Alpha& alpha, GlobalMode mode);
CycloValue J_global(const CycloRing& R, const GlobalTorus& t, const Alpha& alpha, GlobalMode mode);

// Profiles of every matrix fiber at once, keyed by (a_1(x), ..., a_r(x)).
// I: symmetric x, h = Σ α_i x_{i-1,i}. J: y on the coprime locus,
// h' = ½ Σ α_i (y_{i-1,i} + y_{i,i-1}) weighted by ζ(kappa_poly(y)).
using FiberTable = std::map<std::vector<Poly>, OrbitalProfile>;
FiberTable fiber_table_I(const Field& F, int r, Exec ex = Exec::Serial);
FiberTable fiber_table_J(const Field& F, int r, Exec ex = Exec::Serial);

CycloValue matrix_fiber_sum_I(const CycloRing& R, const GlobalTorus& t, const Alpha& alpha);
CycloValue matrix_fiber_sum_J(const CycloRing& R, const GlobalTorus& t, const Alpha& alpha);

// τ(Fr_q) for the degree vector d.
CycloValue tau_factor(const CycloRing& R, const Field& F, const std::vector<int>& d);

// The product over supp(t) of the local 𝔱_v, rewritten by the Weil product
// formula: q^{Σ_{i<r} d_i/2} ζ(-1)^{Σ d_j} Π γ_∞(ϖ)^{-p(d_j - d_{j-1})}, over
// j < r with j ≢ r (mod 2), d_0 = 0.
CycloValue tau_local_product(const CycloRing& R, const Field& F, const std::vector<int>& d);

// Π_{i=2}^r ζ(-α_i)^{d_{i-1}}, the product over the support of the local signs.
int global_jm_sign(const Field& F, const std::vector<int>& d, const Alpha& alpha);
// ζ(det w₀) = ζ(-1)^{r(r-1)/2}, the ratio between ζ(kappa_poly) and the
// product of the local κ.
int w0_sign(const Field& F, int r);

// All α in (k^*)^{r-1}.
std::vector<Alpha> full_alpha_grid(const Field& F, int r);
// All monic a with deg a_i = i and gcd(a_1···a_{r-1}, a_r) = 1.
std::vector<GlobalTorus> admissible_tori(const Field& F, int r);

struct TheoremBReport {
  std::size_t fibers = 0, checks = 0, nonzero = 0;
  bool ratio_constant = false;            // J/I the same over every fiber and α with I != 0
  bool ratio_constant_per_alpha = false;  // the same for each fixed α
  bool zero_rule = false;                 // I = 0 implies J = 0
  bool pass = false;                      // J = τ·I everywhere
  bool pass_reconciled = false;           // J = ζ(det w₀)·ε·τ_loc·I everywhere
  CycloValue tau, tau_loc;
  // J/(τI) for each α, in grid order; invalid where every I vanishes.
  std::vector<CycloValue> ratio_by_alpha;
  std::string witness;  // first failure of the literal identity
};
TheoremBReport theorem_B_check(const CycloRing& R, const Field& F, int r, const std::vector<Alpha>& alphas,
                               Exec ex = Exec::Serial);

struct ZetaSumCheck {
  Field::Elem u = 0, c = 0;
  int lhs = 0, rhs = 0;      // Σ_{v+c/v=u} ζ(v) and Σ_{ε²=c} ζ(u-2ε)
  int rhs_unit = 0;          // ζ(u-2) + ζ(u+2), meaningful for c = 1
  bool pass = false;
};
// One check per (u, c) in k × k^*.
std::vector<ZetaSumCheck> zeta_sum_identity_check(const Field& F);

}  // namespace jmfl

#endif  // JMFL_GLOBAL_HPP_
