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


#ifndef JMFL_ORBITAL_HPP_
#define JMFL_ORBITAL_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "jmfl/cyclo.hpp"
#include "jmfl/metaplectic.hpp"
#include "jmfl/rational.hpp"

namespace jmfl {

enum class Exec { Serial, Parallel };

// Where integrality is tested: a single place, or every finite place at once
// (the global ring O = k[ϖ]).
class Locality {
 public:
  static Locality at(const Place& v) { return Locality(v.field(), v); }
  static Locality affine(const Field& F) { return Locality(F, std::nullopt); }

  bool is_local() const { return v_.has_value(); }
  const Place& place() const { return *v_; }
  const Field& field() const { return *F_; }
  bool integral(const Rat& x) const;
  // Representatives of a^{-1}O/O with zero integral part; {0} when a is a
  // unit. Globally a must be a polynomial. slack allows that many extra
  // pole orders (locally) or extra factors of ϖ (globally).
  std::vector<Rat> classes(const Rat& a, int slack = 0) const;
  // Tr res_v(x dϖ) locally, sres(x dϖ) globally.
  Field::Elem residue(const Rat& x) const;

 private:
  Locality(const Field& F, std::optional<Place> v) : F_(&F), v_(std::move(v)) {}
  const Field* F_;
  std::optional<Place> v_;
};

// t = diag(a_1, a_2/a_1, ..., a_r/a_{r-1}).
struct TorusParam {
  std::vector<Rat> a;

  int r() const { return static_cast<int>(a.size()); }
  const Field& field() const { return a.front().field(); }
  // t_i = a_i/a_{i-1}, 0-based, with a_{-1} = 1.
  Rat t(int i) const { return i == 0 ? a[0] : a[i] / a[i - 1]; }
  std::vector<Rat> diag() const;
  // v(a_i) >= 0 for i < r and v(a_r) = 0.
  bool admissible(const Place& v) const;
  static TorusParam from_polys(const std::vector<Poly>& a);
};

// n = u_2···u_r where u_k is the identity plus the column y[k-1] above the
// diagonal (0-based column k-1 holds k-1 entries).
struct CosetRep {
  std::vector<std::vector<Rat>> y;
  RMat n;
  // n_{i-1,i} for 0-based i in [1, r).
  const Rat& super(int i) const { return y[i][i - 1]; }
};

// X(t) = {n : ᵗn t n integral symmetric}. slack widens every column bound by
// that many extra pole orders (for checking the bounds themselves).
std::vector<CosetRep> enumerate_X(const TorusParam& t, const Locality& loc, Exec ex = Exec::Serial,
                                  int slack = 0);
// Y(t) = {(n, n') : ᵗn t n' integral}.
std::vector<std::pair<CosetRep, CosetRep>> enumerate_Y(const TorusParam& t, const Locality& loc,
                                                       Exec ex = Exec::Serial, int slack = 0);

// θ_α(n) = ψ(Σ α_i Tr res(n_{i-1,i})), with an extra ½ when half is set.
// alpha[j] pairs with n_{j,j+1}.
CycloValue theta(const CycloRing& R, const CosetRep& n, const std::vector<Field::Elem>& alpha,
                 const Locality& loc, bool half);

// Sums over X or Y reduced to multiplicities of (sign, residue vector); one
// enumeration serves every α.
class OrbitalProfile {
 public:
  OrbitalProfile(const Field& F, bool half) : F_(&F), half_(half) {}
  void add(const std::vector<Field::Elem>& residues, int sign);
  void merge(const OrbitalProfile& o);
  CycloValue evaluate(const CycloRing& R, const std::vector<Field::Elem>& alpha) const;
  std::int64_t cardinality() const { return card_; }
  std::size_t distinct() const { return counts_.size(); }

 private:
  const Field* F_;
  bool half_;
  std::int64_t card_ = 0;
  std::map<std::vector<Field::Elem>, std::pair<std::int64_t, std::int64_t>> counts_;  // (+1, -1)
};

struct OrbitalSum {
  CycloValue value;
  std::int64_t cardinality = 0;
};

// κ̲ at v of w₀ᵗn t n', normed to k and fed to ζ; Kubota for r = 2.
int kappa_sign(const RMat& g, const Place& v);
// w₀ᵗn t n'.
RMat jm_matrix(const TorusParam& t, const CosetRep& n, const CosetRep& np);

OrbitalProfile I_profile(const TorusParam& t, const Locality& loc, Exec ex = Exec::Serial);
// κ is applied at v iff v ∤ a_r. Globally κ is the product over the places
// dividing a_1···a_{r-1}.
OrbitalProfile J_profile(const TorusParam& t, const Locality& loc, Exec ex = Exec::Serial);

OrbitalSum I_local(const CycloRing& R, const TorusParam& t, const std::vector<Field::Elem>& alpha, const Place& v);
OrbitalSum J_local(const CycloRing& R, const TorusParam& t, const std::vector<Field::Elem>& alpha, const Place& v);

// 𝔱(t) (prime = false) or 𝔱'(t) at v.
CycloValue transfer_factor(const CycloRing& R, const TorusParam& t, const Place& v, bool prime);

// ε(t,α) = Π_{i=2}^r ζ_v(-α_i)^{v(a_{i-1})}. The enumerated sums satisfy
// J = ε·𝔱·I; ε = 1 for α = (-1,...,-1) and whenever every v(a_i) is even.
int jm_sign(const TorusParam& t, const std::vector<Field::Elem>& alpha, const Place& v);

struct JacquetMaoReport {
  CycloValue I, J, tf, tf_prime;
  int eps = 1;
  std::int64_t card_X = 0, card_Y = 0;
  bool pass = false;         // J = 𝔱I = 𝔱'I, and I = J = 0 when 𝔱 != 𝔱'
  bool pass_signed = false;  // the same with ε·𝔱 and ε·𝔱'
  std::string detail;        // empty when both pass
};
JacquetMaoReport jacquet_mao_check(const CycloRing& R, const TorusParam& t, const std::vector<Field::Elem>& alpha,
                                   const Place& v);
// Same check on precomputed profiles, for sweeps over α.
JacquetMaoReport jacquet_mao_check(const CycloRing& R, const OrbitalProfile& Ip, const OrbitalProfile& Jp,
                                   const CycloValue& tf, const CycloValue& tfp, int eps,
                                   const std::vector<Field::Elem>& alpha);

}  // namespace jmfl

#endif  // JMFL_ORBITAL_HPP_
