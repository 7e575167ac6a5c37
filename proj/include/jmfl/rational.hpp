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

#ifndef JMFL_RATIONAL_HPP_
#define JMFL_RATIONAL_HPP_

#include <climits>
#include <string>
#include <vector>

#include "jmfl/poly.hpp"

namespace jmfl {

// A place of k(ϖ): a monic irreducible P, or the place at infinity with
// uniformizer 1/ϖ.
class Place {
 public:
  static Place finite(const Poly& P);  // throws unless P is monic irreducible
  static Place infinity(const Field& F);
  static Place origin(const Field& F) { return finite(Poly::var(F)); }

  bool is_infinite() const { return inf_; }
  const Poly& poly() const { return P_; }  // ϖ for the infinite place
  int degree() const { return inf_ ? 1 : P_.deg(); }
  const Field& field() const { return P_.field(); }
  // Order of the residue field, q^degree.
  long long residue_order() const;

  friend bool operator==(const Place& a, const Place& b) { return a.inf_ == b.inf_ && a.P_ == b.P_; }
  friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
  friend bool operator<(const Place& a, const Place& b);
  std::string str() const;

 private:
  bool inf_ = false;
  Poly P_;
};

// Exact element of k(ϖ): reduced fraction with monic denominator.
class Rat {
 public:
  static constexpr int kInfiniteValuation = INT_MAX;

  Rat() = default;
  explicit Rat(const Poly& p);
  Rat(const Poly& num, const Poly& den);  // throws on a zero denominator
  static Rat constant(const Field& F, Field::Elem c) { return Rat(Poly::constant(F, c)); }
  static Rat zero(const Field& F) { return Rat(Poly(F)); }
  static Rat one(const Field& F) { return constant(F, 1); }
  static Rat var(const Field& F) { return Rat(Poly::var(F)); }
  // ϖ^k for any integer k.
  static Rat var_pow(const Field& F, int k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const Field& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_poly() const { return den_.is_one(); }

  Rat operator-() const { return Rat(-num_, den_, true); }
  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat inv() const;
  Rat pow(int e) const;
  Rat scaled(Field::Elem c) const;

  friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b);

  std::string str() const;

 private:
  Rat(Poly num, Poly den, bool /*trusted*/) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  Poly num_, den_;
};

// Valuation at a place; kInfiniteValuation for zero.
int valuation(const Poly& f, const Place& v);
int valuation(const Rat& f, const Place& v);
bool is_integral(const Rat& f, const Place& v);

// Residue field k_v = k[ϖ]/(P) (k itself at infinity). Elements are
// polynomials of degree < deg P.
class ResidueField {
 public:
  explicit ResidueField(const Place& v);
  const Place& place() const { return v_; }
  const Field& base() const { return v_.field(); }
  int degree() const { return v_.degree(); }

  Poly one() const { return Poly::constant(base(), 1); }
  Poly reduce(const Poly& a) const { return a % mod_; }
  Poly mul(const Poly& a, const Poly& b) const { return (a * b) % mod_; }
  Poly inv(const Poly& a) const { return a.invmod(mod_); }
  Poly div(const Poly& a, const Poly& b) const { return mul(a, inv(b)); }
  Poly pow(const Poly& a, long long e) const;
  Poly neg(const Poly& a) const { return -a; }
  // N_{k_v/k} and Tr_{k_v/k}.
  Field::Elem norm(const Poly& a) const;
  Field::Elem trace(const Poly& a) const;
  // Quadratic character of k_v, via the norm.
  int quadratic_char(const Poly& a) const;
  // Residue class of a valuation-zero element; throws otherwise.
  Poly unit_value(const Rat& f) const;
  // Residue class of f·π^{-v(f)} with π = P (finite) or 1/ϖ (infinity).
  Poly angular(const Rat& f) const;

 private:
  Place v_;
  Poly mod_;
};

// Sum of the residues of f dϖ over all finite places, traced to k: the
// coefficient of ϖ^{deg Q - 1} of R, where f = poly + R/Q, Q monic.
Field::Elem sres(const Rat& f);
// Tr_{k_v/k} res_v(f dϖ). At infinity this is -sres(f).
Field::Elem res_traced(const Rat& f, const Place& v);
// res_v(f dϖ) as an element of k_v.
Poly res_at_place(const Rat& f, const Place& v);

// Expansion f = Σ_{j<n} digits[j] π^{val+j} + O(π^{val+n}), digits of degree
// < deg v. π = P at finite places and 1/ϖ at infinity.
struct Expansion {
  int val = 0;
  std::vector<Poly> digits;
};
Expansion expand(const Rat& f, const Place& v, int n);
// The rational function Σ digits[j] π^{val+j}.
Rat resum(const Expansion& e, const Place& v);
// f truncated to the classes modulo π^{val(f)+n}.
Rat truncate(const Rat& f, const Place& v, int n);

}  // namespace jmfl

#endif  // JMFL_RATIONAL_HPP_
