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

#ifndef JMFL_POLY_HPP_
#define JMFL_POLY_HPP_

#include <boost/container/small_vector.hpp>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "jmfl/field.hpp"

namespace jmfl {

// Dense univariate polynomial in the variable ϖ over GF(q), low to high.
// The zero polynomial has degree -1.
class Poly {
 public:
  using Elem = Field::Elem;
  using Coeffs = boost::container::small_vector<Elem, 16>;

  Poly() = default;
  explicit Poly(const Field& F) : F_(&F) {}
  Poly(const Field& F, std::initializer_list<Elem> c);
  Poly(const Field& F, const std::vector<Elem>& c);

  static Poly constant(const Field& F, Elem c);
  static Poly monomial(const Field& F, Elem c, int degree);
  static Poly var(const Field& F) { return monomial(F, 1, 1); }
  // Integer coefficients, reduced into the prime field.
  static Poly from_ints(const Field& F, std::initializer_list<long long> c);

  const Field& field() const { return *F_; }
  const Field* field_ptr() const { return F_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Elem lc() const { return c_.empty() ? 0 : c_.back(); }
  Elem coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0; }
  const Coeffs& coeffs() const { return c_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(Elem c) const;
  Poly shifted(int k) const;  // times ϖ^k, k >= 0

  // Euclidean division; throws ArithmeticError on a zero divisor.
  static void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
  friend Poly operator/(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);
  // Exact quotient when b | a; returns false otherwise.
  static bool divides_into(const Poly& a, const Poly& b, Poly& quo);

  Poly monic() const;
  Elem eval(Elem x) const;
  Poly derivative() const;
  Poly pow(int e) const;
  Poly powmod(long long e, const Poly& mod) const;
  // Inverse modulo `mod`; throws when not coprime.
  Poly invmod(const Poly& mod) const;
  Poly truncated(int n) const;  // mod ϖ^n

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  // Degree first, then coefficients from the top; a total order for keys.
  friend bool operator<(const Poly& a, const Poly& b);

  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  const Field* F_ = nullptr;
  Coeffs c_;
};

Poly gcd(Poly a, Poly b);  // monic, gcd(0,0)=0
// g = s*a + t*b with g monic.
Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t);
// lc(P)^{deg Q} Π Q(roots of P). Throws on a zero argument.
Field::Elem resultant(const Poly& P, const Poly& Q);

bool is_irreducible(const Poly& P);
// Monic irreducible factors with multiplicities, sorted by the Poly order;
// the leading coefficient is dropped. Throws on zero.
std::vector<std::pair<Poly, int>> factor(const Poly& P);
// All monic polynomials of the given degree, in enumeration order.
std::vector<Poly> monic_polys(const Field& F, int degree);
// All polynomials of degree < n (including zero).
std::vector<Poly> polys_below(const Field& F, int n);

}  // namespace jmfl

#endif  // JMFL_POLY_HPP_
