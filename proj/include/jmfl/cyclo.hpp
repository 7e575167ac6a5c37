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

#ifndef JMFL_CYCLO_HPP_
#define JMFL_CYCLO_HPP_

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "jmfl/field.hpp"

namespace jmfl {

// ℚ(ζ_{4p}) = ℚ[Z]/Φ_{4p}(Z) with Φ_{4p}(Z) = Φ_p(-Z²). ζ_p = Z^4, i = Z^p.
// Under the complex embedding Z ↦ e^{2πi/4p} the constant sqrt_p is the
// positive square root of p.
class CycloRing {
 public:
  static const CycloRing& get(int p);

  int p() const { return p_; }
  int order() const { return 4 * p_; }  // N = 4p
  int dim() const { return 2 * (p_ - 1); }
  // Coordinates of Z^e, 0 <= e < 4p.
  const std::vector<long>& root(int e) const { return roots_[e]; }

 private:
  explicit CycloRing(int p);
  int p_;
  std::vector<std::vector<long>> roots_;
};

class CycloValue {
 public:
  CycloValue() = default;
  explicit CycloValue(const CycloRing& R, long n = 0);
  CycloValue(const CycloRing& R, const mpq_class& x);

  // Z^e for any integer e.
  static CycloValue root(const CycloRing& R, long e);
  static CycloValue zeta_p(const CycloRing& R) { return root(R, 4); }
  static CycloValue i(const CycloRing& R) { return root(R, R.p()); }
  // ψ(x) = ζ_p^{Tr_{GF(q)/GF(p)} x}.
  static CycloValue psi(const CycloRing& R, const Field& F, Field::Elem x);
  // Positive √p, and √q = p^{⌊m/2⌋} √p^{m mod 2}.
  static CycloValue sqrt_p(const CycloRing& R);
  static CycloValue sqrt_q(const CycloRing& R, int m);
  // (√p)^k for any integer k.
  static CycloValue sqrt_p_pow(const CycloRing& R, long k);

  const CycloRing& ring() const { return *R_; }
  bool valid() const { return R_ != nullptr; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  mpq_class rational_part() const { return c_.empty() ? mpq_class(0) : c_[0]; }

  CycloValue operator-() const;
  CycloValue& operator+=(const CycloValue& o);
  CycloValue& operator-=(const CycloValue& o);
  CycloValue& operator*=(const CycloValue& o) { return *this = *this * o; }
  friend CycloValue operator+(CycloValue a, const CycloValue& b) { return a += b; }
  friend CycloValue operator-(CycloValue a, const CycloValue& b) { return a -= b; }
  friend CycloValue operator*(const CycloValue& a, const CycloValue& b);
  friend CycloValue operator/(const CycloValue& a, const CycloValue& b) { return a * b.inv(); }
  CycloValue scaled(const mpq_class& s) const;
  // Multiply by Z^e.
  CycloValue rotated(long e) const;
  CycloValue inv() const;  // throws ArithmeticError on zero
  CycloValue pow(long e) const;

  friend bool operator==(const CycloValue& a, const CycloValue& b);
  friend bool operator!=(const CycloValue& a, const CycloValue& b) { return !(a == b); }

  std::complex<double> to_complex() const;
  // Power-basis coefficients as exact strings.
  std::vector<std::string> coeff_strings() const;
  std::string str() const;

 private:
  friend class RootSum;
  const CycloRing* R_ = nullptr;
  std::vector<mpq_class> c_;
};

// Integer multiplicities of the 4p-th roots of unity; exact sums of roots
// without rational arithmetic in the inner loop.
class RootSum {
 public:
  explicit RootSum(const CycloRing& R) : R_(&R), n_(R.order(), 0) {}
  void add(long e, std::int64_t mult = 1) { n_[mod(e)] += mult; }
  void add_psi(int tr, int sign = 1) { n_[mod(4L * tr)] += sign; }
  RootSum& operator+=(const RootSum& o);
  std::int64_t total_count() const;
  const std::vector<std::int64_t>& counts() const { return n_; }
  CycloValue value() const;

 private:
  long mod(long e) const {
    long N = R_->order();
    e %= N;
    return e < 0 ? e + N : e;
  }
  const CycloRing* R_;
  std::vector<std::int64_t> n_;
};

}  // namespace jmfl

#endif  // JMFL_CYCLO_HPP_
