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

#include "jmfl/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace jmfl {

const CycloRing& CycloRing::get(int p) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloRing>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[p];
  if (!slot) {
    if (!is_odd_prime(p)) throw std::invalid_argument("cyclotomic ring needs an odd prime, got " + std::to_string(p));
    slot.reset(new CycloRing(p));
  }
  return *slot;
}

CycloRing::CycloRing(int p) : p_(p) {
  const int D = dim(), N = order();
  // Z^D = -Σ_{j<p-1} (-1)^j Z^{2j}.
  std::vector<long> top(D, 0);
  for (int j = 0; j < p - 1; ++j) top[2 * j] = (j % 2 == 0) ? -1 : 1;
  roots_.assign(N, std::vector<long>(D, 0));
  for (int e = 0; e < D; ++e) roots_[e][e] = 1;
  for (int e = D; e < N; ++e) {
    const auto& prev = roots_[e - 1];
    auto& cur = roots_[e];
    long carry = prev[D - 1];
    for (int j = D - 1; j > 0; --j) cur[j] = prev[j - 1];
    cur[0] = 0;
    for (int j = 0; j < D; ++j) cur[j] += carry * top[j];
  }
}

CycloValue::CycloValue(const CycloRing& R, long n) : R_(&R), c_(R.dim()) { c_[0] = n; }

CycloValue::CycloValue(const CycloRing& R, const mpq_class& x) : R_(&R), c_(R.dim()) { c_[0] = x; }

CycloValue CycloValue::root(const CycloRing& R, long e) {
  long N = R.order();
  e %= N;
  if (e < 0) e += N;
  CycloValue v(R);
  const auto& r = R.root(static_cast<int>(e));
  for (int j = 0; j < R.dim(); ++j) v.c_[j] = r[j];
  return v;
}

CycloValue CycloValue::psi(const CycloRing& R, const Field& F, Field::Elem x) {
  if (F.p() != R.p()) throw std::invalid_argument("characteristic mismatch in psi");
  return root(R, 4L * F.trace_prime(x));
}

CycloValue CycloValue::sqrt_p(const CycloRing& R) {
  RootSum g(R);
  for (long y = 0; y < R.p(); ++y) g.add_psi(static_cast<int>((y * y) % R.p()));
  CycloValue v = g.value();
  if (R.p() % 4 == 3) v = v.rotated(3L * R.p());
  return v;
}

CycloValue CycloValue::sqrt_q(const CycloRing& R, int m) { return sqrt_p_pow(R, m); }

CycloValue CycloValue::sqrt_p_pow(const CycloRing& R, long k) {
  long half = (k >= 0) ? k / 2 : -((-k + 1) / 2);
  mpq_class s;
  mpz_class p(R.p());
  mpz_class pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(half >= 0 ? half : -half));
  s = (half >= 0) ? mpq_class(pk) : mpq_class(1) / mpq_class(pk);
  CycloValue v(R, s);
  if (k - 2 * half == 1) v = v * sqrt_p(R);
  return v;
}

bool CycloValue::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycloValue::is_rational() const {
  for (size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return false;
  return true;
}

CycloValue CycloValue::operator-() const {
  CycloValue v = *this;
  for (auto& x : v.c_) x = -x;
  return v;
}

CycloValue& CycloValue::operator+=(const CycloValue& o) {
  if (R_ != o.R_) throw std::invalid_argument("cyclotomic ring mismatch");
  for (size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

CycloValue& CycloValue::operator-=(const CycloValue& o) {
  if (R_ != o.R_) throw std::invalid_argument("cyclotomic ring mismatch");
  for (size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

CycloValue operator*(const CycloValue& a, const CycloValue& b) {
  if (a.R_ != b.R_) throw std::invalid_argument("cyclotomic ring mismatch");
  const CycloRing& R = *a.R_;
  const int D = R.dim();
  std::vector<mpq_class> prod(2 * D - 1);
  for (int i = 0; i < D; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < D; ++j)
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  CycloValue v(R);
  for (int k = 0; k < D; ++k) v.c_[k] = prod[k];
  for (int k = D; k < 2 * D - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& r = R.root(k);
    for (int j = 0; j < D; ++j)
      if (r[j] != 0) v.c_[j] += prod[k] * r[j];
  }
  return v;
}

CycloValue CycloValue::scaled(const mpq_class& s) const {
  CycloValue v = *this;
  for (auto& x : v.c_) x *= s;
  return v;
}

CycloValue CycloValue::rotated(long e) const { return *this * root(*R_, e); }

CycloValue CycloValue::inv() const {
  if (is_zero()) throw ArithmeticError("inverse of zero cyclotomic value");
  const int D = R_->dim();
  // Columns of the multiplication-by-this matrix; solve M x = e_0.
  std::vector<std::vector<mpq_class>> M(D, std::vector<mpq_class>(D + 1));
  for (int j = 0; j < D; ++j) {
    CycloValue col = rotated(j);
    for (int i = 0; i < D; ++i) M[i][j] = col.c_[i];
  }
  M[0][D] = 1;
  for (int c = 0; c < D; ++c) {
    int piv = c;
    while (M[piv][c] == 0) ++piv;
    std::swap(M[piv], M[c]);
    mpq_class il = 1 / M[c][c];
    for (int k = c; k <= D; ++k) M[c][k] *= il;
    for (int r = 0; r < D; ++r) {
      if (r == c || M[r][c] == 0) continue;
      mpq_class f = M[r][c];
      for (int k = c; k <= D; ++k) M[r][k] -= f * M[c][k];
    }
  }
  CycloValue v(*R_);
  for (int i = 0; i < D; ++i) v.c_[i] = M[i][D];
  return v;
}

CycloValue CycloValue::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycloValue result(*R_, 1L), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const CycloValue& a, const CycloValue& b) {
  if (a.R_ != b.R_) return a.is_zero() && b.is_zero();
  return a.c_ == b.c_;
}

std::complex<double> CycloValue::to_complex() const {
  std::complex<double> s = 0;
  const double w = 2 * std::numbers::pi / R_->order();
  for (size_t j = 0; j < c_.size(); ++j)
    if (c_[j] != 0) s += c_[j].get_d() * std::polar(1.0, w * static_cast<double>(j));
  return s;
}

std::vector<std::string> CycloValue::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.push_back(x.get_str());
  return out;
}

std::string CycloValue::str() const {
  if (!R_) return "<unset>";
  std::string s;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    mpq_class x = c_[j];
    bool neg = x < 0;
    if (neg) x = -x;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    bool unit = (x == 1) && j > 0;
    if (!unit) s += x.get_str();
    if (j > 0) s += (unit ? "" : "*") + std::string("Z") + (j > 1 ? "^" + std::to_string(j) : "");
  }
  return s.empty() ? "0" : s;
}

RootSum& RootSum::operator+=(const RootSum& o) {
  for (size_t j = 0; j < n_.size(); ++j) n_[j] += o.n_[j];
  return *this;
}

std::int64_t RootSum::total_count() const {
  std::int64_t t = 0;
  for (auto x : n_) t += x;
  return t;
}

CycloValue RootSum::value() const {
  const int D = R_->dim();
  std::vector<std::int64_t> acc(D, 0);
  for (int e = 0; e < R_->order(); ++e) {
    if (!n_[e]) continue;
    const auto& r = R_->root(e);
    for (int j = 0; j < D; ++j) acc[j] += n_[e] * r[j];
  }
  CycloValue v(*R_);
  for (int j = 0; j < D; ++j) v.c_[j] = static_cast<long>(acc[j]);
  return v;
}

}  // namespace jmfl
