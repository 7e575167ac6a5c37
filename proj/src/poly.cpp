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

#include "jmfl/poly.hpp"

#include <algorithm>
#include <sstream>

namespace jmfl {

namespace {

const Field* pick(const Poly& a, const Poly& b) {
  const Field* F = a.field_ptr() ? a.field_ptr() : b.field_ptr();
  if (!F) throw ArithmeticError("polynomial without a field");
  if (a.field_ptr() && b.field_ptr() && a.field_ptr() != b.field_ptr())
    throw ArithmeticError("polynomials over different fields");
  return F;
}

}  // namespace

Poly::Poly(const Field& F, std::initializer_list<Elem> c) : F_(&F), c_(c.begin(), c.end()) { trim(); }

Poly::Poly(const Field& F, const std::vector<Elem>& c) : F_(&F), c_(c.begin(), c.end()) { trim(); }

Poly Poly::constant(const Field& F, Elem c) {
  Poly r(F);
  if (c) r.c_.push_back(c);
  return r;
}

Poly Poly::monomial(const Field& F, Elem c, int degree) {
  Poly r(F);
  if (c == 0) return r;
  r.c_.assign(degree + 1, 0);
  r.c_[degree] = c;
  return r;
}

Poly Poly::from_ints(const Field& F, std::initializer_list<long long> c) {
  Poly r(F);
  for (long long x : c) r.c_.push_back(F.from_int(x));
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& x : r.c_) x = F_->neg(x);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  F_ = pick(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = F_->add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  F_ = pick(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = F_->sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  const Field* F = pick(a, b);
  Poly r(*F);
  if (a.c_.empty() || b.c_.empty()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    Field::Elem x = a.c_[i];
    if (!x) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j]) r.c_[i + j] = F->add(r.c_[i + j], F->mul(x, b.c_[j]));
  }
  r.trim();
  return r;
}

Poly Poly::scaled(Elem c) const {
  Poly r(*F_);
  if (c == 0) return r;
  r.c_ = c_;
  for (auto& x : r.c_) x = F_->mul(x, c);
  return r;
}

Poly Poly::shifted(int k) const {
  Poly r(*this);
  if (c_.empty() || k == 0) return r;
  r.c_.insert(r.c_.begin(), k, 0);
  return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  const Field* F = pick(a, b);
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  rem = a;
  rem.F_ = F;
  quo = Poly(*F);
  int db = b.deg();
  if (rem.deg() < db) return;
  quo.c_.assign(rem.deg() - db + 1, 0);
  Field::Elem il = F->inv(b.lc());
  for (int k = rem.deg(); k >= db; --k) {
    Field::Elem c = rem.c_[k];
    if (!c) continue;
    Field::Elem f = F->mul(c, il);
    quo.c_[k - db] = f;
    for (int j = 0; j <= db; ++j)
      if (b.c_[j]) rem.c_[k - db + j] = F->sub(rem.c_[k - db + j], F->mul(f, b.c_[j]));
  }
  rem.trim();
  quo.trim();
}

Poly operator/(const Poly& a, const Poly& b) {
  Poly q, r;
  Poly::divmod(a, b, q, r);
  return q;
}

Poly operator%(const Poly& a, const Poly& b) {
  Poly q, r;
  Poly::divmod(a, b, q, r);
  return r;
}

bool Poly::divides_into(const Poly& a, const Poly& b, Poly& quo) {
  Poly r;
  divmod(a, b, quo, r);
  return r.is_zero();
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = a.deg(); i >= 0; --i)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(F_->inv(lc()));
}

Field::Elem Poly::eval(Elem x) const {
  Elem r = 0;
  for (int i = deg(); i >= 0; --i) r = F_->add(F_->mul(r, x), c_[i]);
  return r;
}

Poly Poly::derivative() const {
  Poly r(*F_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = F_->mul(F_->from_int(static_cast<long long>(i)), c_[i]);
  r.trim();
  return r;
}

Poly Poly::pow(int e) const {
  Poly r = constant(*F_, 1), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Poly Poly::powmod(long long e, const Poly& mod) const {
  Poly r = constant(*F_, 1) % mod, b = *this % mod;
  while (e > 0) {
    if (e & 1) r = (r * b) % mod;
    b = (b * b) % mod;
    e >>= 1;
  }
  return r;
}

Poly Poly::invmod(const Poly& mod) const {
  Poly s, t;
  Poly g = xgcd(*this % mod, mod, s, t);
  if (!g.is_one()) throw ArithmeticError("not invertible modulo " + mod.str());
  return s % mod;
}

Poly Poly::truncated(int n) const {
  Poly r(*this);
  if (static_cast<int>(r.c_.size()) > n) r.c_.resize(std::max(n, 0));
  r.trim();
  return r;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    if (!c_[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << F_->str(c_[i]);
    if (i > 0) os << "w";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
  const Field& F = a.field_ptr() ? a.field() : b.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(F, 1), s1(F), t0(F), t1 = Poly::constant(F, 1);
  while (!r1.is_zero()) {
    Poly q, r;
    Poly::divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  Field::Elem il = F.inv(r0.lc());
  s = s0.scaled(il);
  t = t0.scaled(il);
  return r0.scaled(il);
}

Field::Elem resultant(const Poly& P, const Poly& Q) {
  if (P.is_zero() || Q.is_zero()) throw ArithmeticError("resultant of a zero polynomial");
  const Field& F = P.field();
  Field::Elem acc = 1;
  Poly A = P, B = Q;
  while (true) {
    int a = A.deg(), b = B.deg();
    if (b == 0) return F.mul(acc, F.pow(B.lc(), a));
    Poly R = A % B;
    if (R.is_zero()) return 0;
    int r = R.deg();
    if ((static_cast<long long>(a) * b) % 2) acc = F.neg(acc);
    acc = F.mul(acc, F.pow(B.lc(), a - r));
    A = std::move(B);
    B = std::move(R);
  }
}

std::vector<Poly> polys_below(const Field& F, int n) {
  std::vector<Poly> out;
  long long count = 1;
  for (int i = 0; i < n; ++i) count *= F.q();
  out.reserve(static_cast<size_t>(count));
  std::vector<Field::Elem> c(std::max(n, 0), 0);
  for (long long idx = 0; idx < count; ++idx) {
    long long x = idx;
    for (int i = 0; i < n; ++i) {
      c[i] = static_cast<Field::Elem>(x % F.q());
      x /= F.q();
    }
    out.emplace_back(F, c);
  }
  return out;
}

std::vector<Poly> monic_polys(const Field& F, int degree) {
  std::vector<Poly> out;
  Poly lead = Poly::monomial(F, 1, degree);
  for (const Poly& low : polys_below(F, degree)) out.push_back(lead + low);
  return out;
}

bool is_irreducible(const Poly& P) {
  if (P.deg() < 1) return false;
  if (P.deg() == 1) return true;
  for (int d = 1; 2 * d <= P.deg(); ++d)
    for (const Poly& f : monic_polys(P.field(), d))
      if ((P % f).is_zero()) return false;
  return true;
}

std::vector<std::pair<Poly, int>> factor(const Poly& P) {
  if (P.is_zero()) throw ArithmeticError("factorisation of zero");
  std::vector<std::pair<Poly, int>> out;
  Poly f = P.monic();
  for (int d = 1; 2 * d <= f.deg(); ++d) {
    for (const Poly& g : monic_polys(P.field(), d)) {
      if (2 * d > f.deg()) break;
      int mult = 0;
      Poly quo;
      while (Poly::divides_into(f, g, quo)) {
        f = quo;
        ++mult;
      }
      if (mult) out.emplace_back(g, mult);
    }
  }
  if (f.deg() >= 1) {
    bool merged = false;
    for (auto& [g, e] : out)
      if (g == f) {
        ++e;
        merged = true;
      }
    if (!merged) out.emplace_back(f, 1);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

}  // namespace jmfl
