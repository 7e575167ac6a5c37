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

#include "jmfl/rational.hpp"

#include <sstream>

namespace jmfl {

Place Place::finite(const Poly& P) {
  if (!P.is_monic() || !is_irreducible(P)) throw ArithmeticError("place needs a monic irreducible, got " + P.str());
  Place v;
  v.P_ = P;
  return v;
}

Place Place::infinity(const Field& F) {
  Place v;
  v.inf_ = true;
  v.P_ = Poly::var(F);
  return v;
}

long long Place::residue_order() const {
  long long r = 1;
  for (int i = 0; i < degree(); ++i) r *= field().q();
  return r;
}

bool operator<(const Place& a, const Place& b) {
  if (a.inf_ != b.inf_) return !a.inf_;
  return a.P_ < b.P_;
}

std::string Place::str() const { return inf_ ? std::string("inf") : P_.str(); }

Rat::Rat(const Poly& p) : num_(p), den_(Poly::constant(p.field(), 1)) {}

Rat::Rat(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
  normalize();
}

Rat Rat::var_pow(const Field& F, int k) {
  if (k >= 0) return Rat(Poly::monomial(F, 1, k));
  return Rat(Poly::constant(F, 1), Poly::monomial(F, 1, -k), true);
}

void Rat::normalize() {
  const Field& F = den_.field();
  if (num_.is_zero()) {
    den_ = Poly::constant(F, 1);
    num_ = Poly(F);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  if (den_.lc() != 1) {
    Field::Elem c = F.inv(den_.lc());
    num_ = num_.scaled(c);
    den_ = den_.scaled(c);
  }
}

Rat operator+(const Rat& a, const Rat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return Rat(a.num_ + b.num_, a.den_, true);
  if (a.den_ == b.den_) return Rat(a.num_ + b.num_, a.den_);
  return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
  const Field& F = a.den_.field();
  if (a.is_zero() || b.is_zero()) return Rat::zero(F);
  if (a.den_.is_one() && b.den_.is_one()) return Rat(a.num_ * b.num_, a.den_, true);
  Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_one()) {
    Poly g = gcd(an, bd);
    if (!g.is_one()) {
      an = an / g;
      bd = bd / g;
    }
  }
  if (!ad.is_one()) {
    Poly g = gcd(bn, ad);
    if (!g.is_one()) {
      bn = bn / g;
      ad = ad / g;
    }
  }
  return Rat(an * bn, ad * bd, true);
}

Rat Rat::inv() const {
  if (is_zero()) throw ArithmeticError("inverse of zero rational function");
  Field::Elem c = den_.field().inv(num_.lc());
  return Rat(den_.scaled(c), num_.scaled(c), true);
}

Rat operator/(const Rat& a, const Rat& b) { return a * b.inv(); }

Rat Rat::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  return Rat(num_.pow(e), den_.pow(e), true);
}

Rat Rat::scaled(Field::Elem c) const {
  if (c == 0) return zero(den_.field());
  return Rat(num_.scaled(c), den_, true);
}

bool operator<(const Rat& a, const Rat& b) {
  if (a.num_ != b.num_) return a.num_ < b.num_;
  return a.den_ < b.den_;
}

std::string Rat::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

int valuation(const Poly& f, const Place& v) {
  if (f.is_zero()) return Rat::kInfiniteValuation;
  if (v.is_infinite()) return -f.deg();
  int k = 0;
  Poly cur = f, quo;
  while (cur.deg() >= v.poly().deg() && Poly::divides_into(cur, v.poly(), quo)) {
    cur = std::move(quo);
    ++k;
  }
  return k;
}

int valuation(const Rat& f, const Place& v) {
  if (f.is_zero()) return Rat::kInfiniteValuation;
  if (v.is_infinite()) return f.den().deg() - f.num().deg();
  return valuation(f.num(), v) - valuation(f.den(), v);
}

bool is_integral(const Rat& f, const Place& v) {
  if (f.is_zero()) return true;
  if (v.is_infinite()) return f.den().deg() >= f.num().deg();
  if (f.den().is_one()) return true;
  return (f.den() % v.poly()).deg() >= 0;
}

ResidueField::ResidueField(const Place& v) : v_(v), mod_(v.poly()) {}

Poly ResidueField::pow(const Poly& a, long long e) const {
  if (e < 0) return inv(a).powmod(-e, mod_);
  return a.powmod(e, mod_);
}

Field::Elem ResidueField::norm(const Poly& a) const {
  Poly r = reduce(a);
  if (degree() == 1 || r.is_zero()) return r.coeff(0);
  return resultant(mod_, r);
}

Field::Elem ResidueField::trace(const Poly& a) const {
  if (degree() == 1) return reduce(a).coeff(0);
  Poly s(base()), y = reduce(a);
  for (int j = 0; j < degree(); ++j) {
    s += y;
    y = y.powmod(base().q(), mod_);
  }
  if (s.deg() > 0) throw std::logic_error("trace left the base field");
  return s.coeff(0);
}

int ResidueField::quadratic_char(const Poly& a) const { return base().quadratic_char(norm(a)); }

Poly ResidueField::unit_value(const Rat& f) const {
  if (valuation(f, v_) != 0) throw ArithmeticError("not a unit at " + v_.str() + ": " + f.str());
  if (v_.is_infinite()) return Poly::constant(base(), base().div(f.num().lc(), f.den().lc()));
  return mul(f.num() % mod_, inv(f.den() % mod_));
}

Poly ResidueField::angular(const Rat& f) const {
  if (f.is_zero()) throw ArithmeticError("angular component of zero");
  if (v_.is_infinite()) return Poly::constant(base(), base().div(f.num().lc(), f.den().lc()));
  int k = valuation(f, v_);
  Poly n = f.num(), d = f.den();
  Poly Pk = mod_.pow(k >= 0 ? k : -k);
  if (k > 0) n = n / Pk;
  if (k < 0) d = d / Pk;
  return mul(n % mod_, inv(d % mod_));
}

Field::Elem sres(const Rat& f) {
  const Poly& Q = f.den();
  if (Q.deg() <= 0) return 0;
  Poly R = f.num() % Q;
  return R.coeff(Q.deg() - 1);
}

Field::Elem res_traced(const Rat& f, const Place& v) {
  if (v.is_infinite()) return f.field().neg(sres(f));
  int e = -valuation(f, v);
  if (e <= 0) return 0;
  Poly Pe = v.poly().pow(e);
  Poly B1 = f.den() / Pe;
  Poly C = ((f.num() % Pe) * B1.invmod(Pe)) % Pe;
  return C.coeff(e * v.degree() - 1);
}

Poly res_at_place(const Rat& f, const Place& v) {
  const Field& F = f.field();
  if (v.degree() == 1) return Poly::constant(F, res_traced(f, v));
  int e = -valuation(f, v);
  if (e <= 0) return Poly(F);
  const int d = v.degree();
  const Poly& P = v.poly();
  Poly Pe = P.pow(e);
  long long Qv = v.residue_order(), power = Qv;
  while (power < e) power *= Qv;
  // Tr(ϖ^j ρ) = Tr res(lift(ϖ^j) f) for j < d; solve for the coordinates of ρ.
  std::vector<std::vector<Field::Elem>> A(d, std::vector<Field::Elem>(d + 1, 0));
  ResidueField kv(v);
  for (int j = 0; j < d; ++j) {
    Poly lift = Poly::monomial(F, 1, j).powmod(power, Pe);
    A[j][d] = res_traced(f * Rat(lift), v);
    for (int i = 0; i < d; ++i) A[j][i] = kv.trace(Poly::monomial(F, 1, i + j));
  }
  for (int c = 0; c < d; ++c) {
    int piv = c;
    while (piv < d && A[piv][c] == 0) ++piv;
    if (piv == d) throw std::logic_error("degenerate trace form");
    std::swap(A[piv], A[c]);
    Field::Elem il = F.inv(A[c][c]);
    for (auto& x : A[c]) x = F.mul(x, il);
    for (int r = 0; r < d; ++r) {
      if (r == c || A[r][c] == 0) continue;
      Field::Elem m = A[r][c];
      for (int k = 0; k <= d; ++k) A[r][k] = F.sub(A[r][k], F.mul(m, A[c][k]));
    }
  }
  std::vector<Field::Elem> rho(d);
  for (int i = 0; i < d; ++i) rho[i] = A[i][d];
  return Poly(F, rho);
}

namespace {

Poly reversed(const Poly& a) {
  std::vector<Field::Elem> c(a.coeffs().rbegin(), a.coeffs().rend());
  return Poly(a.field(), c);
}

}  // namespace

Expansion expand(const Rat& f, const Place& v, int n) {
  if (f.is_zero()) throw ArithmeticError("expansion of zero");
  const Field& F = f.field();
  Expansion out;
  out.val = valuation(f, v);
  if (v.is_infinite()) {
    Poly A = reversed(f.num()), B = reversed(f.den());
    Poly un = Poly::monomial(F, 1, n);
    Poly C = ((A % un) * B.invmod(un)).truncated(n);
    for (int j = 0; j < n; ++j) out.digits.push_back(Poly::constant(F, C.coeff(j)));
    return out;
  }
  const Poly& P = v.poly();
  Poly A = f.num(), B = f.den();
  if (out.val > 0) A = A / P.pow(out.val);
  if (out.val < 0) B = B / P.pow(-out.val);
  Poly Pn = P.pow(n);
  Poly C = ((A % Pn) * B.invmod(Pn)) % Pn;
  for (int j = 0; j < n; ++j) {
    Poly q, r;
    Poly::divmod(C, P, q, r);
    out.digits.push_back(r);
    C = q;
  }
  return out;
}

Rat resum(const Expansion& e, const Place& v) {
  const Field& F = v.field();
  Rat s = Rat::zero(F);
  for (size_t j = 0; j < e.digits.size(); ++j) {
    if (e.digits[j].is_zero()) continue;
    int k = e.val + static_cast<int>(j);
    Rat pk = v.is_infinite() ? Rat::var_pow(F, -k) : (k >= 0 ? Rat(v.poly().pow(k)) : Rat(Poly::constant(F, 1), v.poly().pow(-k)));
    s += Rat(e.digits[j]) * pk;
  }
  return s;
}

Rat truncate(const Rat& f, const Place& v, int n) {
  if (f.is_zero()) return f;
  return resum(expand(f, v, n), v);
}

}  // namespace jmfl
