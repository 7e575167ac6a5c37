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


#include "jmfl/orbital.hpp"

#include <omp.h>

#include <sstream>
#include <stdexcept>

#include "jmfl/symbols.hpp"

namespace jmfl {

bool Locality::integral(const Rat& x) const { return v_ ? is_integral(x, *v_) : x.is_poly(); }

std::vector<Rat> Locality::classes(const Rat& a, int slack) const {
  const Field& F = *F_;
  if (!v_) {
    if (!a.is_poly()) throw std::invalid_argument("global coset bound needs a polynomial");
    Poly den = a.num().monic();
    if (slack > 0) den = den * Poly::monomial(F, 1, slack);
    std::vector<Rat> out;
    for (const Poly& R : polys_below(F, den.deg())) out.push_back(Rat(R, den));
    return out;
  }
  int m = valuation(a, *v_) + slack;
  if (m <= 0) return {Rat::zero(F)};
  std::vector<Poly> digits = polys_below(F, v_->degree());
  std::size_t base = digits.size();
  std::size_t total = 1;
  for (int j = 0; j < m; ++j) total *= base;
  std::vector<Rat> out;
  out.reserve(total);
  Expansion e;
  e.val = -m;
  e.digits.resize(m);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t x = idx;
    for (int j = 0; j < m; ++j) {
      e.digits[j] = digits[x % base];
      x /= base;
    }
    out.push_back(resum(e, *v_));
  }
  return out;
}

Field::Elem Locality::residue(const Rat& x) const { return v_ ? res_traced(x, *v_) : sres(x); }

std::vector<Rat> TorusParam::diag() const {
  std::vector<Rat> d;
  for (int i = 0; i < r(); ++i) d.push_back(t(i));
  return d;
}

bool TorusParam::admissible(const Place& v) const {
  for (int i = 0; i + 1 < r(); ++i)
    if (valuation(a[i], v) < 0) return false;
  return valuation(a.back(), v) == 0;
}

TorusParam TorusParam::from_polys(const std::vector<Poly>& a) {
  TorusParam t;
  for (const Poly& p : a) t.a.push_back(Rat(p));
  return t;
}

namespace {

using Column = std::vector<Rat>;

// Odometer over tuples of class indices.
bool next_tuple(std::vector<std::size_t>& idx, std::size_t base) {
  for (std::size_t& i : idx) {
    if (++i < base) return true;
    i = 0;
  }
  return false;
}

// Column c of n from y: e_c + Σ_l y[l]·col_l(n).
Column make_column(const Field& F, int r, int c, const std::vector<Column>& cols, const std::vector<Rat>& y) {
  Column col(r, Rat::zero(F));
  col[c] = Rat::one(F);
  for (int l = 0; l < c; ++l) {
    if (y[l].is_zero()) continue;
    for (int row = 0; row <= l; ++row)
      if (!cols[l][row].is_zero()) col[row] += y[l] * cols[l][row];
  }
  return col;
}

// Σ_l a_l t_l b_l over rows l <= lim.
Rat pairing(const Column& a, const std::vector<Rat>& td, const Column& b, int lim) {
  Rat s = Rat::zero(td[0].field());
  for (int l = 0; l <= lim; ++l)
    if (!a[l].is_zero() && !b[l].is_zero()) s += a[l] * td[l] * b[l];
  return s;
}

CosetRep make_rep(const Field& F, int r, const std::vector<Column>& cols, const std::vector<std::vector<Rat>>& ys) {
  CosetRep rep;
  rep.y = ys;
  rep.n = RMat(F, r);
  for (int c = 0; c < r; ++c)
    for (int row = 0; row < r; ++row) rep.n(row, c) = cols[c][row];
  return rep;
}

// Entries must be integral for i < r-1 and a_r must not have a pole.
bool degenerate(const TorusParam& t, const Locality& loc) {
  for (const Rat& a : t.a)
    if (a.is_zero()) throw std::invalid_argument("torus parameter with a zero entry");
  for (const Rat& a : t.a)
    if (!loc.integral(a)) return true;
  return false;
}

struct Domain {
  std::vector<std::vector<Rat>> classes;  // per column c >= 1
};

Domain make_domain(const TorusParam& t, const Locality& loc, int slack) {
  Domain d;
  d.classes.resize(t.r());
  for (int c = 1; c < t.r(); ++c) d.classes[c] = loc.classes(t.a[c - 1], slack);
  return d;
}

class XSearch {
 public:
  XSearch(const TorusParam& t, const Locality& loc, const Domain& d)
      : F_(t.field()), r_(t.r()), td_(t.diag()), loc_(loc), dom_(d) {}

  // Tries y as column c; on success extends cols/ys.
  bool accept(int c, std::vector<Column>& cols, std::vector<std::vector<Rat>>& ys, const std::vector<Rat>& y) const {
    Column col = make_column(F_, r_, c, cols, y);
    for (int i = 0; i <= c; ++i)
      if (!loc_.integral(pairing(i == c ? col : cols[i], td_, col, i))) return false;
    cols.push_back(std::move(col));
    ys.push_back(y);
    return true;
  }

  void dfs(int c, std::vector<Column>& cols, std::vector<std::vector<Rat>>& ys, std::vector<CosetRep>& out) const {
    if (c == r_) {
      out.push_back(make_rep(F_, r_, cols, ys));
      return;
    }
    const auto& cl = dom_.classes[c];
    std::vector<std::size_t> idx(c, 0);
    std::vector<Rat> y(c);
    do {
      for (int l = 0; l < c; ++l) y[l] = cl[idx[l]];
      if (accept(c, cols, ys, y)) {
        dfs(c + 1, cols, ys, out);
        cols.pop_back();
        ys.pop_back();
      }
    } while (next_tuple(idx, cl.size()));
  }

  std::vector<Column> root_cols() const {
    Column e0(r_, Rat::zero(F_));
    e0[0] = Rat::one(F_);
    return {e0};
  }

 private:
  const Field& F_;
  int r_;
  std::vector<Rat> td_;
  const Locality& loc_;
  const Domain& dom_;
};

class YSearch {
 public:
  YSearch(const TorusParam& t, const Locality& loc, const Domain& d)
      : F_(t.field()), r_(t.r()), td_(t.diag()), loc_(loc), dom_(d) {}

  struct State {
    std::vector<Column> cn, cp;
    std::vector<std::vector<Rat>> yn, yp;
  };

  // Column c of n: checks row c against the earlier columns of n'.
  bool accept_n(int c, State& s, const std::vector<Rat>& y) const {
    Column col = make_column(F_, r_, c, s.cn, y);
    for (int i = 0; i < c; ++i)
      if (!loc_.integral(pairing(col, td_, s.cp[i], i))) return false;
    s.cn.push_back(std::move(col));
    s.yn.push_back(y);
    return true;
  }
  // Column c of n': checks column c against columns 0..c of n.
  bool accept_p(int c, State& s, const std::vector<Rat>& y) const {
    Column col = make_column(F_, r_, c, s.cp, y);
    for (int i = 0; i <= c; ++i)
      if (!loc_.integral(pairing(s.cn[i], td_, col, i))) return false;
    s.cp.push_back(std::move(col));
    s.yp.push_back(y);
    return true;
  }
  void pop_n(State& s) const {
    s.cn.pop_back();
    s.yn.pop_back();
  }
  void pop_p(State& s) const {
    s.cp.pop_back();
    s.yp.pop_back();
  }

  void dfs(int c, State& s, std::vector<std::pair<CosetRep, CosetRep>>& out) const {
    if (c == r_) {
      out.emplace_back(make_rep(F_, r_, s.cn, s.yn), make_rep(F_, r_, s.cp, s.yp));
      return;
    }
    const auto& cl = dom_.classes[c];
    std::vector<std::size_t> idx(c, 0);
    std::vector<Rat> y(c), yp(c);
    do {
      for (int l = 0; l < c; ++l) y[l] = cl[idx[l]];
      if (!accept_n(c, s, y)) continue;
      std::vector<std::size_t> jdx(c, 0);
      do {
        for (int l = 0; l < c; ++l) yp[l] = cl[jdx[l]];
        if (accept_p(c, s, yp)) {
          dfs(c + 1, s, out);
          pop_p(s);
        }
      } while (next_tuple(jdx, cl.size()));
      pop_n(s);
    } while (next_tuple(idx, cl.size()));
  }

  State root() const {
    State s;
    Column e0(r_, Rat::zero(F_));
    e0[0] = Rat::one(F_);
    s.cn = {e0};
    s.cp = {e0};
    s.yn = {{}};
    s.yp = {{}};
    // ᵗn t n' at (0,0) is t_0.
    return s;
  }

 private:
  const Field& F_;
  int r_;
  std::vector<Rat> td_;
  const Locality& loc_;
  const Domain& dom_;
};

template <class T>
std::vector<T> concat(std::vector<std::vector<T>>& parts) {
  std::vector<T> out;
  for (auto& p : parts)
    for (auto& x : p) out.push_back(std::move(x));
  return out;
}

}  // namespace

std::vector<CosetRep> enumerate_X(const TorusParam& t, const Locality& loc, Exec ex, int slack) {
  if (degenerate(t, loc)) return {};
  const Field& F = t.field();
  int r = t.r();
  std::vector<Rat> td = t.diag();
  if (!loc.integral(td[0])) return {};
  Domain dom = make_domain(t, loc, slack);
  XSearch S(t, loc, dom);
  if (r == 1) {
    std::vector<Column> cols = S.root_cols();
    std::vector<std::vector<Rat>> ys{{}};
    return {make_rep(F, r, cols, ys)};
  }
  // Column 1 has a single entry; its classes are the parallel work items.
  const auto& first = dom.classes[1];
  std::vector<std::vector<CosetRep>> parts(first.size());
  auto work = [&](std::size_t k) {
    std::vector<Column> cols = S.root_cols();
    std::vector<std::vector<Rat>> ys{{}};
    if (S.accept(1, cols, ys, {first[k]})) S.dfs(2, cols, ys, parts[k]);
  };
  if (ex == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < static_cast<long>(first.size()); ++k) work(k);
  } else {
    for (std::size_t k = 0; k < first.size(); ++k) work(k);
  }
  return concat(parts);
}

std::vector<std::pair<CosetRep, CosetRep>> enumerate_Y(const TorusParam& t, const Locality& loc, Exec ex,
                                                       int slack) {
  if (degenerate(t, loc)) return {};
  const Field& F = t.field();
  int r = t.r();
  std::vector<Rat> td = t.diag();
  if (!loc.integral(td[0])) return {};
  Domain dom = make_domain(t, loc, slack);
  YSearch S(t, loc, dom);
  if (r == 1) {
    auto s = S.root();
    return {{make_rep(F, r, s.cn, s.yn), make_rep(F, r, s.cp, s.yp)}};
  }
  const auto& first = dom.classes[1];
  std::size_t m = first.size();
  std::vector<std::vector<std::pair<CosetRep, CosetRep>>> parts(m * m);
  auto work = [&](std::size_t k) {
    auto s = S.root();
    if (!S.accept_n(1, s, {first[k / m]})) return;
    if (S.accept_p(1, s, {first[k % m]})) S.dfs(2, s, parts[k]);
  };
  if (ex == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < static_cast<long>(m * m); ++k) work(k);
  } else {
    for (std::size_t k = 0; k < m * m; ++k) work(k);
  }
  return concat(parts);
}

CycloValue theta(const CycloRing& R, const CosetRep& n, const std::vector<Field::Elem>& alpha, const Locality& loc,
                 bool half) {
  const Field& F = loc.field();
  Field::Elem s = 0;
  for (std::size_t j = 0; j < alpha.size(); ++j) s = F.add(s, F.mul(alpha[j], loc.residue(n.super(j + 1))));
  if (half) s = F.mul(s, F.half());
  return CycloValue::psi(R, F, s);
}

void OrbitalProfile::add(const std::vector<Field::Elem>& residues, int sign) {
  auto& c = counts_[residues];
  (sign > 0 ? c.first : c.second) += 1;
  ++card_;
}

void OrbitalProfile::merge(const OrbitalProfile& o) {
  for (const auto& [k, c] : o.counts_) {
    auto& d = counts_[k];
    d.first += c.first;
    d.second += c.second;
  }
  card_ += o.card_;
}

CycloValue OrbitalProfile::evaluate(const CycloRing& R, const std::vector<Field::Elem>& alpha) const {
  const Field& F = *F_;
  RootSum sum(R);
  for (const auto& [res, c] : counts_) {
    Field::Elem s = 0;
    for (std::size_t j = 0; j < alpha.size(); ++j) s = F.add(s, F.mul(alpha[j], res[j]));
    if (half_) s = F.mul(s, F.half());
    sum.add(4L * F.trace_prime(s), c.first - c.second);
  }
  return sum.value();
}

int kappa_sign(const RMat& g, const Place& v) {
  Poly k = g.size() == 2 ? kappa_kubota(g, v) : kappa_general(g, v);
  return zeta_char(ResidueField(v), k);
}

RMat jm_matrix(const TorusParam& t, const CosetRep& n, const CosetRep& np) {
  const Field& F = t.field();
  return RMat::w0(F, t.r()) * n.n.transpose() * RMat::diag(t.diag()) * np.n;
}

namespace {

std::vector<Field::Elem> residues(const CosetRep& n, const Locality& loc) {
  std::vector<Field::Elem> out;
  for (std::size_t i = 1; i < n.y.size(); ++i) out.push_back(loc.residue(n.super(static_cast<int>(i))));
  return out;
}

}  // namespace

OrbitalProfile I_profile(const TorusParam& t, const Locality& loc, Exec ex) {
  OrbitalProfile prof(t.field(), false);
  for (const CosetRep& n : enumerate_X(t, loc, ex)) prof.add(residues(n, loc), 1);
  return prof;
}

OrbitalProfile J_profile(const TorusParam& t, const Locality& loc, Exec ex) {
  const Field& F = t.field();
  OrbitalProfile prof(F, true);
  std::vector<Place> kplaces;
  if (loc.is_local()) {
    if (valuation(t.a.back(), loc.place()) == 0) kplaces.push_back(loc.place());
  } else {
    Poly prod = Poly::constant(F, 1);
    for (int i = 0; i + 1 < t.r(); ++i) prod = prod * t.a[i].num();
    if (!t.a.back().is_poly() || gcd(prod, t.a.back().num()).deg() > 0)
      throw std::invalid_argument("J_profile: a_r must be coprime to a_1···a_{r-1}");
    if (!prod.is_constant())
      for (const auto& [P, e] : factor(prod)) kplaces.push_back(Place::finite(P));
  }
  auto Y = enumerate_Y(t, loc, ex);
  std::vector<int> signs(Y.size(), 1);
  std::vector<std::vector<Field::Elem>> res(Y.size());
  auto work = [&](std::size_t k) {
    const auto& [n, np] = Y[k];
    std::vector<Field::Elem> a = residues(n, loc), b = residues(np, loc);
    for (std::size_t j = 0; j < a.size(); ++j) a[j] = F.add(a[j], b[j]);
    res[k] = std::move(a);
    if (kplaces.empty()) return;
    RMat g = jm_matrix(t, n, np);
    for (const Place& v : kplaces) signs[k] *= kappa_sign(g, v);
  };
  if (ex == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < static_cast<long>(Y.size()); ++k) work(k);
  } else {
    for (std::size_t k = 0; k < Y.size(); ++k) work(k);
  }
  for (std::size_t k = 0; k < Y.size(); ++k) prof.add(res[k], signs[k]);
  return prof;
}

OrbitalSum I_local(const CycloRing& R, const TorusParam& t, const std::vector<Field::Elem>& alpha, const Place& v) {
  OrbitalProfile p = I_profile(t, Locality::at(v));
  return {p.evaluate(R, alpha), p.cardinality()};
}

OrbitalSum J_local(const CycloRing& R, const TorusParam& t, const std::vector<Field::Elem>& alpha, const Place& v) {
  OrbitalProfile p = J_profile(t, Locality::at(v));
  return {p.evaluate(R, alpha), p.cardinality()};
}

CycloValue transfer_factor(const CycloRing& R, const TorusParam& t, const Place& v, bool prime) {
  const Field& F = t.field();
  int r = t.r();
  long sumv = 0;
  for (int i = 0; i + 1 < r; ++i) sumv += valuation(t.a[i], v);
  CycloValue out = CycloValue::sqrt_p_pow(R, static_cast<long>(F.m()) * v.degree() * sumv);
  long e = 0;
  for (int j = 1; j <= r; ++j) {
    bool same = (j % 2) == (r % 2);
    if (same != prime) continue;
    e += valuation(t.a[j - 1], v);
    out *= weil_gamma(R, t.t(j - 1), v);
  }
  ResidueField kv(v);
  if ((e & 1) && zeta_char(kv, Poly::constant(F, F.neg(1))) < 0) out = -out;
  return out;
}

int jm_sign(const TorusParam& t, const std::vector<Field::Elem>& alpha, const Place& v) {
  const Field& F = t.field();
  ResidueField kv(v);
  int s = 1;
  for (std::size_t j = 0; j < alpha.size(); ++j)
    if (valuation(t.a[j], v) & 1) s *= zeta_char(kv, Poly::constant(F, F.neg(alpha[j])));
  return s;
}

namespace {

std::string identity_failures(const CycloValue& I, const CycloValue& J, const CycloValue& tf, const CycloValue& tfp) {
  std::string out;
  if (J != tf * I) out += "J != t*I; ";
  if (J != tfp * I) out += "J != t'*I; ";
  if (tf != tfp && !(I.is_zero() && J.is_zero())) out += "t != t' but I, J not both zero; ";
  return out;
}

}  // namespace

JacquetMaoReport jacquet_mao_check(const CycloRing& R, const OrbitalProfile& Ip, const OrbitalProfile& Jp,
                                   const CycloValue& tf, const CycloValue& tfp, int eps,
                                   const std::vector<Field::Elem>& alpha) {
  JacquetMaoReport rep;
  rep.I = Ip.evaluate(R, alpha);
  rep.J = Jp.evaluate(R, alpha);
  rep.tf = tf;
  rep.tf_prime = tfp;
  rep.eps = eps;
  rep.card_X = Ip.cardinality();
  rep.card_Y = Jp.cardinality();
  std::string lit = identity_failures(rep.I, rep.J, tf, tfp);
  std::string sgn = eps == 1 ? lit : identity_failures(rep.I, rep.J, -tf, -tfp);
  rep.pass = lit.empty();
  rep.pass_signed = sgn.empty();
  if (!rep.pass || !rep.pass_signed) {
    std::ostringstream os;
    if (!rep.pass) os << "literal: " << lit;
    if (!rep.pass_signed) os << "signed: " << sgn;
    os << "I=" << rep.I.str() << " J=" << rep.J.str() << " t=" << tf.str() << " t'=" << tfp.str() << " eps=" << eps;
    rep.detail = os.str();
  }
  return rep;
}

JacquetMaoReport jacquet_mao_check(const CycloRing& R, const TorusParam& t, const std::vector<Field::Elem>& alpha,
                                   const Place& v) {
  Locality loc = Locality::at(v);
  if (!t.admissible(v)) {
    JacquetMaoReport rep;
    rep.detail = "t not admissible at " + v.str();
    return rep;
  }
  return jacquet_mao_check(R, I_profile(t, loc), J_profile(t, loc), transfer_factor(R, t, v, false),
                           transfer_factor(R, t, v, true), jm_sign(t, alpha, v), alpha);
}

}  // namespace jmfl
