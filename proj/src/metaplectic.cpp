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

#include "jmfl/metaplectic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "jmfl/symbols.hpp"

namespace jmfl {

RMat::RMat(const Field& F, int r) : F_(&F), r_(r), a_(static_cast<size_t>(r) * r, Rat::zero(F)) {}

RMat RMat::identity(const Field& F, int r) {
  RMat m(F, r);
  for (int i = 0; i < r; ++i) m(i, i) = Rat::one(F);
  return m;
}

RMat RMat::diag(const std::vector<Rat>& d) {
  RMat m(d.at(0).field(), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RMat RMat::perm(const Field& F, const std::vector<int>& perm) {
  RMat m(F, static_cast<int>(perm.size()));
  for (size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = Rat::one(F);
  return m;
}

RMat RMat::from_elems(const Field& F, int r, const std::vector<Field::Elem>& e) {
  RMat m(F, r);
  for (int i = 0; i < r * r; ++i) m.a_[i] = Rat::constant(F, e.at(i));
  return m;
}

RMat RMat::w0(const Field& F, int r) {
  std::vector<int> p(r);
  for (int j = 0; j < r; ++j) p[j] = r - 1 - j;
  return perm(F, p);
}

RMat RMat::elementary(const Field& F, int r, int i, int j, const Rat& c) {
  RMat m = identity(F, r);
  m(i, j) += c;
  return m;
}

RMat operator*(const RMat& a, const RMat& b) {
  const int r = a.r_;
  RMat m(*a.F_, r);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      const Rat& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < r; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

RMat RMat::transpose() const {
  RMat m(*F_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Rat RMat::det() const {
  RMat m = *this;
  Rat d = Rat::one(*F_);
  for (int c = 0; c < r_; ++c) {
    int piv = c;
    while (piv < r_ && m(piv, c).is_zero()) ++piv;
    if (piv == r_) return Rat::zero(*F_);
    if (piv != c) {
      for (int k = 0; k < r_; ++k) std::swap(m(piv, k), m(c, k));
      d = -d;
    }
    d *= m(c, c);
    Rat il = m(c, c).inv();
    for (int i = c + 1; i < r_; ++i) {
      if (m(i, c).is_zero()) continue;
      Rat f = m(i, c) * il;
      for (int k = c; k < r_; ++k) m(i, k) -= f * m(c, k);
    }
  }
  return d;
}

RMat RMat::inverse() const {
  RMat m = *this, inv = identity(*F_, r_);
  for (int c = 0; c < r_; ++c) {
    int piv = c;
    while (piv < r_ && m(piv, c).is_zero()) ++piv;
    if (piv == r_) throw ArithmeticError("singular matrix");
    for (int k = 0; k < r_; ++k) {
      std::swap(m(piv, k), m(c, k));
      std::swap(inv(piv, k), inv(c, k));
    }
    Rat il = m(c, c).inv();
    for (int k = 0; k < r_; ++k) {
      m(c, k) *= il;
      inv(c, k) *= il;
    }
    for (int i = 0; i < r_; ++i) {
      if (i == c || m(i, c).is_zero()) continue;
      Rat f = m(i, c);
      for (int k = 0; k < r_; ++k) {
        m(i, k) -= f * m(c, k);
        inv(i, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

bool RMat::is_upper_unipotent() const {
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j <= i; ++j)
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
  return true;
}

bool RMat::is_diagonal() const {
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool RMat::is_integral(const Place& v) const {
  for (const Rat& x : a_)
    if (!jmfl::is_integral(x, v)) return false;
  return true;
}

bool RMat::in_GL_O(const Place& v) const {
  if (!is_integral(v)) return false;
  Rat d = det();
  return !d.is_zero() && valuation(d, v) == 0;
}

std::string RMat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < r_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
  }
  os << "]";
  return os.str();
}

Poly poly_det(const std::vector<Poly>& m, int r) {
  if (r == 0) throw std::invalid_argument("poly_det of an empty matrix needs a field");
  if (r == 1) return m[0];
  if (r == 2) return m[0] * m[3] - m[1] * m[2];
  Poly acc(m[0].field());
  std::vector<Poly> sub(static_cast<size_t>(r - 1) * (r - 1));
  for (int j = 0; j < r; ++j) {
    if (m[j].is_zero()) continue;
    for (int i = 1; i < r; ++i)
      for (int k = 0, kk = 0; k < r; ++k)
        if (k != j) sub[(i - 1) * (r - 1) + kk++] = m[i * r + k];
    Poly term = m[j] * poly_det(sub, r - 1);
    acc = (j % 2) ? acc - term : acc + term;
  }
  return acc;
}

RMat BruhatData::middle() const {
  const Field& F = t.at(0).field();
  return RMat::diag(t) * RMat::perm(F, perm);
}

BruhatData bruhat(const RMat& g) {
  const Field& F = g.field();
  const int r = g.size();
  BruhatData b{RMat::identity(F, r), RMat::identity(F, r), std::vector<Rat>(r, Rat::zero(F)), std::vector<int>(r, -1)};
  RMat cur = g;
  std::vector<char> used(r, 0);
  for (int i = r - 1; i >= 0; --i) {
    int j = 0;
    while (j < r && (used[j] || cur(i, j).is_zero())) ++j;
    if (j == r) throw ArithmeticError("Bruhat decomposition of a singular matrix");
    used[j] = 1;
    b.perm[j] = i;
    b.t[i] = cur(i, j);
    Rat il = cur(i, j).inv();
    for (int jj = j + 1; jj < r; ++jj) {
      if (cur(i, jj).is_zero()) continue;
      Rat c = -(cur(i, jj) * il);
      for (int k = 0; k < r; ++k)
        if (!cur(k, j).is_zero()) cur(k, jj) += c * cur(k, j);
      for (int k = 0; k < r; ++k)
        if (!b.np(jj, k).is_zero()) b.np(j, k) -= c * b.np(jj, k);
    }
    for (int ii = 0; ii < i; ++ii) {
      if (cur(ii, j).is_zero()) continue;
      Rat c = -(cur(ii, j) * il);
      for (int k = 0; k < r; ++k)
        if (!cur(i, k).is_zero()) cur(ii, k) += c * cur(i, k);
      for (int k = 0; k < r; ++k)
        if (!b.n(k, ii).is_zero()) b.n(k, i) -= c * b.n(k, ii);
    }
  }
  return b;
}

namespace {

// det(g[rows, cols]) with g = y + ϖId; empty selections give 1.
Poly sub_det(const Field& F, int r, const std::vector<Field::Elem>& y, const std::vector<int>& rows,
             const std::vector<int>& cols) {
  const int s = static_cast<int>(rows.size());
  if (s == 0) return Poly::constant(F, 1);
  std::vector<Poly> m(static_cast<size_t>(s) * s);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) {
      Field::Elem e = y[rows[a] * r + cols[b]];
      m[a * s + b] = rows[a] == cols[b] ? Poly(F, {e, 1}) : Poly::constant(F, e);
    }
  return poly_det(m, s);
}

std::vector<int> range1(int lo, int hi) {  // 1-based [lo, hi] to 0-based indices
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i - 1);
  return v;
}

std::vector<int> without(std::vector<int> v, int x) {
  v.erase(std::remove(v.begin(), v.end(), x - 1), v.end());
  return v;
}

Rat sign_rat(const Field& F, int e) { return Rat::constant(F, (e % 2) ? F.from_int(-1) : 1); }

}  // namespace

std::vector<Poly> minor_invariants(const Field& F, int r, const std::vector<Field::Elem>& y) {
  std::vector<Poly> a;
  for (int i = 1; i <= r; ++i) a.push_back(sub_det(F, r, y, range1(1, i), range1(1, i)));
  return a;
}

BruhatData bruhat_minors(const Field& F, int r, const std::vector<Field::Elem>& y, RMat* ninv, RMat* npinv) {
  std::vector<Poly> a = minor_invariants(F, r, y);
  for (const Poly& ai : a)
    if (ai.is_zero()) throw ArithmeticError("vanishing principal minor");
  auto lead = [&](int k) { return k == 0 ? Poly::constant(F, 1) : a[k - 1]; };
  BruhatData b{RMat::identity(F, r), RMat::identity(F, r), std::vector<Rat>(r, Rat::zero(F)), std::vector<int>(r)};
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      std::vector<int> rows = range1(1, r - j);
      rows.push_back(r - i);
      b.n(i - 1, j - 1) = Rat(sub_det(F, r, y, rows, range1(1, r + 1 - j)), lead(r + 1 - j));
      b.np(i - 1, j - 1) =
          sign_rat(F, j - i) * Rat(sub_det(F, r, y, range1(1, j - 1), without(range1(1, j), i)), lead(j - 1));
    }
  // The signed minors above are the entries of n'^{-1}.
  if (npinv) *npinv = b.np;
  b.np = b.np.inverse();
  if (ninv) {
    *ninv = RMat::identity(F, r);
    for (int i = 1; i <= r; ++i)
      for (int j = i + 1; j <= r; ++j)
        (*ninv)(i - 1, j - 1) = sign_rat(F, j - i) *
                                Rat(sub_det(F, r, y, without(range1(1, r + 1 - i), r + 1 - j), range1(1, r - i)), lead(r - i));
  }
  // w₀·D(a_1, a_2/a_1, ...) = D(reversed)·w₀.
  for (int k = 0; k < r; ++k) {
    b.t[r - 1 - k] = Rat(a[k], lead(k));
    b.perm[k] = r - 1 - k;
  }
  return b;
}

Poly chi_torus(const std::vector<Rat>& t, const std::vector<Rat>& tp, const Place& v) {
  ResidueField kv(v);
  Poly acc = kv.one();
  const int r = static_cast<int>(t.size());
  for (int i = 0; i < r; ++i) {
    int vi = valuation(t[i], v);
    for (int j = i + 1; j < r; ++j) {
      if (vi == 0 && valuation(tp[j], v) == 0) continue;
      acc = kv.mul(acc, tame_symbol(t[i], tp[j], v));
    }
  }
  return acc;
}

Poly chi_alpha_torus(int l, const std::vector<Rat>& t, const Place& v) {
  ResidueField kv(v);
  Poly s = kv.inv(tame_symbol(t[l], t[l + 1], v));
  Rat det = Rat::one(v.field());
  for (const Rat& x : t) det *= x;
  int e = valuation(t[l], v) - valuation(t[l + 1], v) + valuation(det, v);
  return (e % 2) ? kv.neg(s) : s;
}

namespace {

std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  for (size_t j = 0; j < p.size(); ++j) q[p[j]] = static_cast<int>(j);
  return q;
}

std::vector<int> transposition(int r, int l) {
  std::vector<int> s(r);
  std::iota(s.begin(), s.end(), 0);
  std::swap(s[l], s[l + 1]);
  return s;
}

// χ(s_l, g) = χ(B(s_l g) B(g)^{-1}, B(g)).
Poly chi_alpha(int l, const RMat& g, const Place& v) {
  const Field& F = g.field();
  const int r = g.size();
  BruhatData bg = bruhat(g);
  BruhatData bs = bruhat(RMat::perm(F, transposition(r, l)) * g);
  // X = t_s w_s w_g^{-1} t_g^{-1} = t_X w_σ, σ = π_s π_g^{-1}.
  std::vector<int> ginv = inverse_perm(bg.perm), sigma(r);
  for (int j = 0; j < r; ++j) sigma[j] = bs.perm[ginv[j]];
  std::vector<Rat> tx(r);
  for (int i = 0; i < r; ++i) tx[i] = bs.t[i] / bg.t[inverse_perm(sigma)[i]];
  bool ident = true, swap = true;
  for (int j = 0; j < r; ++j) {
    ident = ident && sigma[j] == j;
    swap = swap && sigma[j] == transposition(r, l)[j];
  }
  if (ident) return chi_torus(tx, bg.t, v);
  if (!swap) throw std::logic_error("unexpected Weyl element in B(αg)B(g)^{-1}");
  std::vector<Rat> ts = bg.t;
  std::swap(ts[l], ts[l + 1]);
  ResidueField kv(v);
  return kv.mul(chi_torus(tx, ts, v), chi_alpha_torus(l, bg.t, v));
}

// χ(w, h) by peeling the smallest left descent.
Poly chi_weyl(std::vector<int> perm, const RMat& h, const Place& v) {
  const Field& F = h.field();
  const int r = h.size();
  ResidueField kv(v);
  Poly acc = kv.one();
  for (;;) {
    std::vector<int> pinv = inverse_perm(perm);
    int l = 0;
    while (l + 1 < r && pinv[l] < pinv[l + 1]) ++l;
    if (l + 1 >= r) return acc;
    for (int& x : perm)
      if (x == l)
        x = l + 1;
      else if (x == l + 1)
        x = l;
    acc = kv.mul(acc, chi_alpha(l, RMat::perm(F, perm) * h, v));
  }
}

}  // namespace

Poly chi(const RMat& g1, const RMat& g2, const Place& v) {
  const Field& F = g1.field();
  BruhatData b1 = bruhat(g1);
  RMat h = b1.np * g2;
  BruhatData bh = bruhat(RMat::perm(F, b1.perm) * h);
  ResidueField kv(v);
  return kv.mul(chi_torus(b1.t, bh.t, v), chi_weyl(b1.perm, h, v));
}

Poly kappa_kubota(const RMat& g, const Place& v) {
  if (g.size() != 2 || !g.in_GL_O(v)) throw ArithmeticError("kappa_kubota needs g in GL_2(O_v)");
  ResidueField kv(v);
  const Rat& c = g(1, 0);
  if (c.is_zero() || valuation(c, v) == 0) return kv.one();
  return tame_symbol(c, g(1, 1) / g.det(), v);
}

Poly kappa_general(const RMat& g, const Place& v, bool last_pivot) {
  if (!g.in_GL_O(v)) throw ArithmeticError("kappa_general needs g in GL_r(O_v): " + g.str());
  const Field& F = g.field();
  const int r = g.size();
  // Generators s_1 ... s_m with g = s_1 ... s_m; unipotent ones are flagged.
  std::vector<std::pair<RMat, bool>> gens;
  RMat cur = g;
  for (int j = 0; j < r; ++j) {
    int piv = -1;
    for (int i = j; i < r; ++i)
      if (!cur(i, j).is_zero() && valuation(cur(i, j), v) == 0) {
        piv = i;
        if (!last_pivot) break;
      }
    if (piv < 0) throw std::logic_error("no unit pivot");
    if (piv != j) {
      std::vector<int> s(r);
      std::iota(s.begin(), s.end(), 0);
      std::swap(s[piv], s[j]);
      RMat w = RMat::perm(F, s);
      cur = w * cur;
      gens.emplace_back(w, false);
    }
    Rat il = cur(j, j).inv();
    for (int i = 0; i < r; ++i) {
      if (i == j || cur(i, j).is_zero()) continue;
      Rat c = cur(i, j) * il;
      for (int k = 0; k < r; ++k) cur(i, k) -= c * cur(j, k);
      if (i < j) {
        gens.emplace_back(RMat::elementary(F, r, i, j, c), true);
      } else {
        // Id + cE_{ij} = w (Id + cE_{ji}) w for the transposition w of i, j.
        std::vector<int> s(r);
        std::iota(s.begin(), s.end(), 0);
        std::swap(s[i], s[j]);
        RMat w = RMat::perm(F, s);
        gens.emplace_back(w, false);
        gens.emplace_back(RMat::elementary(F, r, j, i, c), true);
        gens.emplace_back(w, false);
      }
    }
  }
  std::vector<Rat> d(r);
  for (int i = 0; i < r; ++i) d[i] = cur(i, i);
  gens.emplace_back(RMat::diag(d), false);
  ResidueField kv(v);
  Poly kappa = kv.one();
  RMat prefix = RMat::identity(F, r);
  for (const auto& [s, unipotent] : gens) {
    if (!unipotent) kappa = kv.mul(kappa, chi(prefix, s, v));
    prefix = prefix * s;
  }
  if (prefix != g) throw std::logic_error("generator factorisation does not reproduce g");
  return kappa;
}

Field::Elem kappa_poly(const Field& F, int r, const std::vector<Field::Elem>& y) {
  if (r == 1) return 1;
  std::vector<std::vector<Field::Elem>> M(r, std::vector<Field::Elem>(r));
  for (int a = 0; a < r; ++a) {
    int i = r - a;  // 1-based row deleted
    Poly m = sub_det(F, r, y, without(range1(1, r), i), range1(1, r - 1));
    for (int b = 0; b < r; ++b) M[a][b] = m.coeff(b);
  }
  Field::Elem d = 1;
  for (int c = 0; c < r; ++c) {
    int piv = c;
    while (piv < r && M[piv][c] == 0) ++piv;
    if (piv == r) return 0;
    if (piv != c) {
      std::swap(M[piv], M[c]);
      d = F.neg(d);
    }
    d = F.mul(d, M[c][c]);
    Field::Elem il = F.inv(M[c][c]);
    for (int i = c + 1; i < r; ++i) {
      if (!M[i][c]) continue;
      Field::Elem f = F.mul(M[i][c], il);
      for (int k = c; k < r; ++k) M[i][k] = F.sub(M[i][k], F.mul(f, M[c][k]));
    }
  }
  return d;
}

}  // namespace jmfl
