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

#include "jmfl/symbols.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace jmfl {

int zeta_char(const Field& F, Field::Elem x) { return F.quadratic_char(x); }

int zeta_char(const ResidueField& kv, const Poly& x) { return kv.base().quadratic_char(kv.norm(x)); }

Poly tame_symbol(const Rat& f, const Rat& g, const Place& v) {
  if (f.is_zero() || g.is_zero()) throw ArithmeticError("tame symbol of zero");
  ResidueField kv(v);
  const int a = valuation(f, v), b = valuation(g, v);
  Poly val = kv.mul(kv.pow(kv.angular(f), b), kv.pow(kv.angular(g), -a));
  if ((a & 1) && (b & 1)) val = kv.neg(val);
  return val;
}

int hilbert_symbol(const Rat& f, const Rat& g, const Place& v) {
  return zeta_char(ResidueField(v), tame_symbol(f, g, v));
}

int LocalCharacter::conductor() const {
  int vb = valuation(twist, place);
  return place.is_infinite() ? 2 - vb : -vb;
}

LocalCharacter standard_character(const Place& v) { return {v, Rat::one(v.field())}; }

namespace {

// Basis element of P^{-N}O/P^M O over k; e_i e_j depends only on i + j.
Rat window_product(const Place& v, int N, int M, int L) {
  const Field& F = v.field();
  if (v.is_infinite()) return Rat::var_pow(F, 2 * N - L);
  (void)M;
  return Rat(Poly::monomial(F, 1, L), v.poly().pow(2 * N));
}

Rat window_basis(const Place& v, int N, int i) {
  const Field& F = v.field();
  if (v.is_infinite()) return Rat::var_pow(F, N - i);
  return Rat(Poly::monomial(F, 1, i), v.poly().pow(N));
}

int window_size(const Place& v, int N, int M) { return std::max(0, (N + M) * v.degree()); }

struct GaussData {
  int n = 0;        // F_p-dimension of the window
  int rank = 0;     // rank of the trace form
  int legendre = 1; // Π (d_i/2 | p) over the diagonal
};

GaussData gauss_data(const Rat& a, const LocalCharacter& psi, int N, int M) {
  const Place& v = psi.place;
  const Field& F = v.field();
  const int p = F.p(), m = F.m();
  const int w = window_size(v, N, M);
  GaussData out;
  out.n = w * m;
  if (w == 0) return out;
  Rat ba = psi.twist * a;
  std::vector<Field::Elem> Rl(2 * w - 1);
  for (int L = 0; L < 2 * w - 1; ++L) Rl[L] = res_traced(ba * window_product(v, N, M, L), v);
  std::vector<Field::Elem> gs(m);
  for (int s = 0, c = 1; s < m; ++s, c *= p) gs[s] = static_cast<Field::Elem>(c);
  const int n = out.n;
  std::vector<std::vector<int>> B(n, std::vector<int>(n));
  for (int i = 0; i < w; ++i)
    for (int s = 0; s < m; ++s)
      for (int j = 0; j < w; ++j)
        for (int t = 0; t < m; ++t)
          B[i * m + s][j * m + t] = F.trace_prime(F.mul(F.mul(gs[s], gs[t]), Rl[i + j]));
  const Field& Fp = Field::get(p, 1);
  auto md = [p](long x) { return static_cast<int>(((x % p) + p) % p); };
  std::vector<int> alive(n, 1);
  for (int step = 0; step < n; ++step) {
    int piv = -1;
    for (int i = 0; i < n && piv < 0; ++i)
      if (alive[i] && B[i][i]) piv = i;
    if (piv < 0) {
      int pi = -1, pj = -1;
      for (int i = 0; i < n && pi < 0; ++i)
        for (int j = 0; j < n; ++j)
          if (alive[i] && alive[j] && B[i][j]) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) break;
      // e_i += e_j makes the diagonal entry 2B_ij.
      for (int k = 0; k < n; ++k) B[pi][k] = md(B[pi][k] + B[pj][k]);
      for (int k = 0; k < n; ++k) B[k][pi] = md(B[k][pi] + B[k][pj]);
      piv = pi;
    }
    const int d = B[piv][piv];
    out.rank++;
    out.legendre *= Fp.quadratic_char(Fp.mul(static_cast<Field::Elem>(d), Fp.half()));
    alive[piv] = 0;
    const int dinv = Fp.inv(static_cast<Field::Elem>(d));
    for (int i = 0; i < n; ++i) {
      if (!alive[i] || !B[i][piv]) continue;
      const int f = md(static_cast<long>(B[i][piv]) * dinv);
      for (int k = 0; k < n; ++k) B[i][k] = md(B[i][k] - static_cast<long>(f) * B[piv][k]);
      for (int k = 0; k < n; ++k) B[k][i] = md(B[k][i] - static_cast<long>(f) * B[k][piv]);
    }
  }
  return out;
}

// Σ = p^{n-ρ} L g(1)^ρ with g(1) = i^{[p≡3]} √p.
CycloValue gauss_value(const CycloRing& R, const GaussData& g, long extra_sqrt_p) {
  long ipow = (R.p() % 4 == 3) ? g.rank : 0;
  long e = 2L * (g.n - g.rank) + g.rank + extra_sqrt_p;
  CycloValue v = CycloValue::sqrt_p_pow(R, e).rotated(ipow * R.p());
  return g.legendre < 0 ? -v : v;
}

int window_M(const Rat& a, const LocalCharacter& psi, int N) {
  const int c = psi.conductor(), va = valuation(a, psi.place);
  int M = std::max(N + c - va, -N);
  while (2 * M + va < c) ++M;
  return M;
}

}  // namespace

CycloValue gauss_window(const CycloRing& R, const Rat& a, const LocalCharacter& psi, int N, int M) {
  return gauss_value(R, gauss_data(a, psi, N, M), 0);
}

CycloValue gauss_window_bruteforce(const CycloRing& R, const Rat& a, const LocalCharacter& psi, int N, int M) {
  const Place& v = psi.place;
  const Field& F = v.field();
  const int w = window_size(v, N, M);
  std::vector<Rat> basis;
  for (int i = 0; i < w; ++i) basis.push_back(window_basis(v, N, i));
  Rat half_ba = psi.twist * a.scaled(F.half());
  RootSum s(R);
  std::vector<int> c(w, 0);
  for (;;) {
    Rat x = Rat::zero(F);
    for (int i = 0; i < w; ++i)
      if (c[i]) x += basis[i].scaled(static_cast<Field::Elem>(c[i]));
    s.add_psi(F.trace_prime(res_traced(half_ba * x * x, v)));
    int k = 0;
    while (k < w && ++c[k] == F.q()) c[k++] = 0;
    if (k == w) break;
  }
  return s.value();
}

WeilResult weil_gamma_ex(const CycloRing& R, const Rat& a, const LocalCharacter& psi, int max_level) {
  if (a.is_zero()) throw ArithmeticError("Weil constant of zero");
  if (psi.twist.is_zero()) throw std::invalid_argument("trivial additive character");
  const Field& F = a.field();
  const int c = psi.conductor(), va = valuation(a, psi.place);
  const long md = static_cast<long>(F.m()) * psi.place.degree();
  auto level = [&](int N, bool& unit) {
    int M = window_M(a, psi, N);
    GaussData g = gauss_data(a, psi, N, M);
    long extra = md * (c - 2L * M - va);
    unit = (2L * (g.n - g.rank) + g.rank + extra) == 0;
    return std::make_pair(gauss_value(R, g, extra), M);
  };
  bool unit_prev = false;
  auto prev = level(0, unit_prev);
  for (int N = 1; N <= max_level; ++N) {
    bool unit = false;
    auto cur = level(N, unit);
    if (unit && unit_prev && cur.first == prev.first) return {cur.first, N - 1, prev.second};
    prev = cur;
    unit_prev = unit;
  }
  throw ArithmeticError("Weil constant did not stabilise at " + psi.place.str() + " for " + a.str());
}

CycloValue weil_gamma(const CycloRing& R, const Rat& a, const LocalCharacter& psi) {
  return weil_gamma_ex(R, a, psi).value;
}

CycloValue weil_gamma(const CycloRing& R, const Rat& a, const Place& v) {
  return weil_gamma(R, a, standard_character(v));
}

std::vector<Place> support_places(const Rat& a) {
  std::set<Place> out;
  for (const Poly* P : {&a.num(), &a.den()})
    if (P->deg() > 0)
      for (auto& [Q, e] : factor(*P)) out.insert(Place::finite(Q));
  out.insert(Place::infinity(a.field()));
  return {out.begin(), out.end()};
}

WeilProduct weil_product(const CycloRing& R, const Rat& a) {
  WeilProduct out{CycloValue(R, 1L), {}};
  for (const Place& v : support_places(a)) {
    CycloValue g = weil_gamma(R, a, v);
    if (g != CycloValue(R, 1L)) out.factors.emplace_back(v, g);
    out.product *= g;
  }
  return out;
}

}  // namespace jmfl
