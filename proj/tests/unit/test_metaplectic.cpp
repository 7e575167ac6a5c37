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

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "gen.hpp"
#include "jmfl/metaplectic.hpp"
#include "jmfl/symbols.hpp"

using namespace jmfl;
using jmfl::testing::Gen;

namespace {

RMat random_invertible(Gen& g, const Field& F, int r, int deg) {
  for (;;) {
    RMat m(F, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        int kind = g.uniform(0, 4);
        if (kind == 0) continue;
        m(i, j) = kind == 1 ? Rat::constant(F, g.elem(F)) : g.rat(F, deg);
      }
    if (!m.det().is_zero()) return m;
  }
}

RMat random_unipotent(Gen& g, const Field& F, int r) {
  RMat n = RMat::identity(F, r);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) n(i, j) = g.rat(F, 2);
  return n;
}

std::vector<Rat> random_torus(Gen& g, const Field& F, int r) {
  std::vector<Rat> t;
  for (int i = 0; i < r; ++i) t.push_back(g.nonzero_rat(F, 2));
  return t;
}

// Integral matrix with unit determinant at the origin.
RMat random_GL_O(Gen& g, const Field& F, int r, int deg) {
  Place o = Place::origin(F);
  for (;;) {
    RMat m(F, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) m(i, j) = Rat(g.poly(F, deg));
    if (m.in_GL_O(o)) return m;
  }
}

Poly one(const Place& v) { return Poly::constant(v.field(), 1); }

}  // namespace

TEST_CASE("Bruhat decomposition") {
  Gen g(31);
  const Field& F = Field::of_order(3);
  CHECK_THROWS(bruhat(RMat(F, 2)));
  RMat s = RMat::perm(F, {1, 0});
  BruhatData bs = bruhat(s);
  CHECK(bs.n == RMat::identity(F, 2));
  CHECK(bs.np == RMat::identity(F, 2));
  CHECK(bs.perm == std::vector<int>{1, 0});
  CHECK(bs.t[0].is_one());
  CHECK(bs.t[1].is_one());
  for (int q : {3, 5, 9}) {
    const Field& K = Field::of_order(q);
    for (int r = 1; r <= 4; ++r)
      for (int it = 0; it < 25; ++it) {
        RMat m = random_invertible(g, K, r, 2);
        BruhatData b = bruhat(m);
        CHECK(b.n.is_upper_unipotent());
        CHECK(b.np.is_upper_unipotent());
        CHECK(b.n * b.middle() * b.np == m);
        // B(n g n') = B(g).
        BruhatData b2 = bruhat(random_unipotent(g, K, r) * m * random_unipotent(g, K, r));
        CHECK(b2.middle() == b.middle());
      }
    std::vector<Rat> d = random_torus(g, K, 3);
    BruhatData bd = bruhat(RMat::diag(d));
    CHECK(bd.t == d);
    CHECK(bd.n == RMat::identity(K, 3));
  }
}

TEST_CASE("Bruhat decomposition by minors") {
  Gen g(32);
  const Field& F = Field::of_order(3);
  // n'_{12} = -y12/(ϖ + y11) for y = [[1,1],[1,2]].
  RMat npinv;
  BruhatData b = bruhat_minors(F, 2, {1, 1, 1, 2}, nullptr, &npinv);
  Rat x = Rat(Poly::constant(F, 1), Poly::from_ints(F, {1, 1}));
  CHECK(npinv(0, 1) == -x);
  CHECK(b.np(0, 1) == x);
  CHECK(b.t[1] == Rat(Poly::from_ints(F, {1, 1})));
  for (int q : {3, 5}) {
    const Field& K = Field::of_order(q);
    for (int r = 2; r <= 4; ++r)
      for (int it = 0; it < 20; ++it) {
        std::vector<Field::Elem> y(r * r);
        for (auto& e : y) e = g.elem(K);
        RMat ninv;
        BruhatData bm = bruhat_minors(K, r, y, &ninv);
        RMat Gy = RMat::from_elems(K, r, y);
        for (int i = 0; i < r; ++i) Gy(i, i) += Rat::var(K);
        BruhatData bb = bruhat(RMat::w0(K, r) * Gy);
        CHECK(bm.t == bb.t);
        CHECK(bm.perm == bb.perm);
        CHECK(bm.n == bb.n);
        CHECK(bm.np == bb.np);
        CHECK(bm.n * ninv == RMat::identity(K, r));
      }
  }
}

TEST_CASE("cocycle base rules") {
  Gen g(33);
  const Field& F3 = Field::of_order(3);
  Place o = Place::origin(F3);
  Rat w = Rat::var(F3);
  // χ(α, diag(ϖ,ϖ)) = -1 over GF(3).
  CHECK(chi(RMat::perm(F3, {1, 0}), RMat::diag({w, w}), o) == Poly::constant(F3, 2));
  for (int q : {3, 5, 9}) {
    const Field& F = Field::of_order(q);
    for (const Place& v : {Place::origin(F), Place::infinity(F), Place::finite(Poly::from_ints(F, {1, 1}))}) {
      ResidueField kv(v);
      for (int r = 2; r <= 3; ++r)
        for (int it = 0; it < 10; ++it) {
          std::vector<Rat> t = random_torus(g, F, r), tp = random_torus(g, F, r);
          CHECK(chi(RMat::diag(t), RMat::diag(tp), v) == chi_torus(t, tp, v));
          std::vector<int> p(r), pp(r);
          std::iota(p.begin(), p.end(), 0);
          std::iota(pp.begin(), pp.end(), 0);
          for (int k = 0; k < it % 4; ++k) std::next_permutation(p.begin(), p.end());
          for (int k = 0; k < it % 5; ++k) std::next_permutation(pp.begin(), pp.end());
          CHECK(chi(RMat::perm(F, p), RMat::perm(F, pp), v) == one(v));
          CHECK(chi(RMat::diag(t), RMat::perm(F, p), v) == one(v));
          int l = g.uniform(0, r - 2);
          std::vector<int> s(r);
          std::iota(s.begin(), s.end(), 0);
          std::swap(s[l], s[l + 1]);
          // Item 4 written out with tame symbols.
          Rat det = Rat::one(F);
          for (auto& x : t) det *= x;
          Rat m1 = Rat::constant(F, F.from_int(-1));
          Poly expect = kv.mul(kv.inv(tame_symbol(t[l], t[l + 1], v)),
                               kv.mul(tame_symbol(m1, t[l] / t[l + 1], v), tame_symbol(m1, det, v)));
          CHECK(chi(RMat::perm(F, s), RMat::diag(t), v) == expect);
          RMat m = random_invertible(g, F, r, 2), m2 = random_invertible(g, F, r, 2);
          // Item 5 and item 6.
          CHECK(chi(random_unipotent(g, F, r) * m, m2 * random_unipotent(g, F, r), v) == chi(m, m2, v));
          CHECK(chi(RMat::diag(t), m, v) == chi(RMat::diag(t), bruhat(m).middle(), v));
        }
    }
  }
}

TEST_CASE("cocycle identity") {
  Gen g(34);
  for (int q : {3, 5}) {
    const Field& F = Field::of_order(q);
    Place v2 = Place::finite(q == 3 ? Poly::from_ints(F, {1, 0, 1}) : Poly::from_ints(F, {2, 0, 1}));
    for (const Place& v : {Place::origin(F), v2, Place::infinity(F)}) {
      ResidueField kv(v);
      for (int r = 2; r <= 3; ++r)
        for (int it = 0; it < (r == 2 ? 60 : 15); ++it) {
          RMat a = random_invertible(g, F, r, 1), b = random_invertible(g, F, r, 1), c = random_invertible(g, F, r, 1);
          Poly lhs = kv.mul(chi(b, c, v), chi(a, b * c, v));
          Poly rhs = kv.mul(chi(a * b, c, v), chi(a, b, v));
          CHECK_MESSAGE(lhs == rhs, a.str() << " " << b.str() << " " << c.str());
        }
    }
  }
}

TEST_CASE("kappa: generators, blocks, Kubota") {
  Gen g(35);
  const Field& F = Field::of_order(3);
  Place o = Place::origin(F);
  Rat w = Rat::var(F);
  RMat c0 = RMat::identity(F, 2);
  c0(0, 1) = w;
  CHECK(kappa_kubota(c0, o) == one(o));
  RMat lo = RMat::identity(F, 2);
  lo(1, 0) = w;
  CHECK(kappa_kubota(lo, o) == one(o));
  CHECK(kappa_general(lo, o) == one(o));
  for (Field::Elem u : {1, 2}) {
    RMat m(F, 2);
    m(0, 0) = Rat::constant(F, u);
    m(1, 0) = w;
    m(1, 1) = Rat::constant(F, F.inv(u));
    CHECK(kappa_kubota(m, o) == Poly::constant(F, u));
    CHECK(kappa_general(m, o) == Poly::constant(F, u));
  }
  for (int q : {3, 5, 9}) {
    const Field& K = Field::of_order(q);
    Place v = Place::origin(K);
    for (int it = 0; it < 40; ++it) {
      RMat m = random_GL_O(g, K, 2, 3);
      CHECK(kappa_general(m, v) == kappa_kubota(m, v));
      RMat m3 = random_GL_O(g, K, 3, 2);
      CHECK(kappa_general(m3, v) == kappa_general(m3, v, true));
      std::vector<Rat> t{Rat(Poly::constant(K, g.unit(K))), Rat(Poly::from_ints(K, {1, 1})), Rat::one(K)};
      CHECK(kappa_general(RMat::diag(t), v) == one(v));
      RMat nu = RMat::identity(K, 3);
      nu(0, 1) = Rat(g.poly(K, 2));
      nu(1, 2) = Rat(g.poly(K, 2));
      CHECK(kappa_general(nu, v) == one(v));
      CHECK(kappa_general(RMat::w0(K, 3), v) == one(v));
      // Block diagonal and block anti-diagonal with a 1×1 block.
      RMat blk(K, 3), anti(K, 3);
      Rat u1 = Rat(Poly::constant(K, g.unit(K)));
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          blk(i, j) = m(i, j);
          anti(i + 1, j) = m(i, j);
        }
      blk(2, 2) = u1;
      anti(0, 2) = u1;
      CHECK(kappa_general(blk, v) == kappa_kubota(m, v));
      CHECK(kappa_general(anti, v) == kappa_kubota(m, v));
    }
  }
  CHECK_THROWS(kappa_general(RMat::diag({w, w.inv()}), o));
}

TEST_CASE("kappa_poly") {
  const Field& F = Field::of_order(3);
  for (int y21 = 0; y21 < 3; ++y21) CHECK(kappa_poly(F, 2, {1, 2, static_cast<Field::Elem>(y21), 0}) == F.neg(y21));
  Gen g(36);
  for (int q : {3, 5}) {
    const Field& K = Field::of_order(q);
    for (int r = 2; r <= 3; ++r) {
      int sgn = 0;
      for (int i = 1; i < r; ++i) sgn += i + i * (i + 1);
      for (int it = 0; it < 200; ++it) {
        std::vector<Field::Elem> y(r * r), yt(r * r);
        for (auto& e : y) e = g.elem(K);
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) yt[j * r + i] = y[i * r + j];
        auto a = minor_invariants(K, r, y);
        Field::Elem lhs = K.mul(kappa_poly(K, r, y), kappa_poly(K, r, yt));
        Field::Elem rhs = resultant(a[r - 2], a[r - 1]);
        if (sgn % 2) rhs = K.neg(rhs);
        CHECK(lhs == rhs);
      }
    }
  }
}
