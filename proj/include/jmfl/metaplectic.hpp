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

#ifndef JMFL_METAPLECTIC_HPP_
#define JMFL_METAPLECTIC_HPP_

#include <functional>
#include <vector>

#include "jmfl/rational.hpp"

namespace jmfl {

// Square matrix over k(ϖ), row-major.
class RMat {
 public:
  RMat() = default;
  RMat(const Field& F, int r);  // zero matrix
  static RMat identity(const Field& F, int r);
  static RMat diag(const std::vector<Rat>& d);
  // Permutation matrix with w e_j = e_{perm[j]}.
  static RMat perm(const Field& F, const std::vector<int>& perm);
  static RMat from_elems(const Field& F, int r, const std::vector<Field::Elem>& e);
  // The anti-diagonal w₀.
  static RMat w0(const Field& F, int r);
  // Id + c E_{ij}.
  static RMat elementary(const Field& F, int r, int i, int j, const Rat& c);

  int size() const { return r_; }
  const Field& field() const { return *F_; }
  Rat& operator()(int i, int j) { return a_[i * r_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[i * r_ + j]; }

  friend RMat operator*(const RMat& a, const RMat& b);
  friend bool operator==(const RMat& a, const RMat& b) { return a.a_ == b.a_; }
  friend bool operator!=(const RMat& a, const RMat& b) { return !(a == b); }
  RMat transpose() const;
  Rat det() const;
  RMat inverse() const;  // throws on a singular matrix
  bool is_upper_unipotent() const;
  bool is_diagonal() const;
  // All entries in O_v.
  bool is_integral(const Place& v) const;
  // Entries in O_v and determinant in O_v^*.
  bool in_GL_O(const Place& v) const;
  std::string str() const;

 private:
  const Field* F_ = nullptr;
  int r_ = 0;
  std::vector<Rat> a_;
};

// Determinant of a polynomial matrix given row-major, by cofactor expansion.
Poly poly_det(const std::vector<Poly>& m, int r);

// g = n·(t·w)·n' with n, n' upper unipotent, t diagonal, w a permutation.
struct BruhatData {
  RMat n, np;
  std::vector<Rat> t;     // t[i] multiplies row i
  std::vector<int> perm;  // w e_j = e_{perm[j]}
  RMat middle() const;    // t·w
};

BruhatData bruhat(const RMat& g);
// Closed form for w₀(y + ϖId) from the principal and almost-principal minors
// of g = y + ϖId; requires every leading principal minor to be nonzero.
// ninv and npinv receive n^{-1} and n'^{-1}, which also have minor formulas.
BruhatData bruhat_minors(const Field& F, int r, const std::vector<Field::Elem>& y, RMat* ninv = nullptr,
                         RMat* npinv = nullptr);

// Kazhdan–Patterson cocycle with the tame symbol at v, valued in k_v^*.
Poly chi(const RMat& g1, const RMat& g2, const Place& v);
// Base cases.
Poly chi_torus(const std::vector<Rat>& t, const std::vector<Rat>& tp, const Place& v);
Poly chi_alpha_torus(int l, const std::vector<Rat>& t, const Place& v);

// κ̲ on GL_2(O_v) by the closed form.
Poly kappa_kubota(const RMat& g, const Place& v);
// κ̲ on GL_r(O_v) by factoring into torus, Weyl and unipotent generators.
// last_pivot picks the largest admissible pivot row instead of the smallest.
Poly kappa_general(const RMat& g, const Place& v, bool last_pivot = false);
// The determinant of the ϖ-coefficients of the minors of y + ϖId obtained by
// deleting row i and column r, rows ordered i = r, ..., 1.
Field::Elem kappa_poly(const Field& F, int r, const std::vector<Field::Elem>& y);

// a_i(y) = det(y_{[1,i],[1,i]} + ϖId_i), i = 1..r.
std::vector<Poly> minor_invariants(const Field& F, int r, const std::vector<Field::Elem>& y);

}  // namespace jmfl

#endif  // JMFL_METAPLECTIC_HPP_
