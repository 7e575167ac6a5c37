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

#ifndef JMFL_SYMBOLS_HPP_
#define JMFL_SYMBOLS_HPP_

#include "jmfl/cyclo.hpp"
#include "jmfl/rational.hpp"

namespace jmfl {

// ζ(x) = x^{(q-1)/2} as ±1, with ζ(0) = 0.
int zeta_char(const Field& F, Field::Elem x);
// ζ∘N_{k_v/k} on the residue field at v.
int zeta_char(const ResidueField& kv, const Poly& x);

// {f,g}_v = (-1)^{v(f)v(g)} f^{v(g)}/g^{v(f)} evaluated in k_v.
Poly tame_symbol(const Rat& f, const Rat& g, const Place& v);
// [f,g]_v = ζ(N {f,g}_v) ∈ {±1}.
int hilbert_symbol(const Rat& f, const Rat& g, const Place& v);

// The local component Ψ_v(x) = ψ(Tr res_v(b·x dϖ)) of the global character
// attached to the differential b dϖ; b = 1 gives the standard one.
struct LocalCharacter {
  Place place;
  Rat twist;
  // Conductor exponent: Ψ_v is trivial on P^c and not on P^{c-1}.
  int conductor() const;
};
LocalCharacter standard_character(const Place& v);

struct WeilResult {
  CycloValue value;
  int N = 0, M = 0;  // window P^{-N}O / P^M O at which it stabilised
};

// Weil constant γ(a, Ψ_v), normalised by the self-dual measure, as the
// stabilised quadratic Gauss integral |a|^{1/2} ∫_{P^{-N}O} Ψ_v(½ax²) dx.
WeilResult weil_gamma_ex(const CycloRing& R, const Rat& a, const LocalCharacter& psi, int max_level = 64);
CycloValue weil_gamma(const CycloRing& R, const Rat& a, const LocalCharacter& psi);
CycloValue weil_gamma(const CycloRing& R, const Rat& a, const Place& v);

// Σ_{x ∈ P^{-N}O/P^M O} Ψ_v(½ax²) by enumeration. Exponential; for tests
// and small windows only.
CycloValue gauss_window_bruteforce(const CycloRing& R, const Rat& a, const LocalCharacter& psi, int N, int M);
// The exact window sum via diagonalisation of the trace form.
CycloValue gauss_window(const CycloRing& R, const Rat& a, const LocalCharacter& psi, int N, int M);

struct WeilProduct {
  CycloValue product;
  std::vector<std::pair<Place, CycloValue>> factors;  // places with γ_v != 1
};
// Π_v γ_v(a, Ψ_v) over all places of the projective line.
WeilProduct weil_product(const CycloRing& R, const Rat& a);

// Places where a has a zero or pole, plus infinity, sorted.
std::vector<Place> support_places(const Rat& a);

}  // namespace jmfl

#endif  // JMFL_SYMBOLS_HPP_
