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

// Hand-rolled generators shared by the unit tests.
#ifndef JMFL_TESTS_GEN_HPP_
#define JMFL_TESTS_GEN_HPP_

#include <random>
#include <vector>

#include "jmfl/rational.hpp"

namespace jmfl::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed = 0x5eed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Field::Elem elem(const Field& F) { return static_cast<Field::Elem>(uniform(0, F.q() - 1)); }
  Field::Elem unit(const Field& F) { return static_cast<Field::Elem>(uniform(1, F.q() - 1)); }

  Poly poly(const Field& F, int max_deg) {
    std::vector<Field::Elem> c(uniform(0, max_deg) + 1);
    for (auto& x : c) x = elem(F);
    return Poly(F, c);
  }
  Poly nonzero_poly(const Field& F, int max_deg) {
    for (;;) {
      Poly p = poly(F, max_deg);
      if (!p.is_zero()) return p;
    }
  }
  Poly monic(const Field& F, int deg) {
    std::vector<Field::Elem> c(deg + 1);
    for (auto& x : c) x = elem(F);
    c[deg] = 1;
    return Poly(F, c);
  }
  Rat rat(const Field& F, int max_deg) { return Rat(poly(F, max_deg), nonzero_poly(F, max_deg)); }
  Rat nonzero_rat(const Field& F, int max_deg) {
    return Rat(nonzero_poly(F, max_deg), nonzero_poly(F, max_deg));
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace jmfl::testing

#endif  // JMFL_TESTS_GEN_HPP_
