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

#ifndef JMFL_FIELD_HPP_
#define JMFL_FIELD_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace jmfl {

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// GF(p^m) with table-driven arithmetic. An element is the integer
// sum c_j p^j of its coordinates in the basis 1, s, ..., s^{m-1}, where s is
// a root of the lexicographically first monic irreducible of degree m.
// Instances are interned; compare fields by address.
class Field {
 public:
  using Elem = std::uint16_t;

  static constexpr int kMaxOrder = 1000;

  // Throws std::invalid_argument unless p is an odd prime and p^m <= kMaxOrder.
  static const Field& get(int p, int m);
  static const Field& of_order(int q);

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }
  // Monic modulus over GF(p), low to high, length m+1.
  const std::vector<int>& modulus() const { return modulus_; }
  Elem generator() const { return gen_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    int s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Elem inv(Elem a) const {
    if (a == 0) throw ArithmeticError("inverse of zero in GF(" + std::to_string(q_) + ")");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;
  Elem from_int(long long n) const;
  Elem half() const { return half_; }

  // Absolute trace and norm down to GF(p), returned as integers in [0, p).
  int trace_prime(Elem a) const { return trace_[a]; }
  int norm_prime(Elem a) const { return norm_[a]; }
  // a^{(q-1)/2} as +1/-1, and 0 at a = 0.
  int quadratic_char(Elem a) const { return chi_[a]; }
  int log(Elem a) const { return log_[a]; }
  Elem exp(int k) const { return exp_[((k % (q_ - 1)) + (q_ - 1)) % (q_ - 1)]; }

  // Coordinate vector (length m) of an element and back.
  std::vector<int> coords(Elem a) const;
  Elem from_coords(const std::vector<int>& c) const;

  std::string describe() const;
  std::string str(Elem a) const;

 private:
  Field(int p, int m);

  int p_, m_, q_;
  std::vector<int> modulus_;
  std::vector<Elem> add_, neg_, exp_;
  std::vector<int> log_, trace_, norm_, chi_;
  Elem gen_ = 0, half_ = 0;
};

bool is_odd_prime(int p);

}  // namespace jmfl

#endif  // JMFL_FIELD_HPP_
