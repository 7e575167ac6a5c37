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

#include "jmfl/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace jmfl {

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

namespace {

// Dense arithmetic on coordinate vectors modulo a monic polynomial; only used
// while the tables are being built.
struct Naive {
  int p, m;
  std::vector<int> f;

  std::vector<int> decode(int a) const {
    std::vector<int> c(m);
    for (int j = 0; j < m; ++j) {
      c[j] = a % p;
      a /= p;
    }
    return c;
  }
  int encode(const std::vector<int>& c) const {
    int a = 0;
    for (int j = m - 1; j >= 0; --j) a = a * p + c[j];
    return a;
  }
  int mul(int a, int b) const {
    auto x = decode(a), y = decode(b);
    std::vector<int> z(2 * m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
    for (int k = 2 * m - 1; k >= m; --k) {
      int c = z[k];
      if (c == 0) continue;
      for (int j = 0; j <= m; ++j) z[k - m + j] = ((z[k - m + j] - c * f[j]) % p + p) % p;
    }
    z.resize(m);
    return encode(z);
  }
  int pow(int a, long long e) const {
    int r = 1;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Smallest element of multiplicative order q-1, or -1 when the quotient ring
// is not a field.
int find_generator(const Naive& R, int q) {
  auto primes = prime_factors(q - 1);
  for (int g = 1; g < q; ++g) {
    if (R.pow(g, q - 1) != 1) continue;
    bool ok = true;
    for (long long l : primes)
      if (R.pow(g, (q - 1) / l) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return -1;
}

}  // namespace

Field::Field(int p, int m) : p_(p), m_(m) {
  q_ = 1;
  for (int i = 0; i < m; ++i) q_ *= p;
  Naive R{p, m, {}};
  int gen = -1;
  // Lexicographically first: smallest integer encoding of the lower coefficients.
  for (int code = 0; code < q_ && gen < 0; ++code) {
    std::vector<int> f(m + 1);
    int c = code;
    for (int j = 0; j < m; ++j) {
      f[j] = c % p;
      c /= p;
    }
    f[m] = 1;
    if (f[0] == 0 && m > 1) continue;
    R.f = f;
    gen = find_generator(R, q_);
    if (gen >= 0) modulus_ = f;
  }
  if (gen < 0) throw std::logic_error("no irreducible modulus found");
  gen_ = static_cast<Elem>(gen);

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, -1);
  int x = 1;
  for (int k = 0; k < q_ - 1; ++k) {
    exp_[k] = static_cast<Elem>(x);
    log_[x] = k;
    x = R.mul(x, gen);
  }
  add_.assign(static_cast<size_t>(q_) * q_, 0);
  neg_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    auto ca = R.decode(a);
    std::vector<int> cn(m);
    for (int j = 0; j < m; ++j) cn[j] = (p - ca[j]) % p;
    neg_[a] = static_cast<Elem>(R.encode(cn));
    for (int b = 0; b < q_; ++b) {
      auto cb = R.decode(b);
      std::vector<int> cs(m);
      for (int j = 0; j < m; ++j) cs[j] = (ca[j] + cb[j]) % p;
      add_[a * q_ + b] = static_cast<Elem>(R.encode(cs));
    }
  }
  trace_.assign(q_, 0);
  norm_.assign(q_, 0);
  chi_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    Elem s = 0, y = static_cast<Elem>(a);
    for (int j = 0; j < m; ++j) {
      s = add(s, y);
      y = pow(y, p);
    }
    if (s >= p) throw std::logic_error("trace left the prime field");
    trace_[a] = s;
    if (a == 0) continue;
    Elem nrm = pow(static_cast<Elem>(a), (q_ - 1) / (p - 1));
    if (nrm >= p) throw std::logic_error("norm left the prime field");
    norm_[a] = nrm;
    chi_[a] = (log_[a] % 2 == 0) ? 1 : -1;
  }
  half_ = inv(from_int(2));
}

Field::Elem Field::pow(Elem a, long long e) const {
  if (a == 0) {
    if (e < 0) throw ArithmeticError("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  long long k = (static_cast<long long>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
  if (k < 0) k += q_ - 1;
  return exp_[k];
}

Field::Elem Field::from_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<int> Field::coords(Elem a) const {
  std::vector<int> c(m_);
  int x = a;
  for (int j = 0; j < m_; ++j) {
    c[j] = x % p_;
    x /= p_;
  }
  return c;
}

Field::Elem Field::from_coords(const std::vector<int>& c) const {
  int a = 0;
  for (int j = m_ - 1; j >= 0; --j) {
    int cj = j < static_cast<int>(c.size()) ? ((c[j] % p_) + p_) % p_ : 0;
    a = a * p_ + cj;
  }
  return static_cast<Elem>(a);
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (m_ > 1) {
    os << "^" << m_ << ") = GF(" << p_ << ")[s]/(";
    bool first = true;
    for (int j = m_; j >= 0; --j) {
      if (modulus_[j] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (j == 0 || modulus_[j] != 1) os << modulus_[j];
      if (j > 0) os << "s";
      if (j > 1) os << "^" << j;
    }
    os << ")";
  } else {
    os << ")";
  }
  return os.str();
}

std::string Field::str(Elem a) const {
  if (m_ == 1) return std::to_string(a);
  auto c = coords(a);
  std::ostringstream os;
  os << "[";
  for (int j = 0; j < m_; ++j) os << (j ? "," : "") << c[j];
  os << "]";
  return os.str();
}

const Field& Field::get(int p, int m) {
  if (!is_odd_prime(p)) throw std::invalid_argument("characteristic must be an odd prime, got " + std::to_string(p));
  if (m < 1) throw std::invalid_argument("extension degree must be positive");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order exceeds " + std::to_string(kMaxOrder));
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, m}];
  if (!slot) slot.reset(new Field(p, m));
  return *slot;
}

const Field& Field::of_order(int q) {
  if (q < 3) throw std::invalid_argument("field order must be an odd prime power");
  int p = 0;
  for (int d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int m = 0, x = q;
  while (x % p == 0) {
    x /= p;
    ++m;
  }
  if (x != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return get(p, m);
}

}  // namespace jmfl
