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


#include "jmfl/global.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "jmfl/symbols.hpp"

namespace jmfl {

std::vector<std::pair<Place, int>> factor_places(const Poly& P) {
  if (P.is_zero()) throw ArithmeticError("factor_places of zero");
  std::vector<std::pair<Place, int>> out;
  if (P.is_constant()) return out;
  for (const auto& [f, e] : factor(P)) out.emplace_back(Place::finite(f), e);
  return out;
}

std::vector<int> GlobalTorus::degrees() const {
  std::vector<int> d;
  for (const Poly& p : a) d.push_back(p.deg());
  return d;
}

Poly GlobalTorus::support_poly() const {
  Poly prod = Poly::constant(field(), 1);
  for (int i = 0; i + 1 < r(); ++i) prod = prod * a[i];
  return prod;
}

std::vector<Place> GlobalTorus::support() const {
  std::vector<Place> out;
  for (const auto& [v, e] : factor_places(support_poly())) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

bool GlobalTorus::admissible() const {
  for (const Poly& p : a)
    if (!p.is_monic()) return false;
  return gcd(support_poly(), a.back()).deg() == 0;
}

namespace {

std::vector<CycloValue> evaluate_all(const CycloRing& R, const OrbitalProfile& p, const std::vector<Alpha>& alphas) {
  std::vector<CycloValue> out;
  for (const Alpha& al : alphas) out.push_back(p.evaluate(R, al));
  return out;
}

template <class ProfileFn>
std::vector<CycloValue> global_sum(const CycloRing& R, const GlobalTorus& t, const std::vector<Alpha>& alphas,
                                   GlobalMode mode, Exec ex, ProfileFn profile) {
  TorusParam tp = t.param();
  if (mode == GlobalMode::Direct) return evaluate_all(R, profile(tp, Locality::affine(t.field()), ex), alphas);
  std::vector<CycloValue> out(alphas.size(), CycloValue(R, 1));
  for (const Place& v : t.support()) {
    OrbitalProfile p = profile(tp, Locality::at(v), ex);
    for (std::size_t j = 0; j < alphas.size(); ++j) out[j] *= p.evaluate(R, alphas[j]);
  }
  return out;
}

}  // namespace

std::vector<CycloValue> I_global(const CycloRing& R, const GlobalTorus& t, const std::vector<Alpha>& alphas,
                                 GlobalMode mode, Exec ex) {
  return global_sum(R, t, alphas, mode, ex, I_profile);
}

std::vector<CycloValue> J_global(const CycloRing& R, const GlobalTorus& t, const std::vector<Alpha>& alphas,
                                 GlobalMode mode, Exec ex) {
  if (!t.admissible()) throw std::invalid_argument("J_global needs gcd(a_1···a_{r-1}, a_r) = 1");
  return global_sum(R, t, alphas, mode, ex, J_profile);
}

CycloValue I_global(const CycloRing& R, const GlobalTorus& t, const Alpha& alpha, GlobalMode mode) {
  return I_global(R, t, std::vector<Alpha>{alpha}, mode).front();
}

CycloValue J_global(const CycloRing& R, const GlobalTorus& t, const Alpha& alpha, GlobalMode mode) {
  return J_global(R, t, std::vector<Alpha>{alpha}, mode).front();
}

namespace {

long ipow(long b, int e) {
  long x = 1;
  while (e-- > 0) x *= b;
  return x;
}

// Scans `count` matrices decoded by `decode`; `visit` returns false to skip.
template <class Visit>
FiberTable scan(const Field& F, long count, bool half, Exec ex, Visit visit) {
  int nthreads = ex == Exec::Parallel ? omp_get_max_threads() : 1;
  std::vector<FiberTable> local(nthreads);
  auto body = [&](long idx, FiberTable& tab) {
    std::vector<Poly> key;
    std::vector<Field::Elem> res;
    int sign = 1;
    if (!visit(idx, key, res, sign)) return;
    auto it = tab.find(key);
    if (it == tab.end()) it = tab.emplace(key, OrbitalProfile(F, half)).first;
    it->second.add(res, sign);
  };
  if (ex == Exec::Parallel) {
#pragma omp parallel num_threads(nthreads)
    {
      FiberTable& tab = local[omp_get_thread_num()];
#pragma omp for schedule(static)
      for (long idx = 0; idx < count; ++idx) body(idx, tab);
    }
  } else {
    for (long idx = 0; idx < count; ++idx) body(idx, local[0]);
  }
  FiberTable out = std::move(local[0]);
  for (int k = 1; k < nthreads; ++k)
    for (auto& [key, prof] : local[k]) {
      auto it = out.find(key);
      if (it == out.end())
        out.emplace(key, std::move(prof));
      else
        it->second.merge(prof);
    }
  return out;
}

std::vector<Field::Elem> decode(long idx, int n, int q) {
  std::vector<Field::Elem> e(n);
  for (int j = 0; j < n; ++j) {
    e[j] = static_cast<Field::Elem>(idx % q);
    idx /= q;
  }
  return e;
}

}  // namespace

FiberTable fiber_table_I(const Field& F, int r, Exec ex) {
  int q = F.q(), n = r * (r + 1) / 2;
  return scan(F, ipow(q, n), false, ex,
              [&](long idx, std::vector<Poly>& key, std::vector<Field::Elem>& res, int&) {
                std::vector<Field::Elem> e = decode(idx, n, q), x(r * r);
                int k = 0;
                for (int i = 0; i < r; ++i)
                  for (int j = i; j < r; ++j) x[i * r + j] = x[j * r + i] = e[k++];
                key = minor_invariants(F, r, x);
                for (int i = 1; i < r; ++i) res.push_back(x[(i - 1) * r + i]);
                return true;
              });
}

FiberTable fiber_table_J(const Field& F, int r, Exec ex) {
  int q = F.q(), n = r * r;
  return scan(F, ipow(q, n), true, ex,
              [&](long idx, std::vector<Poly>& key, std::vector<Field::Elem>& res, int& sign) {
                std::vector<Field::Elem> y = decode(idx, n, q);
                key = minor_invariants(F, r, y);
                Poly prod = Poly::constant(F, 1);
                for (int i = 0; i + 1 < r; ++i) prod = prod * key[i];
                if (gcd(prod, key.back()).deg() > 0) return false;
                Field::Elem kap = kappa_poly(F, r, y);
                if (kap == 0) throw std::logic_error("kappa_poly vanished on the coprime locus");
                sign = zeta_char(F, kap);
                for (int i = 1; i < r; ++i) res.push_back(F.add(y[(i - 1) * r + i], y[i * r + i - 1]));
                return true;
              });
}

namespace {

CycloValue fiber_lookup(const CycloRing& R, const FiberTable& tab, const GlobalTorus& t, const Alpha& alpha) {
  auto it = tab.find(t.a);
  return it == tab.end() ? CycloValue(R, 0) : it->second.evaluate(R, alpha);
}

void require_standard_degrees(const GlobalTorus& t) {
  for (int i = 0; i < t.r(); ++i)
    if (t.a[i].deg() != i + 1 || !t.a[i].is_monic())
      throw std::invalid_argument("matrix fibers need monic a_i of degree i");
}

}  // namespace

CycloValue matrix_fiber_sum_I(const CycloRing& R, const GlobalTorus& t, const Alpha& alpha) {
  require_standard_degrees(t);
  return fiber_lookup(R, fiber_table_I(t.field(), t.r()), t, alpha);
}

CycloValue matrix_fiber_sum_J(const CycloRing& R, const GlobalTorus& t, const Alpha& alpha) {
  require_standard_degrees(t);
  return fiber_lookup(R, fiber_table_J(t.field(), t.r()), t, alpha);
}

CycloValue tau_factor(const CycloRing& R, const Field& F, const std::vector<int>& d) {
  int r = static_cast<int>(d.size());
  if (r == 0) return CycloValue(R, 1);
  auto D = [&](int i) { return d[i - 1]; };  // 1-based
  auto par = [](int x) { return (x % 2 + 2) % 2; };
  long sum = 0;
  for (int x : d) sum += x;
  int s = r / 2;
  long zexp = 0, gexp = 0;
  if (r % 2 == 0) {
    for (int i = 0; i <= s - 1; ++i) zexp += D(2 * i + 1);
    for (int i = 1; i <= s - 1; ++i) gexp += par(D(2 * i) - D(2 * i + 1));
  } else {
    for (int i = 1; i <= s; ++i) zexp += D(2 * i);
    for (int i = 1; i <= s; ++i) gexp += par(D(2 * i) - D(2 * i - 1));
  }
  CycloValue out = CycloValue::sqrt_p_pow(R, static_cast<long>(F.m()) * sum);
  if (sum & 1) out = -out;
  if ((zexp & 1) && F.quadratic_char(F.neg(1)) < 0) out = -out;
  if (gexp) out *= weil_gamma(R, Rat::var(F), Place::infinity(F)).pow(-gexp);
  return out;
}

CycloValue tau_local_product(const CycloRing& R, const Field& F, const std::vector<int>& d) {
  int r = static_cast<int>(d.size());
  long sum = 0, zexp = 0, gexp = 0;
  for (int i = 0; i + 1 < r; ++i) sum += d[i];
  for (int j = 1; j < r; ++j) {
    if (j % 2 == r % 2) continue;
    zexp += d[j - 1];
    gexp += ((d[j - 1] - (j >= 2 ? d[j - 2] : 0)) % 2 + 2) % 2;
  }
  CycloValue out = CycloValue::sqrt_p_pow(R, static_cast<long>(F.m()) * sum);
  if ((zexp & 1) && F.quadratic_char(F.neg(1)) < 0) out = -out;
  if (gexp) out *= weil_gamma(R, Rat::var(F), Place::infinity(F)).pow(-gexp);
  return out;
}

int w0_sign(const Field& F, int r) { return ((r * (r - 1) / 2) & 1) ? F.quadratic_char(F.neg(1)) : 1; }

int global_jm_sign(const Field& F, const std::vector<int>& d, const Alpha& alpha) {
  int s = 1;
  for (std::size_t j = 0; j < alpha.size(); ++j)
    if (d[j] & 1) s *= F.quadratic_char(F.neg(alpha[j]));
  return s;
}

std::vector<Alpha> full_alpha_grid(const Field& F, int r) {
  std::vector<Alpha> out;
  int q = F.q(), n = r - 1;
  long total = ipow(q - 1, n);
  for (long idx = 0; idx < total; ++idx) {
    Alpha a(n);
    long x = idx;
    for (int j = 0; j < n; ++j) {
      a[j] = static_cast<Field::Elem>(1 + x % (q - 1));
      x /= q - 1;
    }
    out.push_back(a);
  }
  return out;
}

std::vector<GlobalTorus> admissible_tori(const Field& F, int r) {
  std::vector<GlobalTorus> out{GlobalTorus{}};
  for (int i = 1; i <= r; ++i) {
    std::vector<GlobalTorus> next;
    std::vector<Poly> polys = monic_polys(F, i);
    for (const GlobalTorus& g : out)
      for (const Poly& p : polys) {
        GlobalTorus h = g;
        h.a.push_back(p);
        next.push_back(std::move(h));
      }
    out = std::move(next);
  }
  std::vector<GlobalTorus> adm;
  for (GlobalTorus& g : out)
    if (g.admissible()) adm.push_back(std::move(g));
  return adm;
}

TheoremBReport theorem_B_check(const CycloRing& R, const Field& F, int r, const std::vector<Alpha>& alphas,
                               Exec ex) {
  TheoremBReport rep;
  FiberTable TI = fiber_table_I(F, r, ex), TJ = fiber_table_J(F, r, ex);
  std::vector<int> d(r);
  for (int i = 0; i < r; ++i) d[i] = i + 1;
  rep.tau = tau_factor(R, F, d);
  rep.tau_loc = tau_local_product(R, F, d);
  rep.ratio_by_alpha.resize(alphas.size());
  rep.ratio_constant = rep.ratio_constant_per_alpha = rep.zero_rule = rep.pass = rep.pass_reconciled = true;
  int sk = w0_sign(F, r);
  CycloValue ratio;
  for (const GlobalTorus& t : admissible_tori(F, r)) {
    ++rep.fibers;
    auto itI = TI.find(t.a);
    auto itJ = TJ.find(t.a);
    for (std::size_t j = 0; j < alphas.size(); ++j) {
      const Alpha& al = alphas[j];
      ++rep.checks;
      CycloValue I = itI == TI.end() ? CycloValue(R, 0) : itI->second.evaluate(R, al);
      CycloValue J = itJ == TJ.end() ? CycloValue(R, 0) : itJ->second.evaluate(R, al);
      int eps = global_jm_sign(F, d, al);
      if (I.is_zero()) {
        if (!J.is_zero()) rep.zero_rule = false;
      } else {
        ++rep.nonzero;
        CycloValue x = J / I;
        if (!ratio.valid())
          ratio = x;
        else if (x != ratio)
          rep.ratio_constant = false;
        CycloValue y = x / rep.tau;
        if (!rep.ratio_by_alpha[j].valid())
          rep.ratio_by_alpha[j] = y;
        else if (y != rep.ratio_by_alpha[j])
          rep.ratio_constant_per_alpha = false;
      }
      bool lit = J == rep.tau * I;
      bool rec = J == rep.tau_loc * I * CycloValue(R, sk * eps);
      if (!lit && rep.witness.empty()) {
        std::ostringstream os;
        os << "a=(";
        for (int i = 0; i < r; ++i) os << (i ? ", " : "") << t.a[i].str();
        os << ") alpha=(";
        for (std::size_t k = 0; k < al.size(); ++k) os << (k ? "," : "") << F.str(al[k]);
        os << ") I=" << I.str() << " J=" << J.str() << " tau=" << rep.tau.str();
        rep.witness = os.str();
      }
      rep.pass = rep.pass && lit;
      rep.pass_reconciled = rep.pass_reconciled && rec;
    }
  }
  return rep;
}

std::vector<ZetaSumCheck> zeta_sum_identity_check(const Field& F) {
  std::vector<ZetaSumCheck> out;
  int q = F.q();
  Field::Elem two = F.from_int(2);
  for (int u = 0; u < q; ++u)
    for (int c = 1; c < q; ++c) {
      ZetaSumCheck z;
      z.u = static_cast<Field::Elem>(u);
      z.c = static_cast<Field::Elem>(c);
      for (int v = 1; v < q; ++v)
        if (F.add(v, F.div(c, v)) == z.u) z.lhs += F.quadratic_char(v);
      for (int e = 0; e < q; ++e)
        if (F.mul(e, e) == z.c) z.rhs += F.quadratic_char(F.sub(z.u, F.mul(two, e)));
      z.rhs_unit = F.quadratic_char(F.sub(z.u, two)) + F.quadratic_char(F.add(z.u, two));
      z.pass = z.lhs == z.rhs && (c != 1 || z.lhs == z.rhs_unit);
      out.push_back(z);
    }
  return out;
}

}  // namespace jmfl
