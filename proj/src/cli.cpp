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

#include "jmfl/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "jmfl/global.hpp"
#include "jmfl/metaplectic.hpp"
#include "jmfl/orbital.hpp"
#include "jmfl/symbols.hpp"

namespace jmfl {

using json = nlohmann::ordered_json;

namespace {

class Campaign {
 public:
  Campaign(const CampaignConfig& c, Report& out)
      : cfg_(c), out_(out), F_(Field::of_order(c.q)), R_(CycloRing::get(F_.p())), rng_(c.seed) {}

  void run(const std::string& name) {
    if (name == "zeta-identity") return zeta();
    if (name == "local-r2") return local(2);
    if (name == "local-r3") return local(3);
    if (name == "theorem-B") return fibers();
    if (name == "resultant") return resultant_sweep();
    if (name == "weil-product") return weil();
    if (name == "cocycle") return cocycle();
  }

 private:
  using Clock = std::chrono::steady_clock;

  Exec ex() const { return cfg_.threads == 1 ? Exec::Serial : Exec::Parallel; }

  json value(const CycloValue& x) const {
    json coeffs = json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(c.get_str());
    json o{{"str", x.str()}, {"coeffs", coeffs}};
    if (cfg_.mode == "float") {
      auto z = x.to_complex();
      o["float"] = json::array({z.real(), z.imag()});
    }
    return o;
  }

  json alpha_json(const Alpha& a) const {
    json o = json::array();
    for (auto e : a) o.push_back(F_.str(e));
    return o;
  }

  void record(std::string name, json inputs, json values, bool pass, Clock::time_point t0) {
    CheckRecord rec{std::move(name), std::move(inputs), std::move(values), pass, 0};
    if (cfg_.timing)
      rec.micros = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count();
    out_.checks.push_back(std::move(rec));
  }

  std::vector<Alpha> alphas(int r) {
    std::vector<Alpha> all = full_alpha_grid(F_, r);
    if (cfg_.alpha == "all") return all;
    std::size_t n = std::stoul(cfg_.alpha.substr(7));
    if (n >= all.size()) return all;
    std::vector<Alpha> out;
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (std::size_t i = 0; i < n; ++i) out.push_back(all[pick(rng_)]);
    return out;
  }

  void zeta() {
    auto t0 = Clock::now();
    for (const ZetaSumCheck& c : zeta_sum_identity_check(F_)) {
      record("zeta-identity", json{{"q", F_.q()}, {"u", F_.str(c.u)}, {"c", F_.str(c.c)}},
             json{{"lhs", c.lhs}, {"rhs", c.rhs}, {"rhs_unit", c.rhs_unit}}, c.pass, t0);
      t0 = Clock::now();
    }
  }

  // a_1 = c_1ϖ^{k_1}, ..., a_{r-1} = c_{r-1}ϖ^{k_{r-1}}, a_r = c_r with k_i <= vmax.
  void local(int r) {
    Place v = Place::origin(F_);
    Locality loc = Locality::at(v);
    std::vector<Alpha> grid = alphas(r);
    int q = F_.q();
    std::vector<int> k(r - 1, 0);
    std::vector<Field::Elem> c(r, 1);
    for (;;) {
      std::vector<Rat> a;
      for (int i = 0; i + 1 < r; ++i) a.push_back(Rat::var_pow(F_, k[i]).scaled(c[i]));
      a.push_back(Rat::constant(F_, c[r - 1]));
      TorusParam t{a};
      auto t0 = Clock::now();
      OrbitalProfile Ip = I_profile(t, loc, ex()), Jp = J_profile(t, loc, ex());
      CycloValue tf = transfer_factor(R_, t, v, false), tfp = transfer_factor(R_, t, v, true);
      json ain = json::array();
      for (auto& x : a) ain.push_back(x.str());
      for (const Alpha& al : grid) {
        int eps = jm_sign(t, al, v);
        JacquetMaoReport rep = jacquet_mao_check(R_, Ip, Jp, tf, tfp, eps, al);
        json vals{{"I", value(rep.I)},     {"J", value(rep.J)},           {"t", value(rep.tf)},
                  {"t_prime", value(rep.tf_prime)}, {"eps", eps},          {"card_X", rep.card_X},
                  {"card_Y", rep.card_Y},  {"literal", rep.pass},         {"signed", rep.pass_signed}};
        if (!rep.detail.empty()) vals["detail"] = rep.detail;
        record(r == 2 ? "local-r2" : "local-r3", json{{"q", q}, {"a", ain}, {"alpha", alpha_json(al)}}, vals,
               cfg_.strict ? rep.pass : rep.pass_signed, t0);
        t0 = Clock::now();
      }
      // Odometer over (k, c).
      int i = 0;
      for (; i < 2 * r - 1; ++i) {
        if (i < r - 1) {
          if (++k[i] <= cfg_.vmax) break;
          k[i] = 0;
        } else {
          int j = i - (r - 1);
          if (++c[j] < static_cast<Field::Elem>(q)) break;
          c[j] = 1;
        }
      }
      if (i == 2 * r - 1) break;
    }
  }

  void fibers() {
    int r = cfg_.r;
    std::vector<Alpha> grid = alphas(r);
    auto t0 = Clock::now();
    FiberTable TI = fiber_table_I(F_, r, ex()), TJ = fiber_table_J(F_, r, ex());
    std::vector<int> d(r);
    for (int i = 0; i < r; ++i) d[i] = i + 1;
    CycloValue tau = tau_factor(R_, F_, d), tau_loc = tau_local_product(R_, F_, d);
    int sk = w0_sign(F_, r);
    auto get = [&](const FiberTable& T, const GlobalTorus& t, const Alpha& al) {
      auto it = T.find(t.a);
      return it == T.end() ? CycloValue(R_, 0) : it->second.evaluate(R_, al);
    };
    // The ratio J/(τI) per α: constant over fibers is the pre-check.
    std::vector<CycloValue> ratio(grid.size());
    std::vector<bool> constant(grid.size(), true);
    bool zero_rule = true;
    for (const GlobalTorus& t : admissible_tori(F_, r)) {
      json ain = json::array();
      for (auto& p : t.a) ain.push_back(p.str());
      for (std::size_t j = 0; j < grid.size(); ++j) {
        CycloValue I = get(TI, t, grid[j]), J = get(TJ, t, grid[j]);
        int eps = global_jm_sign(F_, d, grid[j]);
        bool lit = J == tau * I;
        bool rec = J == tau_loc * I * CycloValue(R_, sk * eps);
        if (I.is_zero()) {
          zero_rule = zero_rule && J.is_zero();
        } else {
          CycloValue x = J / (tau * I);
          if (!ratio[j].valid())
            ratio[j] = x;
          else if (x != ratio[j])
            constant[j] = false;
        }
        record("theorem-B", json{{"q", F_.q()}, {"a", ain}, {"alpha", alpha_json(grid[j])}},
               json{{"I", value(I)},
                    {"J", value(J)},
                    {"tau", value(tau)},
                    {"tau_loc", value(tau_loc)},
                    {"eps", eps},
                    {"w0_sign", sk},
                    {"literal", lit},
                    {"reconciled", rec}},
               cfg_.strict ? lit : rec, t0);
        t0 = Clock::now();
      }
    }
    for (std::size_t j = 0; j < grid.size(); ++j) {
      json vals{{"constant", static_cast<bool>(constant[j])}, {"zero_rule", zero_rule}};
      if (ratio[j].valid()) vals["ratio"] = value(ratio[j]);
      record("theorem-B-ratio", json{{"q", F_.q()}, {"r", r}, {"alpha", alpha_json(grid[j])}}, vals,
             constant[j] && zero_rule, t0);
    }
  }

  void resultant_sweep() {
    int r = cfg_.r, q = F_.q();
    int sgn = 0;
    for (int i = 1; i < r; ++i) sgn += i + i * (i + 1);
    double space = 1;
    for (int i = 0; i < r * r; ++i) space *= q;
    bool exhaustive = space <= 1e5;
    std::size_t total = exhaustive ? static_cast<std::size_t>(space) : 10000;
    std::vector<Field::Elem> y(r * r, 0), yt(r * r);
    std::uniform_int_distribution<int> el(0, q - 1);
    for (std::size_t n = 0; n < total; ++n) {
      auto t0 = Clock::now();
      if (exhaustive) {
        std::size_t x = n;
        for (auto& e : y) {
          e = static_cast<Field::Elem>(x % q);
          x /= q;
        }
      } else {
        for (auto& e : y) e = static_cast<Field::Elem>(el(rng_));
      }
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) yt[j * r + i] = y[i * r + j];
      auto a = minor_invariants(F_, r, y);
      Field::Elem lhs = F_.mul(kappa_poly(F_, r, y), kappa_poly(F_, r, yt));
      Field::Elem rhs = resultant(a[r - 2], a[r - 1]);
      if (sgn % 2) rhs = F_.neg(rhs);
      json yin = json::array();
      for (auto e : y) yin.push_back(F_.str(e));
      record("resultant", json{{"q", q}, {"r", r}, {"y", yin}}, json{{"lhs", F_.str(lhs)}, {"rhs", F_.str(rhs)}},
             lhs == rhs, t0);
    }
  }

  Poly random_poly(int deg) {
    std::uniform_int_distribution<int> el(0, F_.q() - 1);
    std::vector<Field::Elem> c(deg + 1);
    for (auto& x : c) x = static_cast<Field::Elem>(el(rng_));
    if (c.back() == 0) c.back() = 1;
    return Poly(F_, c);
  }

  void weil() {
    std::uniform_int_distribution<int> deg(0, 3);
    for (int n = 0; n < 100; ++n) {
      auto t0 = Clock::now();
      Rat a(random_poly(deg(rng_)), random_poly(deg(rng_)));
      WeilProduct wp = weil_product(R_, a);
      record("weil-product", json{{"q", F_.q()}, {"a", a.str()}},
             json{{"product", value(wp.product)}, {"places", wp.factors.size()}}, wp.product == CycloValue(R_, 1),
             t0);
    }
  }

  RMat random_invertible(int r) {
    std::uniform_int_distribution<int> kind(0, 3), deg(0, 1);
    for (;;) {
      RMat m(F_, r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          if (kind(rng_)) m(i, j) = Rat(random_poly(deg(rng_)), random_poly(deg(rng_)));
      if (!m.det().is_zero()) return m;
    }
  }

  void cocycle() {
    int r = cfg_.r;
    Place v = Place::origin(F_);
    ResidueField kv(v);
    for (int n = 0; n < 100; ++n) {
      auto t0 = Clock::now();
      RMat a = random_invertible(r), b = random_invertible(r), c = random_invertible(r);
      Poly lhs = kv.mul(chi(b, c, v), chi(a, b * c, v));
      Poly rhs = kv.mul(chi(a * b, c, v), chi(a, b, v));
      record("cocycle", json{{"q", F_.q()}, {"r", r}, {"g1", a.str()}, {"g2", b.str()}, {"g3", c.str()}},
             json{{"lhs", lhs.str()}, {"rhs", rhs.str()}}, lhs == rhs, t0);
    }
  }

  const CampaignConfig& cfg_;
  Report& out_;
  const Field& F_;
  const CycloRing& R_;
  std::mt19937_64 rng_;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char ch : s) {
    if (ch == '"') o += '"';
    o += ch;
  }
  return o + "\"";
}

}  // namespace

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names = {"zeta-identity", "local-r2",     "local-r3", "theorem-B",
                                                 "resultant",     "weil-product", "cocycle"};
  return names;
}

void validate(const CampaignConfig& c) {
  try {
    Field::of_order(c.q);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("--q: ") + e.what());
  }
  if (c.r < 2) throw ConfigError("--r must be at least 2");
  if (c.vmax < 0) throw ConfigError("--vmax must be nonnegative");
  if (c.mode != "exact" && c.mode != "float") throw ConfigError("--mode must be exact or float");
  if (c.alpha != "all") {
    bool ok = c.alpha.rfind("sample:", 0) == 0 && c.alpha.size() > 7 &&
              std::all_of(c.alpha.begin() + 7, c.alpha.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
    if (!ok) throw ConfigError("--alpha must be all or sample:N");
  }
  if (c.threads < 0) throw ConfigError("--threads must be nonnegative");
  for (const auto& n : c.campaigns)
    if (std::find(campaign_names().begin(), campaign_names().end(), n) == campaign_names().end())
      throw ConfigError("unknown campaign " + n);
  bool fib = std::find(c.campaigns.begin(), c.campaigns.end(), "theorem-B") != c.campaigns.end();
  if (fib && c.r > 3) throw ConfigError("theorem-B needs r in {2, 3}");
}

Report run_campaign(const CampaignConfig& c) {
  validate(c);
  if (c.threads > 0) omp_set_num_threads(c.threads);
  Report rep;
  rep.config = c;
  Campaign run(c, rep);
  for (const auto& n : c.campaigns) run.run(n);
  return rep;
}

std::size_t Report::failed() const {
  return std::count_if(checks.begin(), checks.end(), [](const CheckRecord& r) { return !r.pass; });
}

json Report::to_json() const {
  json cfg{{"p", Field::of_order(config.q).p()},
           {"m", Field::of_order(config.q).m()},
           {"q", config.q},
           {"r", config.r},
           {"vmax", config.vmax},
           {"alpha", config.alpha},
           {"campaigns", config.campaigns},
           {"mode", config.mode},
           {"seed", config.seed},
           {"strict", config.strict}};
  json checks_j = json::array();
  std::map<std::string, std::pair<std::size_t, std::size_t>> by;
  for (const auto& r : checks) {
    checks_j.push_back(
        json{{"name", r.name}, {"inputs", r.inputs}, {"values", r.values}, {"pass", r.pass}, {"micros", r.micros}});
    auto& [p, f] = by[r.name];
    ++(r.pass ? p : f);
  }
  json per = json::object();
  for (const auto& [n, pf] : by) per[n] = json{{"passed", pf.first}, {"failed", pf.second}};
  std::size_t bad = failed();
  json summary{{"total", checks.size()}, {"passed", checks.size() - bad}, {"failed", bad}, {"by_name", per}};
  return json{{"config", cfg}, {"checks", checks_j}, {"summary", summary}};
}

std::string Report::to_csv() const {
  std::ostringstream os;
  os << "name,pass,micros,inputs,values\n";
  for (const auto& r : checks)
    os << r.name << ',' << (r.pass ? "true" : "false") << ',' << r.micros << ',' << csv_field(r.inputs.dump()) << ','
       << csv_field(r.values.dump()) << '\n';
  return os.str();
}

}  // namespace jmfl
