// Copyright 2026 The tvec Authors
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

#include "tvec/characters.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

namespace tvec {

namespace {

i64 primitive_root_mod_p2(int p) {
  const i64 m = static_cast<i64>(p) * p;
  const i64 phi = static_cast<i64>(p) * (p - 1);
  std::vector<i64> primes;
  i64 n = phi;
  for (i64 q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    primes.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) primes.push_back(n);
  auto power = [m](i64 b, i64 e) {
    i64 x = 1;
    while (e > 0) {
      if (e & 1) x = mulmod(x, b, m);
      b = mulmod(b, b, m);
      e >>= 1;
    }
    return x;
  };
  for (i64 g = 2; g < m; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (i64 q : primes) ok = ok && power(g, phi / q) != 1;
    if (ok) return g;
  }
  throw DomainError("no primitive root found");
}

std::unique_ptr<UnitGroup> build_unit_group(int p, int m) {
  auto g = std::make_unique<UnitGroup>();
  g->p = p;
  g->m = m;
  g->modulus = ipow(p, m);
  if (m >= 1 && p != 2) {
    g->generators = {mod(primitive_root_mod_p2(p), g->modulus)};
    g->orders = {(p - 1) * ipow(p, m - 1)};
  } else if (p == 2 && m == 2) {
    g->generators = {3};
    g->orders = {2};
  } else if (p == 2 && m >= 3) {
    g->generators = {g->modulus - 1, 5};
    g->orders = {2, ipow(2, m - 2)};
  }
  g->exponent = 1;
  for (i64 o : g->orders) g->exponent = std::lcm(g->exponent, o);
  g->dlog.assign(static_cast<size_t>(g->modulus), {});
  if (g->generators.empty()) return g;
  const size_t k = g->generators.size();
  if (k == 1) {
    i64 x = 1;
    for (i64 e = 0; e < g->orders[0]; ++e) {
      g->dlog[x] = {e};
      x = mulmod(x, g->generators[0], g->modulus);
    }
  } else {
    i64 sign = 1;
    for (i64 e0 = 0; e0 < 2; ++e0) {
      i64 x = sign;
      for (i64 e1 = 0; e1 < g->orders[1]; ++e1) {
        g->dlog[x] = {e0, e1};
        x = mulmod(x, g->generators[1], g->modulus);
      }
      sign = g->modulus - 1;
    }
  }
  return g;
}

}  // namespace

cplx ipow(cplx z, int k) {
  if (k < 0) return 1.0 / ipow(z, -k);
  cplx r(1.0, 0.0);
  while (k > 0) {
    if (k & 1) r *= z;
    z *= z;
    k >>= 1;
  }
  return r;
}

const UnitGroup& unit_group(int p, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<UnitGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it == cache.end()) {
    if (!is_prime(p) || m < 0) throw DomainError("unit_group: bad (p, m)");
    ipow(p, m);
    it = cache.emplace(key, build_unit_group(p, m)).first;
  }
  return *it->second;
}

UnitChar::UnitChar(int p) : p_(p), m_(0), order_(1), phases_{0} {
  if (!is_prime(p)) throw DomainError("UnitChar: p must be prime");
}

UnitChar UnitChar::from_table(int p, int m, std::vector<i64> phases) {
  const UnitGroup& G = unit_group(p, m);
  // Smallest level k such that the character is trivial on 1 + p^k.
  int cond = m;
  while (cond > 0) {
    const i64 step = ipow(p, cond - 1);
    bool trivial = true;
    for (i64 u = 1; u < G.modulus && trivial; u += step) {
      if (u % p == 0) continue;
      if (phases[u] != 0) trivial = false;
    }
    if (!trivial) break;
    --cond;
  }
  // For p = 2 the kernel at level 1 is the whole trivial group, so a
  // character trivial on 1 + 4Z has conductor 0 (there is no conductor 1).
  if (p == 2 && cond == 1) cond = 0;
  const UnitGroup& H = unit_group(p, cond);
  UnitChar r(p);
  r.m_ = cond;
  r.order_ = H.exponent;
  r.phases_.assign(static_cast<size_t>(H.modulus), -1);
  const i64 scale = G.exponent / H.exponent;
  for (i64 u = 0; u < H.modulus; ++u) {
    if (H.modulus > 1 && u % p == 0) continue;
    const i64 lift = (H.modulus > 1) ? u : (G.modulus > 1 ? 1 : 0);
    const i64 ph = phases[lift];
    if (ph % scale != 0) throw DomainError("UnitChar: inconsistent table");
    r.phases_[u] = ph / scale;
  }
  r.exps_.clear();
  for (size_t j = 0; j < H.generators.size(); ++j) {
    const i64 g = H.generators[j];
    r.exps_.push_back(r.phases_[g] * H.orders[j] / H.exponent);
  }
  return r;
}

UnitChar UnitChar::from_exponents(int p, int m, const std::vector<i64>& exps) {
  if (m < 0) throw DomainError("UnitChar: negative conductor");
  const UnitGroup& G = unit_group(p, m);
  if (exps.size() != G.generators.size()) {
    throw DomainError("UnitChar: wrong number of unit exponents for (p, m)");
  }
  std::vector<i64> phases(static_cast<size_t>(G.modulus), -1);
  for (i64 u = 0; u < G.modulus; ++u) {
    if (G.modulus > 1 && u % p == 0) continue;
    if (G.modulus == 1) {
      phases[u] = 0;
      continue;
    }
    i64 ph = 0;
    for (size_t j = 0; j < exps.size(); ++j) {
      const i64 e = mod(exps[j], G.orders[j]);
      ph += mulmod(e, G.dlog[u][j], G.orders[j]) * (G.exponent / G.orders[j]);
    }
    phases[u] = mod(ph, G.exponent);
  }
  UnitChar r = from_table(p, m, std::move(phases));
  if (r.m_ != m) {
    throw DomainError("UnitChar: character is not primitive at the stated "
                      "conductor (store it at conductor " +
                      std::to_string(r.m_) + ")");
  }
  return r;
}

int UnitChar::conductor() const {
  if (m_ > 0) {
    const i64 step = ipow(p_, m_ - 1);
    const i64 M = ipow(p_, m_);
    bool trivial = true;
    for (i64 u = 1; u < M && trivial; u += step) {
      if (u % p_ == 0) continue;
      if (phases_[u] != 0) trivial = false;
    }
    if (trivial || (p_ == 2 && m_ == 1)) {
      throw std::logic_error("UnitChar: stored conductor is not primitive");
    }
  }
  return m_;
}

i64 UnitChar::phase(i64 u) const {
  if (u % p_ == 0) throw DomainError("UnitChar: argument is not a unit");
  if (m_ == 0) return 0;
  return phases_[mod(u, static_cast<i64>(phases_.size()))];
}

cplx UnitChar::operator()(i64 u) const {
  const i64 ph = phase(u);
  if (ph == 0) return {1.0, 0.0};
  const double t = 2.0 * std::numbers::pi * static_cast<double>(ph) /
                   static_cast<double>(order_);
  return {std::cos(t), std::sin(t)};
}

UnitChar UnitChar::operator*(const UnitChar& o) const {
  if (o.p_ != p_) throw DomainError("UnitChar: characters of different p");
  const int M = std::max(m_, o.m_);
  const UnitGroup& G = unit_group(p_, M);
  std::vector<i64> phases(static_cast<size_t>(G.modulus), -1);
  for (i64 u = 0; u < G.modulus; ++u) {
    if (G.modulus > 1 && u % p_ == 0) continue;
    const i64 lift = (G.modulus == 1) ? 1 : u;  // any unit represents 0 mod 1
    const i64 a = phase(lift) * (G.exponent / order_);
    const i64 b = o.phase(lift) * (G.exponent / o.order_);
    phases[u] = mod(a + b, G.exponent);
  }
  return from_table(p_, M, std::move(phases));
}

UnitChar UnitChar::inverse() const {
  UnitChar r = *this;
  for (auto& ph : r.phases_) {
    if (ph > 0) ph = order_ - ph;
  }
  const UnitGroup& H = unit_group(p_, m_);
  for (size_t j = 0; j < r.exps_.size(); ++j) {
    r.exps_[j] = mod(-r.exps_[j], H.orders[j]);
  }
  return r;
}

UnitChar UnitChar::pow(i64 k) const {
  std::vector<i64> phases = phases_;
  for (auto& ph : phases) {
    if (ph >= 0) ph = mulmod(ph, mod(k, order_), order_);
  }
  return from_table(p_, m_, std::move(phases));
}

i64 UnitChar::order() const {
  i64 g = order_;
  for (i64 ph : phases_) {
    if (ph >= 0) g = std::gcd(g, ph);
  }
  return order_ / g;
}

bool operator==(const UnitChar& a, const UnitChar& b) {
  return a.p_ == b.p_ && a.m_ == b.m_ && a.phases_ == b.phases_;
}

std::vector<UnitChar> UnitChar::all_up_to(int p, int k) {
  const UnitGroup& G = unit_group(p, k);
  std::vector<UnitChar> out;
  if (G.generators.empty()) {
    out.emplace_back(p);
    return out;
  }
  std::vector<i64> e(G.generators.size(), 0);
  while (true) {
    std::vector<i64> phases(static_cast<size_t>(G.modulus), -1);
    for (i64 u = 0; u < G.modulus; ++u) {
      if (u % p == 0) continue;
      i64 ph = 0;
      for (size_t j = 0; j < e.size(); ++j) {
        ph += mulmod(e[j], G.dlog[u][j], G.orders[j]) *
              (G.exponent / G.orders[j]);
      }
      phases[u] = mod(ph, G.exponent);
    }
    out.push_back(from_table(p, k, std::move(phases)));
    size_t j = 0;
    while (j < e.size() && ++e[j] == G.orders[j]) e[j++] = 0;
    if (j == e.size()) break;
  }
  return out;
}

MultChar MultChar::abs_power(int p, double s) {
  return unramified(p, {std::pow(static_cast<double>(p), -s), 0.0});
}

cplx MultChar::eval_parts(int v, i64 u) const {
  return ipow(unram_, v) * unit_(u);
}

cplx MultChar::eval(const LocalFieldElem& x) const {
  if (x.is_zero()) throw DomainError("eval_char: zero argument");
  if (x.p() != p()) throw DomainError("eval_char: field mismatch");
  if (x.precision() < unit_.level()) {
    throw PrecisionError("eval_char: unit known to fewer digits than the "
                         "conductor");
  }
  return eval_parts(x.val(), x.unit());
}

cplx MultChar::eval(i64 x) const { return eval(static_cast<i128>(x)); }

cplx MultChar::eval(i128 x) const {
  if (x == 0) throw DomainError("eval_char: zero argument");
  const int v = val_p(x, p());
  const i128 u = tvec::unit_part(x, p());
  const i64 m = ipow(p(), unit_.level());
  return eval_parts(v, m == 1 ? 1 : mod(u, m));
}

MultChar MultChar::operator*(const MultChar& o) const {
  return MultChar(unram_ * o.unram_, unit_ * o.unit_);
}

MultChar MultChar::inverse() const {
  return MultChar(1.0 / unram_, unit_.inverse());
}

MultChar MultChar::pow(int k) const {
  return MultChar(ipow(unram_, k), unit_.pow(k));
}

bool MultChar::approx_equal(const MultChar& o, double tol) const {
  return unit_ == o.unit_ && std::abs(unram_ - o.unram_) <= tol;
}

cplx eval_char(const MultChar& chi, const LocalFieldElem& x) {
  return chi.eval(x);
}

cplx BorelChar::alpha() const {
  const double rp = std::sqrt(static_cast<double>(p()));
  return 1.0 / (mu.unramified_value() / rp);
}

cplx BorelChar::beta() const {
  const double rp = std::sqrt(static_cast<double>(p()));
  return 1.0 / (mu_prime.unramified_value() * rp);
}

cplx BorelChar::eval_with_modulus(i128 a, i128 d) const {
  const int va = val_p(a, p());
  const int vd = val_p(d, p());
  const double mod = std::pow(static_cast<double>(p()), -(va - vd) / 2.0);
  return mu.eval(a) * mu_prime.eval(d) * mod;
}

}  // namespace tvec
