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

#include "tvec/kernel_oracle.hpp"

#include <array>
#include <cmath>

namespace tvec {

namespace {

// chart 0: (1, y), y in O; chart 1: (x, 1), x in pO. center mod p^r.
struct Ball {
  int chart;
  i64 center;
};

struct Pair {
  int i, j;
};
constexpr std::array<Pair, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};

class Integrator {
 public:
  Integrator(const std::array<const InducedVector*, 3>& f,
             const KernelExponents& e, const KernelOptions& opt)
      : f_(f), opt_(opt), p_(f[0]->p()) {
    rho_ = {e.rho12, e.rho13, e.rho23};
    for (int k = 0; k < 3; ++k) {
      cond_[k] = rho_[k].conductor();
      const cplx q = rho_[k].unramified_value() / static_cast<double>(p_);
      if (rho_[k].is_unramified()) {
        if (std::abs(1.0 - q) < 1e-9) {
          throw DomainError("kernel_oracle: exponent on the boundary (pair series)");
        }
        pair_q_[k] = q;
      }
    }
    sigma_ = e.rho12.unramified_value() * e.rho13.unramified_value() *
             e.rho23.unramified_value();
    const cplx denom = 1.0 - sigma_ / static_cast<double>(p_ * p_);
    if (std::abs(denom) < 1e-9) {
      throw DomainError("kernel_oracle: exponent on the boundary (triple series)");
    }
    triple_denom_ = denom;
  }

  cplx run() {
    cplx total(0.0, 0.0);
    std::vector<Ball> top;
    for (i64 y = 0; y < p_; ++y) top.push_back({0, y});
    top.push_back({1, 0});
    for (const Ball& a : top) {
      for (const Ball& b : top) {
        for (const Ball& c : top) total += integrate({a, b, c}, 1);
      }
    }
    return total;
  }

  double abs_mass() const { return abs_mass_; }
  i64 cells() const { return cells_; }

 private:
  cplx F(int i, const Ball& b) const {
    const Mat2 m = b.chart == 0 ? Mat2{0, -1, 1, b.center} : Mat2{1, 0, b.center, 1};
    return f_[i]->eval(m);
  }

  // D_ij at the centers (i < j), with the radius to which it is known.
  i64 delta(const Ball& bi, const Ball& bj, i64 q) const {
    if (bi.chart == 0 && bj.chart == 0) return mod(bj.center - bi.center, q);
    if (bi.chart == 1 && bj.chart == 1) return mod(bi.center - bj.center, q);
    if (bi.chart == 0) return mod(1 - mulmod(mod(bi.center, q), mod(bj.center, q), q), q);
    return mod(mulmod(mod(bi.center, q), mod(bj.center, q), q) - 1, q);
  }

  // rho_k(D) on distinct balls at radius r, or nullopt when not constant.
  bool pair_value(int k, const std::array<Ball, 3>& t, int r, cplx* out) const {
    const Ball& bi = t[kPairs[k].i];
    const Ball& bj = t[kPairs[k].j];
    const i64 q = ipow(p_, r);
    const i64 dv = delta(bi, bj, q);
    if (dv == 0) return false;
    int v = 0;
    i64 u = dv;
    while (u % p_ == 0) {
      u /= p_;
      ++v;
    }
    if (r - v < cond_[k]) return false;
    *out = rho_[k].eval_parts(v, u);
    return true;
  }

  static bool same(const Ball& a, const Ball& b) {
    return a.chart == b.chart && a.center == b.center;
  }

  bool f_constant(int r) const {
    for (int i = 0; i < 3; ++i) {
      if (f_[i]->level() > r) return false;
    }
    return true;
  }

  cplx subdivide(const std::array<Ball, 3>& t, int r, bool skip_diagonal) {
    const i64 q = ipow(p_, r);
    cplx s(0.0, 0.0);
    for (i64 a = 0; a < p_; ++a) {
      for (i64 b = 0; b < p_; ++b) {
        for (i64 c = 0; c < p_; ++c) {
          if (skip_diagonal && a == b && b == c) continue;
          s += integrate({Ball{t[0].chart, t[0].center + a * q},
                          Ball{t[1].chart, t[1].center + b * q},
                          Ball{t[2].chart, t[2].center + c * q}},
                         r + 1);
        }
      }
    }
    return s;
  }

  cplx record(cplx v) {
    abs_mass_ += std::abs(v);
    ++cells_;
    if (cells_ > opt_.max_cells) throw DomainError("kernel_oracle: cell budget exceeded");
    return v;
  }

  cplx integrate(const std::array<Ball, 3>& t, int r) {
    if (r > opt_.max_radius) throw DomainError("kernel_oracle: refinement too deep");
    const double vol = std::pow(static_cast<double>(p_), -r);
    const bool e01 = same(t[0], t[1]);
    const bool e02 = same(t[0], t[2]);
    const bool e12 = same(t[1], t[2]);
    const int coincident = e01 + e02 + e12;
    if (coincident == 3) {
      if (!f_constant(r)) return subdivide(t, r, false);
      // I_(r+1) = p^-3 sigma I_r on each of the p diagonal sub-triples.
      return subdivide(t, r, true) / triple_denom_;
    }
    if (!f_constant(r)) return subdivide(t, r, false);
    cplx prod = F(0, t[0]) * F(1, t[1]) * F(2, t[2]);
    if (coincident == 0) {
      for (int k = 0; k < 3; ++k) {
        cplx v;
        if (!pair_value(k, t, r, &v)) return subdivide(t, r, false);
        prod *= v;
      }
      return record(prod * vol * vol * vol);
    }
    // Exactly one coincident pair.
    const int kc = e01 ? 0 : (e02 ? 1 : 2);
    for (int k = 0; k < 3; ++k) {
      if (k == kc) continue;
      cplx v;
      if (!pair_value(k, t, r, &v)) return subdivide(t, r, false);
      prod *= v;
    }
    // int over B x B of rho(z_j - z_i) = vol(B) int_{p^r O} rho.
    cplx inner(0.0, 0.0);
    if (rho_[kc].is_unramified()) {
      const cplx q = pair_q_[kc];
      inner = (1.0 - 1.0 / static_cast<double>(p_)) * ipow(q, r) / (1.0 - q);
    }
    return record(prod * vol * vol * inner);
  }

  std::array<const InducedVector*, 3> f_;
  KernelOptions opt_;
  int p_;
  std::array<MultChar, 3> rho_{MultChar(2), MultChar(2), MultChar(2)};
  std::array<int, 3> cond_{};
  std::array<cplx, 3> pair_q_{};
  cplx sigma_;
  cplx triple_denom_;
  double abs_mass_ = 0.0;
  i64 cells_ = 0;
};

}  // namespace

KernelExponents kernel_exponents(const BorelChar& c1, const BorelChar& c2,
                                 const BorelChar& c3) {
  const MultChar h = MultChar::abs_power(c1.p(), -0.5);
  return {c1.mu * c2.mu * c3.mu_prime * h, c1.mu * c3.mu * c2.mu_prime * h,
          c2.mu * c3.mu * c1.mu_prime * h};
}

KernelResult kernel_oracle(const InducedVector& f1, const InducedVector& f2,
                           const InducedVector& f3, const KernelOptions& opt) {
  const int p = f1.p();
  if (f2.p() != p || f3.p() != p) throw DomainError("kernel_oracle: p mismatch");
  const MultChar w = f1.chi().central() * f2.chi().central() * f3.chi().central();
  if (!w.approx_equal(MultChar::trivial(p))) {
    throw DomainError("kernel_oracle: central characters do not multiply to 1");
  }
  Integrator it({&f1, &f2, &f3}, kernel_exponents(f1.chi(), f2.chi(), f3.chi()), opt);
  KernelResult res;
  res.value = it.run();
  res.abs_mass = it.abs_mass();
  res.cells = it.cells();
  return res;
}

}  // namespace tvec
