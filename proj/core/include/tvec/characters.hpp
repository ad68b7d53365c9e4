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

// Characters of Q_p^x and of the Borel subgroup.
//
// A character of (Z/p^m)^x is stored exactly: its value at u is
// exp(2 pi i * phase(u) / order) with an integer phase, so products and
// conductor tests are exact. Complex numbers appear only on evaluation.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "tvec/local_field.hpp"
#include "tvec/zp.hpp"

namespace tvec {

using cplx = std::complex<double>;

// z^k for an integer k by repeated squaring.
cplx ipow(cplx z, int k);

// The group (Z/p^m)^x with a fixed generating set: for odd p the smallest
// primitive root modulo p^2 (it generates for every m); for p = 2 the
// elements -1 and 5 (only -1 when m = 2, nothing when m <= 1).
struct UnitGroup {
  int p = 2;
  int m = 0;
  i64 modulus = 1;              // p^m
  i64 exponent = 1;             // lcm of generator orders
  std::vector<i64> generators;  // reduced mod p^m
  std::vector<i64> orders;
  // For each residue r mod p^m: exponents of r against the generators, or
  // empty when r is not a unit.
  std::vector<std::vector<i64>> dlog;
};

// Shared read-only table, built once per (p, m).
const UnitGroup& unit_group(int p, int m);

class UnitChar {
 public:
  // The trivial character (conductor 0).
  explicit UnitChar(int p);

  // Character sending generator j to exp(2 pi i e_j / order_j), required to
  // be primitive modulo p^m. Throws DomainError otherwise.
  static UnitChar from_exponents(int p, int m, const std::vector<i64>& exps);

  int p() const { return p_; }
  // Conductor, re-verified against the stored table.
  int conductor() const;
  // Stored conductor without re-verification (hot paths).
  int level() const { return m_; }
  bool is_trivial() const { return m_ == 0; }
  const std::vector<i64>& exponents() const { return exps_; }

  // Exact phase numerator of u over group_exponent(); u coprime to p.
  i64 phase(i64 u) const;
  i64 group_exponent() const { return order_; }
  cplx operator()(i64 u) const;

  UnitChar operator*(const UnitChar& o) const;
  UnitChar inverse() const;
  UnitChar pow(i64 k) const;
  // Order of the character as a group element.
  i64 order() const;

  friend bool operator==(const UnitChar& a, const UnitChar& b);
  friend bool operator!=(const UnitChar& a, const UnitChar& b) {
    return !(a == b);
  }

  // All characters of (Z/p^k)^x with conductor <= k.
  static std::vector<UnitChar> all_up_to(int p, int k);

 private:
  // Builds from a phase table at level m (over the group exponent of
  // (Z/p^m)^x), reducing to the true conductor.
  static UnitChar from_table(int p, int m, std::vector<i64> phases);

  int p_;
  int m_ = 0;
  i64 order_ = 1;             // group exponent at level m_
  std::vector<i64> phases_;   // indexed by residue mod p^m_, -1 off units
  std::vector<i64> exps_;
};

class MultChar {
 public:
  explicit MultChar(int p) : unram_(1.0, 0.0), unit_(p) {}
  MultChar(cplx unramified_value, UnitChar unit_part)
      : unram_(unramified_value), unit_(std::move(unit_part)) {}

  static MultChar trivial(int p) { return MultChar(p); }
  static MultChar unramified(int p, cplx value_at_p) {
    return MultChar(value_at_p, UnitChar(p));
  }
  // |x|^s.
  static MultChar abs_power(int p, double s);

  int p() const { return unit_.p(); }
  cplx unramified_value() const { return unram_; }
  const UnitChar& unit_part() const { return unit_; }
  int conductor() const { return unit_.conductor(); }
  bool is_unramified() const { return unit_.is_trivial(); }

  // Evaluation on x != 0; needs the unit of x to at least conductor digits.
  cplx eval(const LocalFieldElem& x) const;
  cplx eval(i64 x) const;
  cplx eval(i128 x) const;
  // chi(p^v u) for a unit u.
  cplx eval_parts(int v, i64 u) const;

  MultChar operator*(const MultChar& o) const;
  MultChar inverse() const;
  MultChar pow(int k) const;

  // Same unit part and unramified values within tol.
  bool approx_equal(const MultChar& o, double tol = 1e-9) const;

 private:
  cplx unram_;
  UnitChar unit_;
};

cplx eval_char(const MultChar& chi, const LocalFieldElem& x);

// chi(a, *; 0, d) = mu(a) mu'(d).
struct BorelChar {
  MultChar mu;
  MultChar mu_prime;

  int p() const { return mu.p(); }
  MultChar central() const { return mu * mu_prime; }
  // alpha^-1 = mu(p)|p|^(1/2), beta^-1 = mu'(p)|p|^(-1/2).
  cplx alpha() const;
  cplx beta() const;
  // chi(b) delta(b)^(1/2) for b = (a, *; 0, d).
  cplx eval_with_modulus(i128 a, i128 d) const;
  BorelChar swapped() const { return {mu_prime, mu}; }
  BorelChar twisted(const MultChar& eta) const {
    return {mu * eta, mu_prime * eta};
  }
};

}  // namespace tvec
