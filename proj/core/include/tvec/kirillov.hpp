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

// Kirillov-model fragment: locally constant compactly supported functions on
// Q_p^x with the Borel action
//   (a, b; 0, d) f (x) = omega(d) psi(b x / d) f(a x / d),
// the pairing Phi(f, f') = int f f' |x|^-1 d^x x (vol O^x = 1), and
// supercuspidal stubs, which expose only their new vector and its
// eigenproperty.

#pragma once

#include <map>
#include <string>
#include <utility>

#include "tvec/characters.hpp"
#include "tvec/gl2.hpp"
#include "tvec/rep_spec.hpp"

namespace tvec {

// Additive character relative to which a Kirillov model is taken.
enum class AddChar { kPsi, kPsiBar };

class KirillovVector {
 public:
  // The zero function; cells are (v, u) with u a unit mod p^depth.
  KirillovVector(int p, int depth, AddChar side);
  // Characteristic function of O^x.
  static KirillovVector unit_indicator(int p, AddChar side);

  int p() const { return p_; }
  int depth() const { return depth_; }
  AddChar side() const { return side_; }
  const std::map<std::pair<int, i64>, cplx>& cells() const { return cells_; }

  void set(int v, i64 u, cplx value);
  // Value at p^v u for a unit u.
  cplx at(int v, i64 u) const;
  KirillovVector refined(int depth) const;

  KirillovVector operator+(const KirillovVector& o) const;
  KirillovVector operator*(cplx s) const;
  bool approx_equal(const KirillovVector& o, double tol = 1e-9) const;

 private:
  int p_;
  int depth_;
  i64 modulus_;
  AddChar side_;
  std::map<std::pair<int, i64>, cplx> cells_;
};

// b must be upper triangular; omega is the central character of the model.
// The depth grows to resolve psi(b x / d) on the support; PrecisionError if
// the entries of b are not known to the digits that requires.
KirillovVector borel_act(const GL2Elem& b, const KirillovVector& f,
                         const MultChar& omega);

// Requires one argument relative to psi and the other to psi-bar.
cplx pairing_Phi(const KirillovVector& f, const KirillovVector& g);

class SupercuspidalStub {
 public:
  explicit SupercuspidalStub(const RepSpec& spec);

  const RepSpec& spec() const { return spec_; }
  int conductor() const { return spec_.conductor(); }
  const MultChar& omega() const { return spec_.central_character(); }
  KirillovVector new_vector(AddChar side) const;
  // k v = omega(d) v for k in I_n with lower-right entry d.
  cplx eigenvalue(const Mat2& k) const;
  // Any other G-translate is not modeled.
  [[noreturn]] void translate(const GL2Elem& g) const;

 private:
  RepSpec spec_;
};

struct EqualConductorResult {
  cplx computed;      // sum over level-n3 cosets of K
  cplx closed_form;   // alpha1^(n3 - n1) vol(I_n3)
  int n1 = 0;
  int n3 = 0;
  i64 cosets = 0;
  double volume = 0.0;
};

// l(gamma^(n3 - n1) v1 (x) v2 (x) v3) for V1 = Ind(mu1, mu1') with mu1
// unramified and mu1' ramified, V2 and V3 stubs of equal conductor n3 > n1
// and omega1 omega2 omega3 = 1. The K-integral of v1(k) Phi(k v2, k v3) is
// evaluated on level-n3 cosets using only the stub eigenproperty on I_n3;
// outside I_n3 the translate of v1 must vanish (checked).
EqualConductorResult ell_equal_conductor(const RepSpec& v1, const RepSpec& v2,
                                         const RepSpec& v3, int cap = 10,
                                         i64 budget = kDefaultBudget);

}  // namespace tvec
