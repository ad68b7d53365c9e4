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

// Truncated elements of Q_p: x = p^val * unit, with the unit known modulo
// p^precision (relative precision). The cap N is the largest relative
// precision any element of a context carries.

#pragma once

#include <complex>
#include <string>

#include "tvec/zp.hpp"

namespace tvec {

struct FieldContext {
  int p = 2;
  int N = 6;      // precision cap (relative digits)
  int floor = 1;  // smallest relative precision an add may produce
};

class LocalFieldElem {
 public:
  // The exact zero element of Q_p at cap N.
  LocalFieldElem(int p, int N);

  static LocalFieldElem zero(int p, int N) { return LocalFieldElem(p, N); }
  // Zero known only modulo p^abs_prec (the result of a cancellation).
  static LocalFieldElem zero_to(int p, int N, int abs_prec);
  // Exact integer n at full precision N.
  static LocalFieldElem from_int(i64 n, int p, int N);
  // p^val * unit with the given relative precision (<= N). unit is reduced
  // modulo p^prec and must be coprime to p.
  static LocalFieldElem from_parts(int p, int N, int val, i64 unit, int prec);
  // p^val * unit at full precision.
  static LocalFieldElem monomial(int p, int N, int val, i64 unit = 1) {
    return from_parts(p, N, val, unit, N);
  }

  int p() const { return p_; }
  int cap() const { return N_; }
  int val() const { return val_; }
  i64 unit() const { return unit_; }
  // Relative precision; 0 for zero elements.
  int precision() const { return is_zero() ? 0 : prec_; }
  bool is_zero() const { return val_ == kInfVal; }
  // Absolute precision val + prec. For zero it is the power of p the element
  // is known to be divisible by (kInfVal for an exact zero).
  int abs_precision() const { return is_zero() ? prec_ : val_ + prec_; }
  // Lower bound for the valuation that is certain at this precision.
  int val_lower_bound() const { return is_zero() ? prec_ : val_; }
  // True if the element lies in O = Z_p.
  bool is_integral() const { return val_ >= 0; }
  bool is_unit() const { return val_ == 0; }

  // Residue of an integral element modulo p^k (requires abs precision >= k).
  i64 residue(int k) const;

  std::string to_string() const;

  friend bool operator==(const LocalFieldElem& a, const LocalFieldElem& b);

 private:
  int p_;
  int N_;
  int val_ = kInfVal;
  i64 unit_ = 0;
  int prec_ = kInfVal;
};

enum class ArithKind { kAdd, kMul, kInv, kNeg };

// Exact result at the context precision. For kInv and kNeg, y is ignored.
// Throws DomainError on inverting zero, PrecisionError if an addition leaves
// fewer than floor relative digits.
LocalFieldElem arith(const LocalFieldElem& x, const LocalFieldElem& y,
                     ArithKind kind, int floor = 1);

LocalFieldElem operator+(const LocalFieldElem& x, const LocalFieldElem& y);
LocalFieldElem operator-(const LocalFieldElem& x, const LocalFieldElem& y);
LocalFieldElem operator-(const LocalFieldElem& x);
LocalFieldElem operator*(const LocalFieldElem& x, const LocalFieldElem& y);
LocalFieldElem inverse(const LocalFieldElem& x);
LocalFieldElem operator/(const LocalFieldElem& x, const LocalFieldElem& y);

// True if x - y vanishes at the precision both operands carry.
bool same_value(const LocalFieldElem& x, const LocalFieldElem& y);

// |x| = p^(-val x), 0 for zero.
double abs_norm(const LocalFieldElem& x);

// psi(x) = exp(2 pi i {x}_p). Trivial exactly on O. Throws PrecisionError
// when the fractional part is not determined (val < -N or too few digits).
std::complex<double> additive_char(const LocalFieldElem& x);

}  // namespace tvec
