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

#include "tvec/local_field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace tvec {

LocalFieldElem::LocalFieldElem(int p, int N) : p_(p), N_(N) {
  if (!is_prime(p)) throw DomainError("LocalFieldElem: p must be prime");
  if (N < 1) throw DomainError("LocalFieldElem: precision cap must be >= 1");
  ipow(p, N);  // overflow check
}

LocalFieldElem LocalFieldElem::from_parts(int p, int N, int val, i64 unit,
                                          int prec) {
  LocalFieldElem r(p, N);
  if (prec < 1 || prec > N) {
    throw DomainError("LocalFieldElem: relative precision out of range");
  }
  i64 m = ipow(p, prec);
  unit = mod(unit, m);
  if (unit % p == 0) throw DomainError("LocalFieldElem: unit divisible by p");
  r.val_ = val;
  r.unit_ = unit;
  r.prec_ = prec;
  return r;
}

LocalFieldElem LocalFieldElem::zero_to(int p, int N, int abs_prec) {
  LocalFieldElem r(p, N);
  r.prec_ = abs_prec;
  return r;
}

LocalFieldElem LocalFieldElem::from_int(i64 n, int p, int N) {
  if (n == 0) return LocalFieldElem(p, N);
  int v = val_p(n, p);
  return from_parts(p, N, v, unit_part(n, p), N);
}

i64 LocalFieldElem::residue(int k) const {
  i64 m = ipow(p_, k);
  if (is_zero()) {
    if (prec_ < k) {
      throw PrecisionError("residue: zero known only to lower precision");
    }
    return 0;
  }
  if (val_ < 0) throw DomainError("residue: element is not integral");
  if (val_ >= k) return 0;
  if (abs_precision() < k) {
    throw PrecisionError("residue: not enough precision for the requested level");
  }
  return mulmod(unit_, ipow(p_, val_), m);
}

std::string LocalFieldElem::to_string() const {
  if (is_zero()) {
    if (prec_ == kInfVal) return "0";
    return "O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
  }
  std::ostringstream os;
  os << p_ << "^" << val_ << "*" << unit_ << " (mod " << p_ << "^" << prec_
     << ")";
  return os.str();
}

bool operator==(const LocalFieldElem& a, const LocalFieldElem& b) {
  return a.p_ == b.p_ && a.val_ == b.val_ && a.unit_ == b.unit_ &&
         a.prec_ == b.prec_;
}

bool same_value(const LocalFieldElem& x, const LocalFieldElem& y) {
  const LocalFieldElem d = arith(x, -y, ArithKind::kAdd, 0);
  return d.is_zero();
}

namespace {

void check_same_field(const LocalFieldElem& x, const LocalFieldElem& y) {
  if (x.p() != y.p()) throw DomainError("arith: elements of different fields");
}

LocalFieldElem add(const LocalFieldElem& x, const LocalFieldElem& y,
                   int floor) {
  const int cap = std::max(x.cap(), y.cap());
  if (x.is_zero() && y.is_zero()) {
    return LocalFieldElem::zero_to(x.p(), cap,
                                   std::min(x.abs_precision(),
                                            y.abs_precision()));
  }
  if (x.is_zero() || y.is_zero()) {
    const LocalFieldElem& z = x.is_zero() ? x : y;
    const LocalFieldElem& w = x.is_zero() ? y : x;
    if (z.abs_precision() >= w.abs_precision()) return w;
    // The unknown digits of z swamp part of w.
    const int prec = z.abs_precision() - w.val();
    if (prec <= 0) return LocalFieldElem::zero_to(w.p(), cap, z.abs_precision());
    if (prec < floor) {
      throw PrecisionError("arith: addition lost precision below the floor");
    }
    return LocalFieldElem::from_parts(w.p(), cap, w.val(), w.unit(), prec);
  }
  const LocalFieldElem& a = x.val() <= y.val() ? x : y;
  const LocalFieldElem& b = x.val() <= y.val() ? y : x;
  const int p = a.p();
  const int A = std::min(a.abs_precision(), b.abs_precision());
  const int rel = A - a.val();  // digits available at base val(a)
  const i64 m = ipow(p, rel);
  i64 s = mod(a.unit(), m);
  const int shift = b.val() - a.val();
  if (shift < rel) {
    s = mod(s + mulmod(b.unit(), ipow(p, shift), m), m);
  }
  if (s == 0) return LocalFieldElem::zero_to(p, cap, A);  // full cancellation
  const int k = val_p(s, p);
  const int prec = rel - k;
  if (prec < floor) {
    throw PrecisionError("arith: addition lost precision below the floor");
  }
  return LocalFieldElem::from_parts(p, cap, a.val() + k, s / ipow(p, k),
                                    std::min(prec, cap));
}

}  // namespace

LocalFieldElem arith(const LocalFieldElem& x, const LocalFieldElem& y,
                     ArithKind kind, int floor) {
  switch (kind) {
    case ArithKind::kAdd:
      check_same_field(x, y);
      return add(x, y, floor);
    case ArithKind::kNeg: {
      if (x.is_zero()) return x;
      const i64 m = ipow(x.p(), x.precision());
      return LocalFieldElem::from_parts(x.p(), x.cap(), x.val(),
                                        m - x.unit(), x.precision());
    }
    case ArithKind::kMul: {
      check_same_field(x, y);
      const int cap = std::max(x.cap(), y.cap());
      if (x.is_zero() || y.is_zero()) {
        // Known divisibility of the product.
        const i64 ax = x.val_lower_bound(), ay = y.val_lower_bound();
        const i64 sum = ax + ay;
        const int bound = (ax >= kInfVal || ay >= kInfVal || sum >= kInfVal)
                              ? kInfVal
                              : static_cast<int>(sum);
        return LocalFieldElem::zero_to(x.p(), cap, bound);
      }
      const int prec = std::min(x.precision(), y.precision());
      const i64 m = ipow(x.p(), prec);
      return LocalFieldElem::from_parts(x.p(), cap, x.val() + y.val(),
                                        mulmod(x.unit(), y.unit(), m), prec);
    }
    case ArithKind::kInv: {
      if (x.is_zero()) throw DomainError("arith: inversion of zero");
      const i64 m = ipow(x.p(), x.precision());
      return LocalFieldElem::from_parts(x.p(), x.cap(), -x.val(),
                                        inv_mod(x.unit(), m), x.precision());
    }
  }
  throw DomainError("arith: unknown kind");
}

LocalFieldElem operator+(const LocalFieldElem& x, const LocalFieldElem& y) {
  return arith(x, y, ArithKind::kAdd);
}
LocalFieldElem operator-(const LocalFieldElem& x) {
  return arith(x, x, ArithKind::kNeg);
}
LocalFieldElem operator-(const LocalFieldElem& x, const LocalFieldElem& y) {
  return x + (-y);
}
LocalFieldElem operator*(const LocalFieldElem& x, const LocalFieldElem& y) {
  return arith(x, y, ArithKind::kMul);
}
LocalFieldElem inverse(const LocalFieldElem& x) {
  return arith(x, x, ArithKind::kInv);
}
LocalFieldElem operator/(const LocalFieldElem& x, const LocalFieldElem& y) {
  return x * inverse(y);
}

double abs_norm(const LocalFieldElem& x) {
  if (x.is_zero()) return 0.0;
  return std::pow(static_cast<double>(x.p()), -x.val());
}

std::complex<double> additive_char(const LocalFieldElem& x) {
  if (x.is_zero()) {
    if (x.abs_precision() < 0) {
      throw PrecisionError("additive_char: fractional part not determined");
    }
    return {1.0, 0.0};
  }
  if (x.val() >= 0) return {1.0, 0.0};
  const int depth = -x.val();
  if (depth > x.cap()) {
    throw PrecisionError("additive_char: valuation below -N");
  }
  if (x.precision() < depth) {
    throw PrecisionError("additive_char: fractional part not determined");
  }
  const i64 m = ipow(x.p(), depth);
  const double frac =
      static_cast<double>(mod(x.unit(), m)) / static_cast<double>(m);
  const double t = 2.0 * std::numbers::pi * frac;
  return {std::cos(t), std::sin(t)};
}

}  // namespace tvec
