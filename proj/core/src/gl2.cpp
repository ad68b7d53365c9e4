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

#include "tvec/gl2.hpp"

#include <sstream>

namespace tvec {

namespace {

i64 checked_mul_add(i64 x, i64 y, i64 z, i64 w) {
  i64 s, t, r;
  if (__builtin_mul_overflow(x, y, &s) || __builtin_mul_overflow(z, w, &t) ||
      __builtin_add_overflow(s, t, &r)) {
    throw DomainError("Mat2 product overflows 64 bits");
  }
  return r;
}

// val(x) >= n, or PrecisionError if x is a zero not known to p^n.
bool val_at_least(const LocalFieldElem& x, int n) {
  if (!x.is_zero()) return x.val() >= n;
  if (x.abs_precision() >= n) return true;
  throw PrecisionError("valuation comparison beyond the known precision");
}

bool certainly_unit(const LocalFieldElem& x) {
  if (!x.is_zero()) return x.val() == 0;
  if (x.abs_precision() >= 1) return false;
  throw PrecisionError("cannot decide whether an entry is a unit");
}

bool congruent_to(const LocalFieldElem& x, i64 target, int n) {
  return val_at_least(x - LocalFieldElem::from_int(target, x.p(), x.cap()), n);
}

LocalFieldElem from_residue(int p, int N, i64 x, int level) {
  if (mod(x, ipow(p, level)) == 0) return LocalFieldElem::zero_to(p, N, level);
  const int v = val_p(x, p);
  return LocalFieldElem::from_parts(p, N, v, unit_part(x, p),
                                    std::min(level - v, N));
}

i64 entry_to_int(const LocalFieldElem& x, int shift) {
  if (x.is_zero()) return 0;
  return ipow(x.p(), x.val() + shift) * x.unit();
}

}  // namespace

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {checked_mul_add(x.a, y.a, x.b, y.c), checked_mul_add(x.a, y.b, x.b, y.d),
          checked_mul_add(x.c, y.a, x.d, y.c), checked_mul_add(x.c, y.b, x.d, y.d)};
}

Mat2 reduce(const Mat2& x, i64 m) {
  return {mod(x.a, m), mod(x.b, m), mod(x.c, m), mod(x.d, m)};
}

GL2Elem::GL2Elem(LocalFieldElem a, LocalFieldElem b, LocalFieldElem c,
                 LocalFieldElem d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)),
      det_(a_ * d_ - b_ * c_) {
  if (det_.is_zero()) {
    throw DomainError("GL2Elem: determinant is zero at the available precision");
  }
}

GL2Elem GL2Elem::from_ints(int p, int N, i64 a, i64 b, i64 c, i64 d) {
  return GL2Elem(LocalFieldElem::from_int(a, p, N), LocalFieldElem::from_int(b, p, N),
                 LocalFieldElem::from_int(c, p, N), LocalFieldElem::from_int(d, p, N));
}

GL2Elem GL2Elem::from_mat2(int p, int N, const Mat2& m, int e) {
  const LocalFieldElem s = LocalFieldElem::monomial(p, N, -e);
  const GL2Elem g = from_ints(p, N, m.a, m.b, m.c, m.d);
  if (e == 0) return g;
  return GL2Elem(g.a_ * s, g.b_ * s, g.c_ * s, g.d_ * s);
}

GL2Elem GL2Elem::from_residues(int p, int N, const Mat2& m, int level) {
  return GL2Elem(from_residue(p, N, m.a, level), from_residue(p, N, m.b, level),
                 from_residue(p, N, m.c, level), from_residue(p, N, m.d, level));
}

GL2Elem GL2Elem::gamma(int p, int N, int r) {
  return GL2Elem(LocalFieldElem::monomial(p, N, -r), LocalFieldElem(p, N),
                 LocalFieldElem(p, N), LocalFieldElem::monomial(p, N, 0));
}

GL2Elem GL2Elem::atkin_lehner(int p, int N, int n) {
  return GL2Elem(LocalFieldElem(p, N), LocalFieldElem::monomial(p, N, 0),
                 LocalFieldElem::monomial(p, N, n), LocalFieldElem(p, N));
}

GL2Elem GL2Elem::operator*(const GL2Elem& o) const {
  return GL2Elem(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                 c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

GL2Elem GL2Elem::inverse() const {
  const LocalFieldElem di = tvec::inverse(det_);
  return GL2Elem(d_ * di, -b_ * di, -c_ * di, a_ * di);
}

int GL2Elem::min_val() const {
  int v = kInfVal;
  for (const auto* x : {&a_, &b_, &c_, &d_}) {
    if (!x->is_zero()) v = std::min(v, x->val());
  }
  return v;
}

std::pair<int, Mat2> GL2Elem::to_scaled() const {
  const int e = -min_val();
  return {e, Mat2{entry_to_int(a_, e), entry_to_int(b_, e), entry_to_int(c_, e),
                  entry_to_int(d_, e)}};
}

std::string GL2Elem::to_string() const {
  std::ostringstream os;
  os << "[" << a_.to_string() << ", " << b_.to_string() << "; "
     << c_.to_string() << ", " << d_.to_string() << "]";
  return os.str();
}

bool same_value(const GL2Elem& x, const GL2Elem& y) {
  return same_value(x.a(), y.a()) && same_value(x.b(), y.b()) &&
         same_value(x.c(), y.c()) && same_value(x.d(), y.d());
}

bool is_upper_triangular(const GL2Elem& g) {
  return g.c().is_zero();
}

bool in_K(const GL2Elem& g) {
  return val_at_least(g.a(), 0) && val_at_least(g.b(), 0) &&
         val_at_least(g.c(), 0) && val_at_least(g.d(), 0) &&
         certainly_unit(g.det());
}

std::pair<GL2Elem, GL2Elem> iwasawa(const GL2Elem& g) {
  const int p = g.p();
  const int N = g.cap();
  if (in_K(g)) return {GL2Elem::identity(p, N), g};
  const LocalFieldElem& c = g.c();
  const LocalFieldElem& d = g.d();
  if (c.is_zero() && d.is_zero()) {
    throw PrecisionError("iwasawa: bottom row vanishes at the known precision");
  }
  int v;
  if (c.is_zero()) {
    if (c.abs_precision() <= d.val()) {
      throw PrecisionError("iwasawa: cannot decide the pivot column");
    }
    v = d.val();
  } else if (d.is_zero()) {
    if (d.abs_precision() <= c.val()) {
      throw PrecisionError("iwasawa: cannot decide the pivot column");
    }
    v = c.val();
  } else {
    v = std::min(c.val(), d.val());
  }
  const LocalFieldElem s = LocalFieldElem::monomial(p, N, -v);
  const LocalFieldElem c1 = c * s;
  const LocalFieldElem d1 = d * s;
  const LocalFieldElem one = LocalFieldElem::monomial(p, N, 0);
  const LocalFieldElem zero(p, N);
  const GL2Elem k = (!c1.is_zero() && c1.val() == 0) ? GL2Elem(zero, one, c1, d1)
                                                      : GL2Elem(one, zero, c1, d1);
  return {g * k.inverse(), k};
}

int shell_depth(const GL2Elem& k) {
  if (!in_K(k)) throw DomainError("shell_depth: element not in K");
  return std::min(k.c().val_lower_bound(), k.cap());
}

const char* to_string(SubgroupTag tag) {
  switch (tag) {
    case SubgroupTag::kK:
      return "K";
    case SubgroupTag::kIwahori:
      return "I";
    case SubgroupTag::kPrincipal:
      return "Kprin";
    case SubgroupTag::kJ:
      return "J";
    case SubgroupTag::kI1:
      return "I1";
  }
  return "?";
}

bool is_member(const GL2Elem& g, const SubgroupSpec& s) {
  if (s.n < 0) throw DomainError("is_member: negative level");
  if (!in_K(g)) return false;
  switch (s.tag) {
    case SubgroupTag::kK:
      return true;
    case SubgroupTag::kIwahori:
      return val_at_least(g.c(), s.n);
    case SubgroupTag::kPrincipal:
      return congruent_to(g.a(), 1, s.n) && val_at_least(g.b(), s.n) &&
             val_at_least(g.c(), s.n) && congruent_to(g.d(), 1, s.n);
    case SubgroupTag::kJ:
      return congruent_to(g.a(), 1, g.cap()) && congruent_to(g.d(), 1, g.cap()) &&
             val_at_least(g.c(), s.n);
    case SubgroupTag::kI1:
      return val_at_least(g.c(), s.n) && congruent_to(g.a(), 1, s.n) &&
             congruent_to(g.d(), 1, s.n);
  }
  return false;
}

bool mat_in_iwahori(const Mat2& k, int p, int n) {
  return mod(k.c, ipow(p, n)) == 0;
}

bool mat_in_principal(const Mat2& k, int p, int n) {
  const i64 q = ipow(p, n);
  return mod(k.a - 1, q) == 0 && mod(k.b, q) == 0 && mod(k.c, q) == 0 &&
         mod(k.d - 1, q) == 0;
}

i64 gl2_order(int p, int n) {
  if (n == 0) return 1;
  const i64 pp = static_cast<i64>(p) * p;
  return ipow(p, 4 * (n - 1)) * (pp - 1) * (pp - p);
}

double iwahori_volume(int p, int n) {
  if (n == 0) return 1.0;
  return 1.0 / ((p + 1) * static_cast<double>(ipow(p, n - 1)));
}

i64 class_count(int p, int n) {
  if (n == 0) return 1;
  const i64 q = ipow(p, n);
  const i64 r = q / p;
  return (q * q - r * r) * (q - r);
}

namespace {

// Visits (c, d, det, lift) for primitive (c, d), unit det and lifts in
// [0, lifts).
void visit(int p, int n, i64 lifts, const std::function<void(const Mat2&)>& fn) {
  const i64 q = ipow(p, n);
  for (i64 c = 0; c < q; ++c) {
    for (i64 d = 0; d < q; ++d) {
      const bool d_unit = d % p != 0;
      if (!d_unit && c % p == 0) continue;
      const i64 inv = d_unit ? inv_mod(d, q) : inv_mod(c, q);
      for (i64 det = 1; det < q; ++det) {
        if (det % p == 0) continue;
        for (i64 t = 0; t < lifts; ++t) {
          Mat2 k;
          k.c = c;
          k.d = d;
          if (d_unit) {
            k.b = t;
            k.a = mulmod(mod(static_cast<i128>(det) + static_cast<i128>(t) * c, q), inv, q);
          } else {
            k.a = t;
            k.b = mulmod(mod(static_cast<i128>(t) * d - det, q), inv, q);
          }
          fn(k);
        }
      }
    }
  }
}

}  // namespace

void for_each_coset(int p, int n, i64 budget,
                    const std::function<void(const Mat2&)>& fn) {
  if (n < 1) throw DomainError("for_each_coset: level must be >= 1");
  if (gl2_order(p, n) > budget) {
    throw BudgetError("coset enumeration exceeds the budget");
  }
  visit(p, n, ipow(p, n), fn);
}

std::vector<Mat2> enumerate_cosets(int p, int n, i64 budget) {
  std::vector<Mat2> out;
  if (n < 1) throw DomainError("enumerate_cosets: level must be >= 1");
  if (gl2_order(p, n) > budget) {
    throw BudgetError("coset enumeration exceeds the budget");
  }
  out.reserve(static_cast<size_t>(gl2_order(p, n)));
  for_each_coset(p, n, budget, [&](const Mat2& k) { out.push_back(k); });
  return out;
}

void for_each_class(int p, int n, i64 budget,
                    const std::function<void(const Mat2&)>& fn) {
  if (n < 1) throw DomainError("for_each_class: level must be >= 1");
  if (class_count(p, n) > budget) {
    throw BudgetError("class enumeration exceeds the budget");
  }
  visit(p, n, 1, fn);
}

GL2Elem conjugate_by_gamma(const GL2Elem& k, int r) {
  const int p = k.p();
  const int N = k.cap();
  return GL2Elem::gamma(p, N, -r) * k * GL2Elem::gamma(p, N, r);
}

SupportCheck support_identity_check(int p, int r, int s, i64 budget) {
  if (s < 1 || r < 0) throw DomainError("support_identity_check: need s >= 1, r >= 0");
  const int level = r + s + 1;
  const int N = level + r + 2;
  SupportCheck res;
  auto check = [&](const Mat2& k) {
    ++res.checked;
    const GL2Elem g = conjugate_by_gamma(GL2Elem::from_residues(p, N, k, level), r);
    const GL2Elem kk = iwasawa(g).second;
    const bool lhs = val_at_least(kk.c(), s);
    const bool rhs = mat_in_iwahori(k, p, r + s);
    if (lhs != rhs && res.ok) {
      res.ok = false;
      std::ostringstream os;
      os << "k = [" << k.a << ", " << k.b << "; " << k.c << ", " << k.d << "]";
      res.first_failure = os.str();
    }
  };
  if (gl2_order(p, level) <= budget) {
    res.exhaustive = true;
    for_each_coset(p, level, budget, check);
  } else {
    for_each_class(p, level, budget, check);
  }
  return res;
}

std::array<GL2Elem, 3> factor_deep(const GL2Elem& k, int r) {
  const int p = k.p();
  const int N = k.cap();
  if (k.c().is_zero() || k.c().val() < r) {
    throw DomainError("factor_deep: need a nonzero c of valuation >= r");
  }
  const int m = k.c().val() - r;
  const LocalFieldElem zero(p, N);
  const LocalFieldElem one = LocalFieldElem::monomial(p, N, 0);
  const LocalFieldElem pm = LocalFieldElem::monomial(p, N, -m);
  const LocalFieldElem pmr = LocalFieldElem::monomial(p, N, -m - r);
  return {GL2Elem(k.det(), pm * k.c() * k.b(), zero, pmr * k.c() * k.d()),
          GL2Elem(one, zero, LocalFieldElem::monomial(p, N, m), one),
          GL2Elem(inverse(k.d()), zero, zero, inverse(pmr * k.c()))};
}

std::array<GL2Elem, 3> factor_shallow(const GL2Elem& k, int r) {
  const int p = k.p();
  const int N = k.cap();
  if (k.c().is_zero() || k.c().val() > r) {
    throw DomainError("factor_shallow: need a nonzero c of valuation <= r");
  }
  const LocalFieldElem zero(p, N);
  const LocalFieldElem one = LocalFieldElem::monomial(p, N, 0);
  const LocalFieldElem c1 = LocalFieldElem::monomial(p, N, -r) * k.c();
  const LocalFieldElem q = k.det() / c1;
  return {GL2Elem(-q, k.a() + q, zero, c1), GL2Elem(one, zero, one, one),
          GL2Elem(one, one + k.d() / c1, zero, -one)};
}

}  // namespace tvec
