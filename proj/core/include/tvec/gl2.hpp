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

// GL2(Q_p): matrices over truncated field elements, the Iwasawa
// decomposition G = BK, congruence subgroups of K, and enumeration of
// K / Kprin_n.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tvec/local_field.hpp"

namespace tvec {

// Integer 2x2 matrix. Used for coset representatives and for the fast
// evaluation path; a group element p^-e M is carried as (e, M).
struct Mat2 {
  i64 a = 1, b = 0, c = 0, d = 1;

  i128 det() const { return static_cast<i128>(a) * d - static_cast<i128>(b) * c; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

// Product; throws DomainError on i64 overflow.
Mat2 operator*(const Mat2& x, const Mat2& y);
// Entrywise reduction into [0, m).
Mat2 reduce(const Mat2& x, i64 m);

class GL2Elem {
 public:
  GL2Elem(LocalFieldElem a, LocalFieldElem b, LocalFieldElem c,
          LocalFieldElem d);

  static GL2Elem from_ints(int p, int N, i64 a, i64 b, i64 c, i64 d);
  // p^-e M with exact integer entries.
  static GL2Elem from_mat2(int p, int N, const Mat2& m, int e = 0);
  // Entries of m known only modulo p^level.
  static GL2Elem from_residues(int p, int N, const Mat2& m, int level);
  static GL2Elem identity(int p, int N) { return from_ints(p, N, 1, 0, 0, 1); }
  // gamma^r with gamma = diag(p^-1, 1); r may be negative.
  static GL2Elem gamma(int p, int N, int r);
  // w~ = (0, 1; 1, 0).
  static GL2Elem weyl(int p, int N) { return from_ints(p, N, 0, 1, 1, 0); }
  // (0, 1; p^n, 0).
  static GL2Elem atkin_lehner(int p, int N, int n);

  int p() const { return a_.p(); }
  int cap() const { return a_.cap(); }
  const LocalFieldElem& a() const { return a_; }
  const LocalFieldElem& b() const { return b_; }
  const LocalFieldElem& c() const { return c_; }
  const LocalFieldElem& d() const { return d_; }
  const LocalFieldElem& det() const { return det_; }

  GL2Elem operator*(const GL2Elem& o) const;
  GL2Elem inverse() const;

  // Smallest entry valuation (certain valuations only).
  int min_val() const;
  // (e, M) with this = p^-e M, M integral with an entry of valuation 0.
  // Unit parts are taken at their stored representatives.
  std::pair<int, Mat2> to_scaled() const;

  std::string to_string() const;

 private:
  LocalFieldElem a_, b_, c_, d_, det_;
};

// Entrywise same_value.
bool same_value(const GL2Elem& x, const GL2Elem& y);
bool is_upper_triangular(const GL2Elem& g);

// g = b k with b upper triangular and k in K. For g in K the result is
// (1, g). Otherwise with v = min(val c, val d) and (c', d') = (c, d) / p^v,
// k = (0, 1; c', d') when c' is a unit and k = (1, 0; c', d') otherwise.
std::pair<GL2Elem, GL2Elem> iwasawa(const GL2Elem& g);

bool in_K(const GL2Elem& g);
// val of the lower-left entry of k in K, capped at the precision cap.
int shell_depth(const GL2Elem& k);

enum class SubgroupTag { kK, kIwahori, kPrincipal, kJ, kI1 };

struct SubgroupSpec {
  SubgroupTag tag = SubgroupTag::kK;
  int n = 0;
};

const char* to_string(SubgroupTag tag);

// I_n = (O^x, O; p^n O, O^x); Kprin_n = ker(K -> GL2(Z/p^n));
// J_n = (1, O; p^n O, 1) as a set; I1_n = {k in I_n : a = d = 1 mod p^n}.
// Throws PrecisionError when an entry is not known well enough to decide.
bool is_member(const GL2Elem& g, const SubgroupSpec& s);

// Integer versions for coset representatives reduced mod p^level (level >=
// n). A zero residue counts as valuation >= level.
bool mat_in_iwahori(const Mat2& k, int p, int n);
bool mat_in_principal(const Mat2& k, int p, int n);

// |GL2(Z/p^n)| = p^(4(n-1)) (p^2-1)(p^2-p); 1 for n = 0.
i64 gl2_order(int p, int n);
// Haar volume of I_n in K (vol K = 1).
double iwahori_volume(int p, int n);

inline constexpr i64 kDefaultBudget = 1'000'000;

// Every element of GL2(Z/p^n), entries in [0, p^n).
std::vector<Mat2> enumerate_cosets(int p, int n, i64 budget = kDefaultBudget);
void for_each_coset(int p, int n, i64 budget,
                    const std::function<void(const Mat2&)>& fn);

// One representative per class (c, d, det) of GL2(Z/p^n); every class has
// exactly p^n elements. Representatives are (det/d, 0; c, d) for a unit d
// and (0, -det/c; c, d) otherwise.
i64 class_count(int p, int n);
void for_each_class(int p, int n, i64 budget,
                    const std::function<void(const Mat2&)>& fn);

struct SupportCheck {
  bool ok = true;
  i64 checked = 0;
  bool exhaustive = false;  // every coset, rather than one per class
  std::string first_failure;
};

// Over coset representatives k of K at level r + s + 1: k lies in
// B gamma^r I_s gamma^-r exactly when k lies in I_(r+s).
SupportCheck support_identity_check(int p, int r, int s,
                                    i64 budget = kDefaultBudget);

// gamma^-r k gamma^r = (a, p^r b; p^-r c, d).
GL2Elem conjugate_by_gamma(const GL2Elem& k, int r);

// For k in I_(r+1) with c = p^(m+r) * unit: the factorization
// (det k, p^-m c b; 0, p^(-m-r) c d) (1, 0; p^m, 1) (d^-1, 0; 0, p^(m+r)/c)
// of gamma^-r k gamma^r.
std::array<GL2Elem, 3> factor_deep(const GL2Elem& k, int r);
// For k in I_s \ I_(s+1), s <= r, with c' = p^-r c: the factorization
// (-det k / c', a + det k / c'; 0, c') (1, 0; 1, 1) (1, 1 + d / c'; 0, -1).
std::array<GL2Elem, 3> factor_shallow(const GL2Elem& k, int r);

}  // namespace tvec
