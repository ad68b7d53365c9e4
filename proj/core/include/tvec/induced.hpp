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

// Vectors in Ind_B^G(chi) (normalized induction, right translation action).
//
// A vector of level s is right-invariant under Kprin_s, so by left
// B-equivariance it is determined by its values on representatives of
// B(Z/p^s) \ GL2(Z/p^s) = P^1(Z/p^s):
//   A[x] = f((0, -1; 1, x))   for x mod p^s,
//   B[y] = f((1, 0; y, 1))    for y in pZ / p^sZ.
// Any level s >= max(1, cond mu, cond mu') admits arbitrary tables.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tvec/characters.hpp"
#include "tvec/gl2.hpp"
#include "tvec/rep_spec.hpp"

namespace tvec {

enum class ModelTag { kPrincipal, kSpecialQuotient, kSpecialSubspace };

ModelTag model_tag(const RepSpec& spec);

// f(M) = coef * values[index].
struct Slot {
  cplx coef;
  i64 index;
};

class InducedVector {
 public:
  // The zero vector.
  InducedVector(const BorelChar& chi, ModelTag tag, int level, int cap);

  int p() const { return chi_.p(); }
  int level() const { return level_; }
  int cap() const { return cap_; }
  const BorelChar& chi() const { return chi_; }
  ModelTag tag() const { return tag_; }

  i64 slot_count() const { return static_cast<i64>(values_.size()); }
  i64 a_count() const { return q_; }
  const std::vector<cplx>& values() const { return values_; }
  std::vector<cplx>& values() { return values_; }
  // Representative matrix of a slot.
  Mat2 slot_matrix(i64 index) const;
  std::string slot_label(i64 index) const;
  cplx& a_value(i64 x) { return values_[mod(x, q_)]; }
  // y must be divisible by p.
  cplx& b_value(i64 y) { return values_[q_ + mod(y, q_) / p()]; }

  // Integer matrix with nonzero determinant.
  Slot locate(const Mat2& m) const;
  cplx eval(const Mat2& m) const;
  // f(p^-e m).
  cplx eval(const Mat2& m, int e) const;
  cplx evaluate(const GL2Elem& g) const;

  // Same function, tables refined to level t >= level.
  InducedVector at_level(int t) const;

  // Right translation by p^-e m. The level becomes
  // s - 2 minval(m) + val(det m); DomainError if that exceeds the cap.
  InducedVector act(const Mat2& m, int e = 0) const;
  InducedVector act(const GL2Elem& g) const;
  InducedVector gamma_translate(int r) const;

  InducedVector operator+(const InducedVector& o) const;
  InducedVector operator-(const InducedVector& o) const;
  InducedVector operator*(cplx s) const;

  bool approx_equal(const InducedVector& o, double tol = 1e-9) const;

 private:
  void check_compatible(const InducedVector& o) const;

  BorelChar chi_;
  ModelTag tag_;
  int level_;
  int cap_;
  i64 q_;  // p^level
  std::vector<cplx> values_;
  double sqrt_p_;
};

inline InducedVector operator*(cplx s, const InducedVector& v) { return v * s; }

// L^2(K) inner product with vol K = 1.
cplx inner_product(const InducedVector& f, const InducedVector& g);

// Vectors of the reducible models. For the quotient model they are
// functions in Ind((eta o det) delta^-1/2), for the subspace model in
// Ind((eta o det) delta^1/2). v^I, v^(K\I) and v^K need eta unramified.
InducedVector v_iwahori(const RepSpec& spec, int cap);
InducedVector v_k_minus_i(const RepSpec& spec, int cap);
InducedVector v_spherical(const RepSpec& spec, int cap);
InducedVector eta_det_vector(const RepSpec& spec, int level, int cap);

// Normalized new vector: v(1) = 1 when unramified, v((1, 0; p^m, 1)) = 1
// with m = cond mu' otherwise. special_quotient gives the canonical class of
// proj(v^I); special_subspace gives gamma v^K - eta(p)^-1 v^K. Both special
// kinds need eta unramified (UnsupportedError otherwise).
InducedVector new_vector(const RepSpec& spec, int cap);

// Quotient model: the representative of f mod C (eta o det) vanishing at
// the identity.
InducedVector quotient_class(const InducedVector& f);
// Subspace model: proj*(f) = int_K f(k) eta^-1(det k) dk, so proj*(v^K) = 1.
cplx proj_star(const InducedVector& f);

InducedVector atkin_lehner(const InducedVector& f, int n);

enum class LemmaCase {
  kUnramified,   // mu, mu' unramified
  kMuUnram,      // mu unramified, mu' ramified
  kMuPrimeUnram, // mu ramified, mu' unramified
  kBothRamified,
  kQuotientIwahori,  // gamma^r v^I in the quotient model
  kSubspaceSpherical // gamma^r v^K in the subspace model
};

enum class GammaVariant {
  kPlain,           // gamma^r v
  kMinusAlpha,      // gamma^r v - alpha gamma^(r-1) v
  kMinusBeta,       // gamma^r v - beta gamma^(r-1) v
  kMinusAlphaInvNext  // gamma^r v - alpha^-1 gamma^(r+1) v
};

const char* to_string(LemmaCase c);
const char* to_string(GammaVariant v);

LemmaCase lemma_case(const RepSpec& spec);
bool variant_supported(LemmaCase c, GammaVariant v);
// The vector the translate formulas describe: the new vector for principal
// series, v^I for the quotient model, v^K for the subspace model.
InducedVector lemma_vector(const RepSpec& spec, int cap);
// The vector on the left of the closed form.
InducedVector gamma_vector(const RepSpec& spec, int r, GammaVariant v, int cap);

// Closed-form value at k in K. k is given by residues modulo p^level, which
// must be at least the level of gamma_vector(spec, r, v).
cplx closed_form_gamma(const RepSpec& spec, int r, const Mat2& k, int level,
                       GammaVariant v = GammaVariant::kPlain);
cplx closed_form_gamma(const RepSpec& spec, int r, const GL2Elem& k,
                       GammaVariant v = GammaVariant::kPlain);

struct LemmaSweep {
  int level = 0;
  i64 checked = 0;
  bool exhaustive = false;
  double max_error = 0.0;
  bool ok() const { return max_error <= 1e-9; }
};

// Compares gamma_vector against closed_form_gamma on every coset of
// K / Kprin_L (or one per (c, d, det) class when that is over budget).
LemmaSweep lemma_sweep(const RepSpec& spec, int r, GammaVariant v, int cap,
                       i64 budget = kDefaultBudget);

enum class EigenCharSide { kD, kA };

// dim V^(I_s, omega): vectors with k v = omega(d) v (or omega(a) v) for all
// k in I_s. Needs cond omega <= s (omega unramified when s = 0).
int eigenspace_dim(const RepSpec& spec, int s, const MultChar& omega,
                   EigenCharSide side = EigenCharSide::kD, int cap = 12,
                   double tol = 1e-8);

// {gamma^i v : 0 <= i <= s - n} at level s.
std::vector<InducedVector> casselman_basis(const RepSpec& spec, int s, int cap);

// Coefficients x minimizing || f - sum x_i basis_i || in L^2(K).
std::vector<cplx> projection_coefficients(const InducedVector& f,
                                          const std::vector<InducedVector>& basis);
// Linear independence of a family, by rank of the Gram matrix.
int family_rank(const std::vector<InducedVector>& family, double tol = 1e-8);

}  // namespace tvec
