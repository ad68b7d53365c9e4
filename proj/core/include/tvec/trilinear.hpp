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

// The chain from a torus-equivariant functional on V3 to values of the
// invariant trilinear form l on V1 (x) V2 (x) V3:
//
//   phi   : V3 -> C with phi(t v) = (chi1 chi2')(t)^-1 phi(v),
//   h     : supported on T J_n with h((1, b; c, 1)) = 1,
//   H     : the extension of h to a function on K x K, which is
//           c12 * (v1* (x) v2*) for explicit v1*, v2*,
//   psi(H (x) gamma^i v3) = vol(J_n) phi(gamma^i v3),  0 <= i <= n - n3.
//
// descent_solve turns these chain values into values of l on pure tensors
// gamma^a v1 (x) gamma^b v2 (x) gamma^c v3, using zero certificates from
// eigenspace dimensions of V3 and, when n1 = n2 = 0, the Atkin-Lehner
// relation.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tvec/induced.hpp"
#include "tvec/rep_spec.hpp"

namespace tvec {

enum class FactorKind {
  kUnramified,  // unramified principal series, new vector v^K
  kSpecial,     // eta (x) St with eta unramified, quotient model
  kRamified,    // ramified principal series, minimal model
  kSpherical,   // the full reducible Ind((eta o det) delta^1/2) with v^K
};

const char* to_string(FactorKind k);

// One of the first two factors, in the model the chain needs: mu unramified
// in position 1 and mu' unramified in position 2 (the model is swapped when
// that helps).
struct Factor {
  RepSpec spec;
  FactorKind kind;
  BorelChar chi;
  int n = 0;
  // The lift of the new vector used in this position: the new vector for
  // principal series, v^I (position 1) or v^(K\I) (position 2) for special
  // representations, v^K for kSpherical.
  InducedVector base;
  // v* = sum coef * gamma^a base.
  std::vector<std::pair<int, cplx>> star;
  // (1 - beta/alpha)^-1 for kUnramified and kSpherical, otherwise 1.
  cplx lambda;

  bool unramified_like() const {
    return kind == FactorKind::kUnramified || kind == FactorKind::kSpherical;
  }
};

struct ContextOptions {
  bool spherical1 = false;  // V1 given as special_subspace(eta), use Ind with v^K
  bool spherical2 = false;
  int cap = 10;
};

struct TrilinearContext {
  int p = 2;
  Factor f1, f2;
  RepSpec v3;
  InducedVector v3_vector;  // new vector of V3
  int n3 = 0;
  int n = 0;  // max(n1, n2, n3)
  int cap = 10;
  // lambda1 lambda2 mu2(-1) alpha1^(n1 - n).
  cplx constant;
  // 1 when phi is the s-derivative at s = 0 of the |x|^s-twisted integral
  // (the plain integral vanishes on V3).
  int phi_order = 0;
};

// A special V3 whose phi exponent lies on a convergence boundary in the
// given model is switched to the other model of the same representation.
TrilinearContext make_context(const RepSpec& v1, const RepSpec& v2,
                              const RepSpec& v3, const ContextOptions& opt = {});

// True when phi for these characters needs a geometric series with ratio 1.
bool phi_on_boundary(const BorelChar& chi1, const BorelChar& chi2, const BorelChar& chi3);

// v* as a vector of Ind(chi) for position 1 or 2.
InducedVector star_vector(const TrilinearContext& ctx, int position);

struct PhiValue {
  cplx value;
  double abs_mass = 0.0;  // int |integrand|, tails included
};

// phi(v) = int_F v(w~ n(x)) xi(x) dx with xi = (mu1 mu2' mu3')^-1 |.|^(-1/2).
// Only finitely many shells are not constant; the rest are geometric series
// (analytic continuation past the convergence region; DomainError on the
// boundary).
//
// order = 1 gives d/ds at s = 0 with xi replaced by xi |.|^s. On the
// subspace model of eta (x) St with xi trivial the plain integral is the
// standard intertwining operator, which kills St; the derivative is then
// the equivariant functional.
PhiValue phi(const BorelChar& chi1, const BorelChar& chi2, const InducedVector& v,
             int order = 0);
PhiValue phi(const TrilinearContext& ctx, const InducedVector& v);

// Independent check of phi: the functionals on level-L vectors that satisfy
// the T(O) equivariance and the gamma^(+-1) relations between levels L-1
// and L (and kill eta o det for the quotient model). Returns the dimension
// of that space and, when it is 1, its values on the probes normalized like
// phi on the first nonzero probe.
struct PhiOracle {
  int dimension = 0;
  std::vector<cplx> values;
};
PhiOracle phi_linear_oracle(const BorelChar& chi1, const BorelChar& chi2,
                            const RepSpec& v3, int level,
                            const std::vector<InducedVector>& probes, int cap = 10);

struct HCheck {
  int n = 0;
  i64 pairs = 0;
  bool exhaustive = false;  // all coset pairs
  bool sampled = false;     // second factor strided over classes
  i64 support = 0;               // pairs where H != 0
  double max_err_closed = 0.0;   // against omega1(d1) omega2(-det k2 / c2)
  double max_err_tensor = 0.0;   // against constant * v1*(k1) v2*(k2)
  bool ok() const { return max_err_closed <= 1e-9 && max_err_tensor <= 1e-9; }
};

// H from its defining property (k0 searched in J_n mod p^n for each pair)
// compared with the closed form and with constant * (v1* (x) v2*), over all
// pairs of level-n cosets, or one per (c, d, det) class when over budget
// (with the second class strided when even that is over budget).
HCheck verify_lambda12(const TrilinearContext& ctx, i64 budget = 4'000'000);

// vol(J_n) phi(gamma^i v3) for 0 <= i <= n - n3.
PhiValue psi_on_H(const TrilinearContext& ctx, int i);

// gamma^a v1 (x) gamma^b v2 (x) k gamma^c v3 with v1, v2 the lifts in
// Factor::base and k an integer matrix (identity by default).
struct Tensor {
  int a = 0, b = 0, c = 0;
  Mat2 k{};
  std::string to_string() const;
};

// The three vectors of a tensor as elements of the induced models.
std::array<InducedVector, 3> tensor_vectors(const TrilinearContext& ctx, const Tensor& t);

struct EllValue {
  Tensor tensor;
  cplx value;
  bool determined = false;
  bool certified_zero = false;
  std::string certificate;
};

struct DescentResult {
  std::vector<EllValue> values;
  std::vector<cplx> chain;  // psi(v1* (x) v2* (x) gamma^i v3)
  double scale = 0.0;       // natural magnitude of the chain values
  int unknowns = 0;
  int equations = 0;
  int rank = 0;
  double residual = 0.0;
  bool atkin_lehner_used = false;
};

// DomainError when n = 0 (no chain).
DescentResult descent_solve(const TrilinearContext& ctx,
                            const std::vector<Tensor>& targets);

struct HypothesisCheck {
  bool induced_hom_vanishes = true;  // Hom(Ind(chi1 chi2 delta^1/2), V3~) = 0
  bool twist_hom_vanishes = true;    // Hom(V_i (x) eta_j, V3~) = 0 for special V_j
  std::string detail;
  bool ok() const { return induced_hom_vanishes && twist_hom_vanishes; }
};
HypothesisCheck chain_hypotheses(const TrilinearContext& ctx);

struct EpsilonResult {
  int sign = 1;
  std::string pattern;  // which ordered (i, j, k) produced -1
};

// -1 exactly when some V_i = eta (x) St with eta unramified and some other
// V_j is discrete series with V_j~ isomorphic to V_k (x) eta. Requires
// omega1 omega2 omega3 = 1 and a minimal triple (DomainError otherwise).
EpsilonResult epsilon_obstruction(const std::array<RepSpec, 3>& specs);

}  // namespace tvec
