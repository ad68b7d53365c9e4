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

// Direct evaluation of the invariant trilinear form on three induced
// representations Ind(chi_i), chi_i = (mu_i, mu_i'), with
// omega1 omega2 omega3 = 1:
//
//   l(f1, f2, f3) = int_{(P^1)^3} F1 F2 F3 rho_12(D_12) rho_13(D_13) rho_23(D_23)
//
// where F_i(c, d) = f_i(g) for any g of determinant 1 with bottom row (c, d),
// D_ij = c_i d_j - d_i c_j and rho_ij = mu_i mu_j mu_k' |.|^(-1/2) ({i,j,k} =
// {1,2,3}). P^1 is covered by (1, y), y in O, and (x, 1), x in pO, each with
// additive Haar measure. The integral is cut into triples of balls; the
// singular diagonal pieces are summed in closed form (analytic continuation
// where the geometric series diverge).

#pragma once

#include "tvec/induced.hpp"

namespace tvec {

struct KernelOptions {
  int max_radius = 12;       // DomainError past this refinement depth
  i64 max_cells = 20'000'000;
};

struct KernelResult {
  cplx value;
  double abs_mass = 0.0;  // sum of |piece| over all resolved pieces
  i64 cells = 0;
};

// The exponents rho_ij as characters.
struct KernelExponents {
  MultChar rho12, rho13, rho23;
};
KernelExponents kernel_exponents(const BorelChar& c1, const BorelChar& c2,
                                 const BorelChar& c3);

KernelResult kernel_oracle(const InducedVector& f1, const InducedVector& f2,
                           const InducedVector& f3,
                           const KernelOptions& opt = {});

}  // namespace tvec
