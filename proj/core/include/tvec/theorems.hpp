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

// End-to-end drivers: each instantiates one test-vector statement for given
// representations and reports every computed value of the trilinear form
// with its provenance ("chain", "kernel", "eigenspace" or "closed form").

#pragma once

#include <array>
#include <string>
#include <vector>

#include "tvec/rep_spec.hpp"
#include "tvec/trilinear.hpp"

namespace tvec {

struct Claim {
  std::string tensor;
  bool expect_nonzero = true;
  cplx value;
  double scale = 0.0;
  std::string provenance;
  std::string certificate;
  bool determined = true;

  // Nonzero claims need |value| > 1e-6 scale; zero claims need a
  // certificate or |value| < 1e-9 scale.
  bool holds() const;
};

struct TheoremReport {
  std::string case_id;
  std::string subcase;
  int p = 0;
  std::vector<std::string> representations;
  std::vector<Claim> claims;
  std::vector<std::string> checks;
  bool checks_ok = true;
  std::vector<std::string> conventions;
  bool pass() const;
};

struct TheoremOptions {
  int cap = 10;
  i64 pair_budget = 4'000'000;  // for the H verification
  bool verify_h = true;
  bool cross_check_kernel = true;
};

// V1, V2 unramified principal series, V3 of conductor n >= 1.
TheoremReport verify_unramified_pair(const std::array<RepSpec, 3>& specs,
                                     const TheoremOptions& opt = {});
// Minimal triple with epsilon = +1 and no supercuspidal; the ordering is
// chosen among the permutations.
TheoremReport verify_minimal_triple(const std::array<RepSpec, 3>& specs,
                                    const TheoremOptions& opt = {});
// V1 = Ind(mu1, mu1') (mu1 unramified), V2 and V3 stubs of equal conductor.
TheoremReport verify_equal_conductor_stubs(const std::array<RepSpec, 3>& specs,
                                           const TheoremOptions& opt = {});
// Reducible Ind((eta_i o det) delta^1/2) factors are passed as
// special_subspace(eta_i); the first one, two or three specs are read that
// way.
TheoremReport verify_reducible(int spherical_count, const std::array<RepSpec, 3>& specs,
                               const TheoremOptions& opt = {});

// Dispatch by case id: "unramified-pair", "minimal-triple",
// "equal-conductor-stubs", "reducible-spherical", "reducible-two-spherical",
// "reducible-one-spherical". DomainError on an unknown id.
TheoremReport verify_theorem(const std::string& case_id,
                             const std::array<RepSpec, 3>& specs,
                             const TheoremOptions& opt = {});

const std::vector<std::string>& theorem_case_ids();

}  // namespace tvec
