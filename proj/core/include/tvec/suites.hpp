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
// Batch checks shared by the command line tool and the acceptance binary:
// the act-vs-closed-form lemma sweeps and the structural group identities.

#pragma once

#include <string>
#include <vector>

#include "tvec/induced.hpp"

namespace tvec {

struct LemmaSuiteOptions {
  int cap = 10;
  int max_r = 3;
  i64 budget = 20'000'000;
  double tolerance = 1e-9;  // relative to the largest closed-form value
  // Multiplies alpha inside the closed forms. Anything but 1 is a fault
  // injection used to exercise the failure path.
  cplx alpha_fault{1.0, 0.0};
};

struct LemmaCaseResult {
  std::string lemma;  // to_string(LemmaCase)
  std::string representation;
  std::string variant;
  int r = 0;
  int level = 0;
  i64 checked = 0;
  bool exhaustive = false;
  double max_rel_error = 0.0;
  bool ok = false;
};

struct LemmaSuiteResult {
  int p = 2;
  std::vector<LemmaCaseResult> cases;
  bool ok() const;
};

// One representation per LemmaCase. Ramified characters have conductor 1
// (conductor 2 when p = 2, which has no primitive characters mod 2).
std::vector<RepSpec> lemma_representatives(int p);

// Every supported (case, variant, r) with 0 <= r <= max_r. BudgetError when
// a level cannot be swept within the budget even one class at a time.
LemmaSuiteResult run_lemma_suite(int p, const LemmaSuiteOptions& opt = {});

struct StructuralCheck {
  std::string name;
  i64 checked = 0;
  bool ok = true;
  std::string first_failure;
};

// Support identity for r + s <= max_sum, both coset factorizations
// multiplied back, and the inclusions among I_n, I1_n, Kprin_n and J_n
// over every coset at level <= max_level.
std::vector<StructuralCheck> run_structural_suite(int p, int max_sum = 3, int max_level = 3,
                                                  i64 budget = 4'000'000);

}  // namespace tvec
