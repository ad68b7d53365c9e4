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

// Descriptions of the representations the engine works with: principal
// series Ind(mu, mu'), the two models of a special representation, and
// supercuspidal stubs that carry only their conductor and central character.

#pragma once

#include <array>
#include <string>

#include "tvec/characters.hpp"

namespace tvec {

enum class RepKind {
  kPrincipal,
  // eta (x) St as the quotient of Ind(eta|.|^(-1/2), eta|.|^(1/2)) by the
  // line spanned by eta o det.
  kSpecialQuotient,
  // eta (x) St as the subspace of Ind(eta|.|^(1/2), eta|.|^(-1/2)).
  kSpecialSubspace,
  kSupercuspidalStub,
};

const char* to_string(RepKind kind);

class RepSpec {
 public:
  // Requires mu'/mu != |.|^(+-1).
  static RepSpec principal(const MultChar& mu, const MultChar& mu_prime);
  static RepSpec special_quotient(const MultChar& eta);
  static RepSpec special_subspace(const MultChar& eta);
  // Stub of conductor n >= 2 with central character omega. Stubs are
  // compared by label and accumulated twist only.
  static RepSpec stub(int p, int n, const MultChar& omega,
                      const std::string& label, bool minimal = true);

  RepKind kind() const { return kind_; }
  int p() const { return p_; }
  bool is_stub() const { return kind_ == RepKind::kSupercuspidalStub; }
  bool is_special() const {
    return kind_ == RepKind::kSpecialQuotient ||
           kind_ == RepKind::kSpecialSubspace;
  }
  // The inducing character of the model (principal and special kinds).
  const BorelChar& chi() const;
  // eta for special kinds.
  const MultChar& eta() const;
  const std::string& label() const { return label_; }
  // Product of all characters a stub has been twisted by.
  const MultChar& stub_twist() const { return twist_; }

  int conductor() const { return conductor_; }
  const MultChar& central_character() const { return omega_; }
  bool is_minimal() const { return minimal_; }

  std::string describe() const;

 private:
  RepSpec(RepKind kind, int p) : kind_(kind), p_(p), chi_{MultChar(p), MultChar(p)},
        eta_(p), omega_(p), twist_(p) {}

  RepKind kind_;
  int p_;
  BorelChar chi_;
  MultChar eta_;
  MultChar omega_;
  MultChar twist_;
  std::string label_;
  int conductor_ = 0;
  bool minimal_ = true;

  friend RepSpec twist_and_classify(const RepSpec& spec, const MultChar& eta);
};

// V (x) (eta o det) with conductor, central character and minimality
// recomputed. For stubs the conductor is max(n, 2 cond eta) when the two
// differ; when they agree the conductor is not determined by the stub data
// and UnsupportedError is thrown.
RepSpec twist_and_classify(const RepSpec& spec, const MultChar& eta);

// V~ = V (x) omega^-1.
RepSpec contragredient(const RepSpec& spec);

// Isomorphism of the irreducible representations described by two specs,
// decided on character data (unordered pair for principal series, eta for
// special kinds, label and twist for stubs).
bool isomorphic(const RepSpec& a, const RepSpec& b, double tol = 1e-9);

// Nonzero G-maps from Ind(chi) (normalized induction) to the irreducible
// representation described by target; target must not be a stub.
bool hom_from_induced_nonzero(const BorelChar& chi, const RepSpec& target,
                              double tol = 1e-9);

struct TripleSearchResult {
  std::array<MultChar, 3> etas;
  int total = 0;           // smallest total conductor found
  int original_total = 0;  // n1 + n2 + n3 of the input
  bool already_minimal = true;
};

// Exhaustive search over unit-part characters eta1, eta2 of conductor
// <= bound with eta3 = (eta1 eta2)^-1 also of conductor <= bound. Unramified
// twists never change conductors, so only unit parts are searched.
TripleSearchResult minimal_triple_search(const std::array<RepSpec, 3>& specs,
                                         int bound = 2);

}  // namespace tvec
