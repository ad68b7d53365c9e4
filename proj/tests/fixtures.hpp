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
// Representation triples shared by the tests and the acceptance binary.

#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <vector>

#include "tvec/rep_spec.hpp"

namespace tvec::fixtures {

inline MultChar un(int p, cplx z) { return MultChar::unramified(p, z); }

// Unramified V1, V2 with Satake data chosen by variant (0 or 1).
inline std::array<RepSpec, 2> unramified_pair(int p, int variant) {
  if (variant == 0) {
    return {RepSpec::principal(un(p, {1.3, 0.4}), un(p, {0.6, -0.2})),
            RepSpec::principal(un(p, {0.9, 0.1}), un(p, {1.2, 0.5}))};
  }
  return {RepSpec::principal(un(p, {0.8, -0.6}), un(p, {1.5, 0.2})),
          RepSpec::principal(un(p, {1.1, 0.7}), un(p, {0.4, 0.3}))};
}

inline cplx omega_at_p(const RepSpec& a, const RepSpec& b) {
  return (a.central_character() * b.central_character()).unramified_value();
}

// V3 ramified principal with unramified central character omega12^-1:
// (theta a, theta^-1 b) with theta of conductor 1 (p odd, conductor 2) or of
// conductor 2 (p = 2, conductor 4).
inline RepSpec ramified_v3(int p, cplx w12) {
  const int m = p == 2 ? 2 : 1;
  const UnitChar th = UnitChar::from_exponents(p, m, {1});
  const cplx a(0.8, 0.3);
  return RepSpec::principal(MultChar(a, th), MultChar(1.0 / (w12 * a), th.inverse()));
}

// eta (x) St with eta^2 = omega12^-1, conductor 1.
inline RepSpec steinberg_v3(int p, cplx w12) {
  return RepSpec::special_quotient(un(p, std::sqrt(1.0 / w12)));
}

inline std::array<RepSpec, 3> unramified_pair_triple(int p, int variant, bool steinberg) {
  const auto v = unramified_pair(p, variant);
  const cplx w = omega_at_p(v[0], v[1]);
  return {v[0], v[1], steinberg ? steinberg_v3(p, w) : ramified_v3(p, w)};
}

// p = 3: V1 = (unramified, theta), V2 = (theta, unramified), V3 unramified.
inline std::array<RepSpec, 3> equal_pair_triple() {
  const int p = 3;
  const MultChar leg(cplx(0.7, 0.1), UnitChar::from_exponents(p, 1, {1}));
  const RepSpec v1 = RepSpec::principal(un(p, {1.1, 0.2}), leg);
  const RepSpec v2 =
      RepSpec::principal(MultChar({0.9, -0.3}, leg.unit_part()), un(p, {1.2, 0.4}));
  const cplx w = omega_at_p(v1, v2);
  return {v1, v2, RepSpec::principal(un(p, {0.8, 0.5}), un(p, 1.0 / (w * cplx(0.8, 0.5))))};
}

// p = 3: V1 = St, V2 unramified, V3 = (theta a, theta b) of conductor 2.
inline std::array<RepSpec, 3> special_unramified_triple() {
  const int p = 3;
  const UnitChar th = UnitChar::from_exponents(p, 1, {1});
  const RepSpec s = RepSpec::special_quotient(un(p, {0.9, 0.3}));
  const RepSpec u = RepSpec::principal(un(p, {1.4, 0.1}), un(p, {0.5, 0.3}));
  const cplx w = omega_at_p(s, u);
  return {s, u, RepSpec::principal(MultChar({0.8, 0.2}, th), MultChar(1.0 / (w * cplx(0.8, 0.2)), th))};
}

// p = 3: V1 = St eta1, V2 = St eta2, V3 unramified.
inline std::array<RepSpec, 3> two_steinberg_triple() {
  const int p = 3;
  const RepSpec s1 = RepSpec::special_quotient(un(p, {0.9, 0.3}));
  const RepSpec s2 = RepSpec::special_quotient(un(p, {1.1, -0.4}));
  const cplx w = omega_at_p(s1, s2);
  return {s1, s2, RepSpec::principal(un(p, 1.3), un(p, 1.0 / (w * 1.3)))};
}

// p = 5: V1 unramified, V2 = (1, chi), V3 = (chi^2 / w1, chi) with chi of
// order 4 and conductor 1; n3 = 2 exceeds n1 = 0 and n2 = 1.
inline std::array<RepSpec, 3> increasing_conductor_triple() {
  const int p = 5;
  const UnitChar chi = UnitChar::from_exponents(p, 1, {1});
  const RepSpec v1 = RepSpec::principal(un(p, {1.2, 0.1}), un(p, {0.7, 0.3}));
  const cplx w1 = v1.central_character().unramified_value();
  return {v1, RepSpec::principal(un(p, 1.0), MultChar(1.0, chi)),
          RepSpec::principal(MultChar(1.0 / w1, chi * chi), MultChar(1.0, chi))};
}

// One ramified principal V1 = (unramified, theta), V2 unramified and V3
// = (unramified, theta^-1) at p = 3.
inline std::array<RepSpec, 3> one_ramified_triple() {
  const int p = 3;
  const UnitChar th = UnitChar::from_exponents(p, 1, {1});
  const RepSpec v1 = RepSpec::principal(un(p, {1.2, 0.2}), MultChar({0.8, 0.1}, th));
  const RepSpec v2 = RepSpec::principal(un(p, {0.9, 0.4}), un(p, {1.3, -0.2}));
  const cplx w = omega_at_p(v1, v2);
  return {v1, v2, RepSpec::principal(un(p, {0.7, 0.6}), MultChar(1.0 / (w * cplx(0.7, 0.6)), th.inverse()))};
}

// St, ramified principal (unramified, theta), V3 = (theta^-1 a, b) at p = 3.
inline std::array<RepSpec, 3> mixed_triple() {
  const int p = 3;
  const UnitChar th = UnitChar::from_exponents(p, 1, {1});
  const RepSpec s = RepSpec::special_quotient(un(p, {1.05, 0.2}));
  const RepSpec v2 = RepSpec::principal(un(p, {0.9, 0.4}), MultChar({1.3, -0.2}, th));
  const cplx w = omega_at_p(s, v2);
  return {s, v2, RepSpec::principal(MultChar({0.7, 0.6}, th.inverse()), un(p, 1.0 / (w * cplx(0.7, 0.6))))};
}

inline RepSpec spherical(int p, cplx eta) { return RepSpec::special_subspace(un(p, eta)); }

// Minimal triples with a designed epsilon: returns (specs, expected sign).
// Three Steinberg twists St eta_i have epsilon = -1 exactly when
// eta1 eta2 eta3 (p) = 1; a principal series in the triple forces +1.
struct EpsilonCase {
  std::array<RepSpec, 3> specs;
  int expected;
  std::string label;
};

inline std::vector<EpsilonCase> epsilon_family(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> radius(0.6, 1.5);
  std::vector<EpsilonCase> out;
  const std::array<int, 3> primes{2, 3, 5};
  for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
    const int p = primes[i % 3];
    const cplx e1 = std::polar(radius(rng), phase(rng));
    const cplx e2 = std::polar(radius(rng), phase(rng));
    const RepSpec s1 = RepSpec::special_quotient(un(p, e1));
    const RepSpec s2 = (i % 2 == 0) ? RepSpec::special_quotient(un(p, e2))
                                    : RepSpec::special_subspace(un(p, e2));
    std::array<RepSpec, 3> specs{s1, s2, s1};
    int expected = 1;
    std::string label;
    switch (i % 4) {
      case 0:  // eta3 = (eta1 eta2)^-1
        specs[2] = RepSpec::special_quotient(un(p, 1.0 / (e1 * e2)));
        expected = -1;
        label = "St x St x St, product 1";
        break;
      case 1:  // eta3 = -(eta1 eta2)^-1
        specs[2] = RepSpec::special_quotient(un(p, -1.0 / (e1 * e2)));
        label = "St x St x St, product -1";
        break;
      case 2: {  // St x St x unramified principal
        const cplx a = std::polar(radius(rng), phase(rng));
        specs[2] = RepSpec::principal(un(p, a), un(p, 1.0 / (e1 * e1 * e2 * e2 * a)));
        label = "St x St x principal";
        break;
      }
      case 3: {  // St x V x V~ (x) eta^-1 with V unramified principal
        const cplx a = std::polar(radius(rng), phase(rng));
        const RepSpec v = RepSpec::principal(un(p, a), un(p, e2));
        specs[1] = v;
        specs[2] = twist_and_classify(contragredient(v), un(p, 1.0 / e1));
        label = "St x V x V~, V principal";
        break;
      }
    }
    // Rotate so the Steinberg factor is not always first.
    std::rotate(specs.begin(), specs.begin() + (i / 4) % 3, specs.end());
    out.push_back({specs, expected, label});
  }
  return out;
}

}  // namespace tvec::fixtures
