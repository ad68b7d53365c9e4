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
#include <random>

#include <gtest/gtest.h>

#include "tvec/gl2.hpp"
#include "tvec/suites.hpp"

namespace tvec {
namespace {

TEST(GL2, CosetCounts) {
  EXPECT_EQ(enumerate_cosets(2, 1).size(), 6u);
  EXPECT_EQ(enumerate_cosets(3, 1).size(), 48u);
  EXPECT_EQ(enumerate_cosets(2, 2).size(), 96u);
  EXPECT_EQ(gl2_order(3, 2), 48 * 81);
}

TEST(GL2, IwahoriVolumeMatchesIndex) {
  // [K : I_n] counted on cosets at level n.
  for (int p : {2, 3}) {
    for (int n = 1; n <= 2; ++n) {
      i64 inside = 0;
      for (const Mat2& k : enumerate_cosets(p, n)) inside += mat_in_iwahori(k, p, n) ? 1 : 0;
      EXPECT_DOUBLE_EQ(iwahori_volume(p, n), double(inside) / double(gl2_order(p, n)));
    }
  }
  EXPECT_DOUBLE_EQ(iwahori_volume(2, 2), 1.0 / 6.0);
}

TEST(GL2, Iwasawa) {
  const int p = 3, N = 6;
  const GL2Elem k = GL2Elem::from_ints(p, N, 2, 1, 3, 5);
  const auto [b0, k0] = iwasawa(k);
  EXPECT_TRUE(same_value(b0, GL2Elem::identity(p, N)));
  EXPECT_TRUE(same_value(k0, k));
  const GL2Elem g = GL2Elem::from_ints(p, N, 0, 1, p, 0);
  const auto [b, kk] = iwasawa(g);
  EXPECT_TRUE(same_value(b, GL2Elem::from_ints(p, N, 1, 0, 0, p)));
  EXPECT_TRUE(same_value(kk, GL2Elem::weyl(p, N)));
}

TEST(GL2, ShellDepth) {
  const int p = 3, N = 6;
  EXPECT_EQ(shell_depth(GL2Elem::weyl(p, N)), 0);
  EXPECT_EQ(shell_depth(GL2Elem::from_ints(p, N, 1, 0, p, 1)), 1);
  EXPECT_EQ(shell_depth(GL2Elem::from_ints(p, N, 1, 4, 0, 1)), N);
}

TEST(GL2, IdentityInEverySubgroup) {
  const GL2Elem e = GL2Elem::identity(2, 6);
  for (SubgroupTag t : {SubgroupTag::kK, SubgroupTag::kIwahori, SubgroupTag::kPrincipal,
                        SubgroupTag::kJ, SubgroupTag::kI1}) {
    for (int n = 0; n <= 3; ++n) EXPECT_TRUE(is_member(e, {t, n})) << to_string(t) << n;
  }
}

TEST(GL2, SupportIdentity) {
  EXPECT_TRUE(support_identity_check(2, 1, 1).ok);
  EXPECT_TRUE(support_identity_check(3, 2, 1).ok);
  EXPECT_TRUE(support_identity_check(3, 0, 2).ok);
}

TEST(GL2, StructuralSuiteAtTwo) {
  for (const StructuralCheck& c : run_structural_suite(2)) {
    EXPECT_TRUE(c.ok) << c.name << ": " << c.first_failure;
    EXPECT_GT(c.checked, 0) << c.name;
  }
}

TEST(GL2Property, IwasawaReassembles) {
  std::mt19937_64 rng(2024);
  for (int p : {2, 3, 5}) {
    const int N = 8;
    std::uniform_int_distribution<i64> e(-40, 40);
    int done = 0;
    while (done < 150) {
      const Mat2 m{e(rng), e(rng), e(rng), e(rng)};
      if (m.det() == 0) continue;
      const GL2Elem g = GL2Elem::from_mat2(p, N, m, static_cast<int>(rng() % 3));
      const auto [b, k] = iwasawa(g);
      EXPECT_TRUE(is_upper_triangular(b));
      EXPECT_TRUE(in_K(k));
      EXPECT_TRUE(same_value(b * k, g));
      ++done;
    }
  }
}

TEST(GL2Property, GammaConjugationRoundTrip) {
  std::mt19937_64 rng(99);
  const int p = 3, N = 10;
  std::uniform_int_distribution<i64> e(0, 80);
  for (int i = 0; i < 200; ++i) {
    const Mat2 m{1 + 3 * e(rng), e(rng), 9 * e(rng), 1 + 3 * e(rng)};
    const GL2Elem k = GL2Elem::from_mat2(p, N, m);
    const int r = static_cast<int>(rng() % 3);
    EXPECT_TRUE(same_value(conjugate_by_gamma(conjugate_by_gamma(k, r), -r), k));
  }
}

}  // namespace
}  // namespace tvec
