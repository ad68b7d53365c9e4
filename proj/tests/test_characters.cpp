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

#include "tvec/characters.hpp"
#include "tvec/rep_spec.hpp"

namespace tvec {
namespace {

TEST(Characters, Evaluation) {
  const MultChar triv = MultChar::trivial(5);
  EXPECT_NEAR(std::abs(eval_char(triv, LocalFieldElem::from_int(17, 5, 4)) - 1.0), 0.0, 1e-15);
  const MultChar norm = MultChar::abs_power(5, 1.0);
  EXPECT_NEAR(std::abs(eval_char(norm, LocalFieldElem::monomial(5, 4, 1)) - 0.2), 0.0, 1e-15);
  // 2 generates (Z/5)^x; exponent 1 of 4 sends it to i.
  const MultChar quartic(1.0, UnitChar::from_exponents(5, 1, {1}));
  EXPECT_NEAR(std::abs(eval_char(quartic, LocalFieldElem::from_int(2, 5, 4)) - cplx(0, 1)), 0.0,
              1e-12);
  EXPECT_EQ(quartic.conductor(), 1);
  EXPECT_EQ(triv.conductor(), 0);
}

TEST(Characters, NonPrimitiveIsRejected) {
  // Exponent 5 of 20 at level 2 is trivial on 1 + 5Z/25.
  EXPECT_THROW(UnitChar::from_exponents(5, 2, {5}), DomainError);
}

TEST(Characters, TwistConductors) {
  const int p = 3;
  const MultChar theta(1.0, UnitChar::from_exponents(p, 1, {1}));
  const RepSpec un = RepSpec::principal(MultChar::unramified(p, 1.3), MultChar::unramified(p, 0.4));
  EXPECT_TRUE(isomorphic(twist_and_classify(un, MultChar::trivial(p)), un));
  EXPECT_EQ(twist_and_classify(un, theta).conductor(), 2);
  const RepSpec st = RepSpec::special_quotient(MultChar::trivial(p));
  const RepSpec st2 = twist_and_classify(st, MultChar::unramified(p, -1.0));
  EXPECT_TRUE(st2.is_special());
  EXPECT_EQ(st2.conductor(), 1);
}

TEST(Characters, MinimalTripleSearch) {
  const int p = 3;
  auto un = [&](cplx z) { return MultChar::unramified(p, z); };
  const MultChar theta(1.0, UnitChar::from_exponents(p, 1, {1}));
  const RepSpec u = RepSpec::principal(un(1.2), un(0.5));
  const auto r0 = minimal_triple_search({u, u, RepSpec::principal(un(1.0 / 0.6), un(1.0 / 0.6))});
  EXPECT_EQ(r0.total, 0);
  EXPECT_TRUE(r0.already_minimal);

  const RepSpec a = RepSpec::principal(un(1.0), theta);
  const RepSpec b = RepSpec::principal(un(1.0), theta.inverse());
  const RepSpec c = RepSpec::principal(un(1.0), un(1.0));
  const auto r1 = minimal_triple_search({a, b, c}, 1);
  EXPECT_EQ(r1.total, 2);
  EXPECT_TRUE(r1.already_minimal);

  // Twisting unramified data by (theta, theta^-1, 1) raises the total to 4;
  // the search undoes it.
  const auto r2 = minimal_triple_search(
      {twist_and_classify(u, theta), twist_and_classify(u, theta.inverse()),
       RepSpec::principal(un(1.0 / 0.6), un(1.0 / 0.6))},
      1);
  EXPECT_FALSE(r2.already_minimal);
  EXPECT_EQ(r2.original_total, 4);
  EXPECT_EQ(r2.total, 0);
}

TEST(CharactersProperty, Multiplicative) {
  std::mt19937_64 rng(7);
  for (int p : {2, 3, 5}) {
    const auto chars = UnitChar::all_up_to(p, 2);
    const i64 q = ipow(p, 4);
    std::uniform_int_distribution<i64> pick(1, q - 1);
    std::uniform_int_distribution<int> val(-3, 3);
    for (const UnitChar& u : chars) {
      const MultChar chi(cplx(0.7, 0.4), u);
      for (int i = 0; i < 40; ++i) {
        i64 a = pick(rng), b = pick(rng);
        while (a % p == 0) a = pick(rng);
        while (b % p == 0) b = pick(rng);
        const int va = val(rng), vb = val(rng);
        const cplx lhs = chi.eval_parts(va + vb, mulmod(a, b, q));
        const cplx rhs = chi.eval_parts(va, a) * chi.eval_parts(vb, b);
        EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-9 * std::abs(rhs));
      }
    }
  }
}

}  // namespace
}  // namespace tvec
