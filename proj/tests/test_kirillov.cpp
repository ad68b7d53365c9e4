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

#include "samplers.hpp"
#include "tvec/kirillov.hpp"

namespace tvec {
namespace {

TEST(Kirillov, PairingOfNewVectorsIsOne) {
  for (int p : {2, 3, 5}) {
    const auto f = KirillovVector::unit_indicator(p, AddChar::kPsi);
    const auto g = KirillovVector::unit_indicator(p, AddChar::kPsiBar);
    EXPECT_EQ(pairing_Phi(f, g), cplx(1.0, 0.0));
  }
}

TEST(Kirillov, ActionExamples) {
  const int p = 3, N = 8;
  const MultChar om(cplx(0.6, 0.8), UnitChar::from_exponents(p, 1, {1}));
  const auto f = KirillovVector::unit_indicator(p, AddChar::kPsi);
  EXPECT_TRUE(borel_act(GL2Elem::identity(p, N), f, om).approx_equal(f));
  const GL2Elem z = GL2Elem::from_ints(p, N, 2, 0, 0, 2);
  EXPECT_TRUE(borel_act(z, f, om).approx_equal(f * om.eval_parts(0, 2)));
  EXPECT_TRUE(borel_act(GL2Elem::from_ints(p, N, 1, 1, 0, 1), f, om).approx_equal(f));
}

TEST(Kirillov, StubEigenvalues) {
  const int p = 3;
  const MultChar om(1.0, UnitChar::from_exponents(p, 1, {1}));
  const SupercuspidalStub s(RepSpec::stub(p, 2, om, "A"));
  EXPECT_NEAR(std::abs(s.eigenvalue(Mat2{1, 5, 9, 2}) - om.eval_parts(0, 2)), 0.0, 1e-12);
  EXPECT_THROW(s.eigenvalue(Mat2{1, 0, 3, 1}), UnsupportedError);
}

TEST(Kirillov, EqualConductorValue) {
  for (int p : {2, 3}) {
    const int n1 = p == 2 ? 2 : 1;
    const MultChar mu1p(1.0, UnitChar::from_exponents(p, n1, {1}));
    const RepSpec v1 = RepSpec::principal(MultChar::unramified(p, {1.2, 0.3}), mu1p);
    const RepSpec s2 = RepSpec::stub(p, n1 + 1, MultChar::trivial(p), "A");
    const RepSpec s3 = RepSpec::stub(p, n1 + 1, v1.central_character().inverse(), "B");
    const EqualConductorResult r = ell_equal_conductor(v1, s2, s3);
    EXPECT_NEAR(std::abs(r.computed - r.closed_form), 0.0, 1e-12);
    EXPECT_NEAR(r.volume, iwahori_volume(p, n1 + 1), 1e-15);
  }
}

TEST(KirillovProperty, BorelEquivarianceOfPairing) {
  std::mt19937_64 rng(4242);
  for (int p : {2, 3, 5}) EXPECT_LT(samplers::kirillov_borel_error(p, rng, 40), 1e-9) << "p=" << p;
}

}  // namespace
}  // namespace tvec
