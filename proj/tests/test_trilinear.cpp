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

#include "fixtures.hpp"
#include "samplers.hpp"
#include "tvec/kernel_oracle.hpp"
#include "tvec/trilinear.hpp"

namespace tvec {
namespace {

using fixtures::un;

TrilinearContext context_of(const std::array<RepSpec, 3>& s, ContextOptions opt = {}) {
  return make_context(s[0], s[1], s[2], opt);
}

std::vector<TrilinearContext> phi_contexts() {
  std::vector<TrilinearContext> out;
  out.push_back(context_of(fixtures::unramified_pair_triple(3, 0, false)));
  out.push_back(context_of(fixtures::unramified_pair_triple(2, 1, false)));
  out.push_back(context_of(fixtures::special_unramified_triple()));
  out.push_back(context_of(fixtures::unramified_pair_triple(3, 1, true)));
  return out;
}

TEST(TrilinearProperty, PhiTorusEquivariance) {
  std::mt19937_64 rng(31337);
  auto contexts = phi_contexts();
  // Steinberg V3 with both other factors spherical: phi is the derivative
  // functional.
  contexts.push_back(make_context(fixtures::spherical(3, 1.0), fixtures::spherical(3, 1.0),
                                  RepSpec::special_quotient(un(3, 1.0)), {true, true, 10}));
  ASSERT_EQ(contexts.back().phi_order, 1);
  for (const TrilinearContext& ctx : contexts) {
    EXPECT_LT(samplers::phi_equivariance_error(ctx, rng, 30), 1e-9) << "p=" << ctx.p;
  }
}

TEST(Trilinear, PhiNonzeroOnGammaTranslates) {
  for (const TrilinearContext& ctx : phi_contexts()) {
    for (int i = -1; i <= 3; ++i) {
      const PhiValue v = phi(ctx, ctx.v3_vector.gamma_translate(i));
      EXPECT_GT(std::abs(v.value), 1e-6 * v.abs_mass) << "i=" << i;
    }
  }
}

TEST(Trilinear, PhiMatchesLinearSolveOracle) {
  for (const TrilinearContext& ctx : phi_contexts()) {
    const int p = ctx.p;
    const InducedVector& v3 = ctx.v3_vector;
    std::vector<InducedVector> probes = {v3, v3.gamma_translate(1), v3.act(Mat2{1, 1, 0, 1}),
                                         v3.act(Mat2{1, 0, p, 1})};
    const int L = v3.level() + 2;
    const PhiOracle o = phi_linear_oracle(ctx.f1.chi, ctx.f2.chi, ctx.v3, L, probes, ctx.cap);
    ASSERT_EQ(o.dimension, 1);
    const cplx ref = phi(ctx, probes[0]).value;
    for (std::size_t i = 1; i < probes.size(); ++i) {
      const cplx ratio = phi(ctx, probes[i]).value / ref;
      EXPECT_NEAR(std::abs(o.values[i] / o.values[0] - ratio), 0.0, 1e-6 * std::max(1.0, std::abs(ratio)));
    }
  }
}

TEST(Trilinear, HMatchesTensorOfStarVectors) {
  const TrilinearContext ctx = context_of(fixtures::unramified_pair_triple(3, 0, false));
  const HCheck h = verify_lambda12(ctx);
  EXPECT_FALSE(h.sampled);  // all (c, d, det) classes
  EXPECT_GT(h.support, 0);
  EXPECT_LT(h.max_err_closed, 1e-9);
  EXPECT_LT(h.max_err_tensor, 1e-9);
}

TEST(Trilinear, DescentCertifiesNewVectorZero) {
  const TrilinearContext ctx = context_of(fixtures::unramified_pair_triple(3, 0, false));
  const DescentResult d = descent_solve(ctx, {{0, 0, 0}, {ctx.n3, 0, 0}});
  EXPECT_TRUE(d.values[0].certified_zero);
  EXPECT_TRUE(d.values[1].determined);
  EXPECT_GT(std::abs(d.values[1].value), 1e-6 * d.scale);
  EXPECT_TRUE(chain_hypotheses(ctx).ok());
}

TEST(Trilinear, KernelAgreesWithDescent) {
  for (const auto& triple : {fixtures::unramified_pair_triple(3, 0, false), fixtures::equal_pair_triple()}) {
    const TrilinearContext ctx = context_of(triple);
    const std::vector<Tensor> ts = {{0, 0, 0}, {0, 0, 1}, {1, 1, 0}, {ctx.n, 0, 0},
                                    {ctx.n, 0, 0, Mat2{1, 0, ctx.p, 1}}, {ctx.n, 0, 0, Mat2{1, 0, 1, 1}}};
    const DescentResult d = descent_solve(ctx, ts);
    cplx ref_d = 0.0, ref_k = 0.0;
    for (const EllValue& e : d.values) {
      if (!e.determined) continue;
      const auto f = tensor_vectors(ctx, e.tensor);
      const KernelResult k = kernel_oracle(f[0], f[1], f[2]);
      if (std::abs(e.value) < 1e-9 * d.scale) {
        EXPECT_LT(std::abs(k.value), 1e-9 * std::max(1.0, k.abs_mass)) << e.tensor.to_string();
        continue;
      }
      if (ref_d == 0.0) {
        ref_d = e.value;
        ref_k = k.value;
        continue;
      }
      EXPECT_NEAR(std::abs(k.value / ref_k - e.value / ref_d), 0.0,
                  1e-6 * std::abs(e.value / ref_d))
          << e.tensor.to_string();
    }
    EXPECT_NE(ref_d, cplx(0.0, 0.0));
  }
}

TEST(Trilinear, KernelReproducesObstructionZero) {
  const auto s = fixtures::unramified_pair_triple(3, 0, false);
  const KernelResult k =
      kernel_oracle(new_vector(s[0], 10), new_vector(s[1], 10), new_vector(s[2], 10));
  EXPECT_LT(std::abs(k.value), 1e-9 * std::max(1.0, k.abs_mass));
}

TEST(Trilinear, ContextRejectsWrongCentralCharacter) {
  auto s = fixtures::unramified_pair_triple(3, 0, false);
  s[2] = RepSpec::principal(un(3, 1.0), un(3, 1.0));
  EXPECT_THROW(context_of(s), DomainError);
}

TEST(Epsilon, DesignedFamily) {
  const auto family = fixtures::epsilon_family(77, 24);
  int minus = 0;
  for (const auto& c : family) {
    const EpsilonResult r = epsilon_obstruction(c.specs);
    EXPECT_EQ(r.sign, c.expected) << c.label;
    minus += r.sign == -1 ? 1 : 0;
  }
  EXPECT_GT(minus, 0);
}

TEST(Epsilon, Examples) {
  const int p = 3;
  const RepSpec u = RepSpec::principal(un(p, 1.2), un(p, 0.5));
  EXPECT_EQ(epsilon_obstruction({u, u, RepSpec::principal(un(p, 1 / 0.6), un(p, 1 / 0.6))}).sign, 1);
  const RepSpec st = RepSpec::special_quotient(un(p, 1.0));
  EXPECT_EQ(epsilon_obstruction({st, st, st}).sign, -1);
  // St x V x V~ with V ramified principal: V is not discrete series.
  const MultChar th(1.0, UnitChar::from_exponents(p, 1, {1}));
  const RepSpec v = RepSpec::principal(un(p, 1.0), th);
  EXPECT_EQ(epsilon_obstruction({st, v, contragredient(v)}).sign, 1);
}

}  // namespace
}  // namespace tvec
