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
// Runs the twelve acceptance criteria and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "samplers.hpp"
#include "tvec/kernel_oracle.hpp"
#include "tvec/kirillov.hpp"
#include "tvec/suites.hpp"
#include "tvec/theorems.hpp"
#include "tvec/tree.hpp"
#include "tvec/trilinear.hpp"

namespace {

using namespace tvec;
using fixtures::spherical;
using fixtures::un;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

using Check = std::function<void(Outcome&)>;

TrilinearContext context_of(const std::array<RepSpec, 3>& s, ContextOptions opt = {}) {
  return make_context(s[0], s[1], s[2], opt);
}

bool holds_all(const TheoremReport& r) {
  if (!r.checks_ok) return false;
  for (const Claim& c : r.claims) {
    if (!c.holds()) return false;
  }
  return !r.claims.empty();
}

void lemma_suite(Outcome& o) {
  int cases = 0;
  double worst = 0.0;
  for (int p : {2, 3}) {
    const LemmaSuiteResult r = run_lemma_suite(p);
    for (const auto& c : r.cases) {
      ++cases;
      worst = std::max(worst, c.max_rel_error);
      o.require(c.ok, "p=" + std::to_string(p) + " " + c.lemma + " " + c.variant + " r=" +
                          std::to_string(c.r));
    }
  }
  o.detail << cases << " sweeps over p in {2,3}, r <= 3, worst relative error " << worst;
}

void structural(Outcome& o) {
  i64 checked = 0;
  for (int p : {2, 3}) {
    for (const StructuralCheck& c : run_structural_suite(p)) {
      checked += c.checked;
      o.require(c.ok && c.checked > 0, "p=" + std::to_string(p) + " " + c.name + " " + c.first_failure);
    }
  }
  o.detail << checked << " identity checks at level <= 3";
}

void lambda12(Outcome& o) {
  const std::vector<std::pair<std::string, std::array<RepSpec, 3>>> configs = {
      {"both unramified", fixtures::unramified_pair_triple(3, 0, false)},
      {"one special", fixtures::special_unramified_triple()},
      {"one ramified principal", fixtures::one_ramified_triple()},
      {"mixed special + ramified", fixtures::mixed_triple()},
  };
  double worst = 0.0;
  for (const auto& [name, s] : configs) {
    const HCheck h = verify_lambda12(context_of(s));
    worst = std::max({worst, h.max_err_closed, h.max_err_tensor});
    o.require(h.ok() && !h.sampled && h.support > 0, name);
    o.detail << name << ": " << h.pairs << " pairs; ";
  }
  o.detail << "max deviation " << worst;
}

void unramified_pair(Outcome& o) {
  int runs = 0;
  bool al = false;
  for (int p : {2, 3}) {
    for (int variant : {0, 1}) {
      for (bool st : {false, true}) {
        const TheoremReport r =
            verify_theorem("unramified-pair", fixtures::unramified_pair_triple(p, variant, st));
        ++runs;
        const std::string tag = "p=" + std::to_string(p) + " variant " + std::to_string(variant) +
                                (st ? " Steinberg" : " principal");
        o.require(holds_all(r), tag);
        o.require(!r.claims[0].expect_nonzero &&
                      r.claims[0].certificate.find("dim") != std::string::npos,
                  tag + " zero certificate");
        if (st) al = al || r.claims[1].certificate.find("Atkin-Lehner") != std::string::npos;
      }
    }
  }
  o.require(al, "Atkin-Lehner branch not exercised");
  o.detail << runs << " instances; V3 conductors 1 (Steinberg twist) and 2 (p=3) or 4 (p=2): "
           << "no ramified principal series of conductor 1 has unramified central character, "
           << "and none of conductor 2 exists at p=2";
}

void minimal_triples(Outcome& o) {
  const TheoremReport a = verify_theorem("minimal-triple", fixtures::increasing_conductor_triple());
  o.require(a.subcase == "a" && holds_all(a), "increasing conductors at p=5");
  int range = 0;
  for (const auto& s : {fixtures::equal_pair_triple(), fixtures::two_steinberg_triple()}) {
    const TheoremReport b = verify_theorem("minimal-triple", s);
    o.require(holds_all(b), "case " + b.subcase + " for " + b.representations[0]);
    if (b.subcase == "b") range += static_cast<int>(b.claims.size());
  }
  o.detail << "increasing conductors: 2 tensors; equal top conductors: " << range
           << " translates over full ranges";
}

void equal_conductor(Outcome& o) {
  for (int p : {3, 2}) {
    // No character of conductor 1 exists at p = 2, so n1 = 2, n3 = 3 there.
    const int n1 = p == 2 ? 2 : 1;
    const RepSpec v1 = RepSpec::principal(un(p, {1.2, 0.3}),
                                          MultChar(1.0, UnitChar::from_exponents(p, n1, {1})));
    const EqualConductorResult r =
        ell_equal_conductor(v1, RepSpec::stub(p, n1 + 1, MultChar::trivial(p), "A"),
                            RepSpec::stub(p, n1 + 1, v1.central_character().inverse(), "B"));
    const double err = std::abs(r.computed - r.closed_form);
    o.require(err <= 1e-12, "p=" + std::to_string(p));
    o.detail << "p=" << p << " n1=" << n1 << " n3=" << n1 + 1 << " deviation " << err << "; ";
  }
}

void kirillov(Outcome& o) {
  for (int p : {2, 3, 5}) {
    o.require(pairing_Phi(KirillovVector::unit_indicator(p, AddChar::kPsi),
                          KirillovVector::unit_indicator(p, AddChar::kPsiBar)) == cplx(1.0, 0.0),
              "Phi(new, new) at p=" + std::to_string(p));
  }
  std::mt19937_64 rng(20261017);
  double worst = 0.0;
  for (int p : {2, 3, 5}) worst = std::max(worst, samplers::kirillov_borel_error(p, rng, 40));
  o.require(worst <= 1e-9, "Borel law");
  o.detail << "Phi(new,new) = 1; 120 Borel samples, worst deviation " << worst;
}

std::vector<TrilinearContext> phi_contexts() {
  return {context_of(fixtures::unramified_pair_triple(3, 0, false)),
          context_of(fixtures::unramified_pair_triple(2, 1, false)),
          context_of(fixtures::special_unramified_triple()),
          context_of(fixtures::unramified_pair_triple(3, 1, true))};
}

void phi_certification(Outcome& o) {
  std::mt19937_64 rng(8);
  double worst = 0.0;
  const auto contexts = phi_contexts();
  for (const TrilinearContext& ctx : contexts) {
    worst = std::max(worst, samplers::phi_equivariance_error(ctx, rng, 30));
    for (int i = -1; i <= 3; ++i) {
      const PhiValue v = phi(ctx, ctx.v3_vector.gamma_translate(i));
      o.require(std::abs(v.value) > 1e-6 * v.abs_mass, "phi(gamma^i v3) at i=" + std::to_string(i));
    }
    const InducedVector& v3 = ctx.v3_vector;
    const std::vector<InducedVector> probes = {v3, v3.gamma_translate(1), v3.act(Mat2{1, 1, 0, 1}),
                                               v3.act(Mat2{1, 0, ctx.p, 1})};
    const PhiOracle orc =
        phi_linear_oracle(ctx.f1.chi, ctx.f2.chi, ctx.v3, v3.level() + 2, probes, ctx.cap);
    o.require(orc.dimension == 1, "oracle dimension");
    const cplx ref = phi(ctx, probes[0]).value;
    for (std::size_t i = 1; i < probes.size(); ++i) {
      const cplx ratio = phi(ctx, probes[i]).value / ref;
      o.require(std::abs(orc.values[i] / orc.values[0] - ratio) <= 1e-6 * std::max(1.0, std::abs(ratio)),
                "oracle ratio");
    }
  }
  o.require(worst <= 1e-9, "equivariance");
  o.detail << 30 * contexts.size() << " equivariance samples (worst " << worst << "), "
           << contexts.size() << " contexts for nonvanishing and oracle ratios";
}

void concordance(Outcome& o) {
  int compared = 0;
  for (const auto& s : {fixtures::unramified_pair_triple(3, 0, false), fixtures::equal_pair_triple()}) {
    const TrilinearContext ctx = context_of(s);
    const std::vector<Tensor> ts = {{0, 0, 0},
                                    {0, 0, 1},
                                    {1, 1, 0},
                                    {1, 1, 1},
                                    {ctx.n, 0, 0},
                                    {ctx.n, 0, 0, Mat2{1, 0, ctx.p, 1}},
                                    {ctx.n, 0, 0, Mat2{2, 0, 0, 1}},
                                    {ctx.n, 0, 0, Mat2{1, 0, 1, 1}}};
    const DescentResult d = descent_solve(ctx, ts);
    std::vector<std::pair<cplx, cplx>> pairs;
    for (const EllValue& e : d.values) {
      if (!e.determined) continue;
      const auto f = tensor_vectors(ctx, e.tensor);
      const KernelResult k = kernel_oracle(f[0], f[1], f[2]);
      const bool dz = std::abs(e.value) < 1e-9 * d.scale;
      const bool kz = std::abs(k.value) < 1e-9 * std::max(1.0, k.abs_mass);
      o.require(dz == kz, "zero pattern at " + e.tensor.to_string());
      if (!dz) pairs.push_back({e.value, k.value});
    }
    o.require(pairs.size() >= 3, "fewer than 3 nonzero tensors");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j, ++compared) {
        const cplx rd = pairs[i].first / pairs[j].first;
        const cplx rk = pairs[i].second / pairs[j].second;
        o.require(std::abs(rd - rk) <= 1e-6 * std::max(1.0, std::abs(rd)), "pairwise ratio");
      }
    }
  }
  const auto s = fixtures::unramified_pair_triple(3, 0, false);
  const KernelResult z = kernel_oracle(new_vector(s[0], 10), new_vector(s[1], 10), new_vector(s[2], 10));
  o.require(std::abs(z.value) <= 1e-9 * std::max(1.0, z.abs_mass), "obstruction zero");
  o.detail << compared << " pairwise ratios agree; kernel on the new-vector tensor "
           << std::abs(z.value) << " (mass " << z.abs_mass << ")";
}

void reducible(Outcome& o) {
  const int p = 3;
  for (cplx eta3 : {cplx(1.0), cplx(-1.0)}) {
    const TheoremReport r =
        verify_theorem("reducible-spherical", {spherical(p, 1.0), spherical(p, 1.0), spherical(p, eta3)});
    o.require(holds_all(r), "three spherical, eta3 = " + std::to_string(eta3.real()));
  }
  const std::vector<RepSpec> v3s = {
      RepSpec::principal(un(p, {1.3, 0.2}), un(p, 1.0 / cplx(1.3, 0.2))),
      RepSpec::special_quotient(un(p, 1.0)), RepSpec::special_quotient(un(p, -1.0))};
  for (const RepSpec& v3 : v3s) {
    const TheoremReport r =
        verify_theorem("reducible-two-spherical", {spherical(p, 1.0), spherical(p, 1.0), v3});
    o.require(holds_all(r), "two spherical, " + v3.describe());
  }
  const int q = 5;
  const UnitChar chi = UnitChar::from_exponents(q, 1, {1});
  const MultChar c1(1.0, chi), c2(1.0, chi * chi);
  const TheoremReport a = verify_theorem(
      "reducible-one-spherical",
      {spherical(q, 1.0), RepSpec::principal(un(q, 1.0), c1), RepSpec::principal(c2, c1)});
  o.require(a.subcase == "a" && holds_all(a), "one spherical at p=5");
  o.detail << "three spherical with eta3 = +-1; two spherical with n3 = 0 and n3 = 1 (St, (-1)St); "
           << "one spherical with V2 ramified principal";
}

void epsilon(Outcome& o) {
  const auto family = fixtures::epsilon_family(11, 24);
  int minus = 0;
  for (const auto& c : family) {
    const int s = epsilon_obstruction(c.specs).sign;
    o.require(s == c.expected, c.label);
    minus += s == -1 ? 1 : 0;
  }
  o.detail << family.size() << " minimal triples, " << minus << " with epsilon = -1";
}

void tree(Outcome& o) {
  i64 checked = 0;
  for (int p : {2, 3}) {
    for (int n = 0; n <= 2; ++n) {
      const OrientedPath path = standard_path(p, n);
      for (const Mat2& k : enumerate_cosets(p, n + 1)) {
        ++checked;
        const bool fixes = act(GL2Elem::from_mat2(p, 8, k), path) == path;
        if (fixes != mat_in_iwahori(k, p, n)) {
          o.require(false, "stabilizer at p=" + std::to_string(p) + " n=" + std::to_string(n));
        }
      }
    }
  }
  const int p = 2, N = 8;
  auto shift = [&](int r, int n) { return act(GL2Elem::gamma(p, N, r), standard_path(p, n)); };
  o.require(covering_ok(standard_path(p, 1), shift(1, 3), standard_path(p, 4)).ok, "concatenated picture");
  o.require(covering_ok(standard_path(p, 5), standard_path(p, 5), standard_path(p, 2)).ok, "nested picture");
  // n1 = 2, n2 = 1 shifted by n3 - n2, n3 = 3.
  o.require(covering_ok(standard_path(p, 2), shift(2, 1), standard_path(p, 3)).ok, "remark picture");
  o.require(!covering_ok(standard_path(p, 1), shift(2, 1), shift(4, 1)).ok, "disjoint edges");
  o.detail << checked << " stabilizer checks; both tree pictures and the main configuration covered";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Check>> criteria = {
      {"lemma oracle suite", lemma_suite},
      {"structural identities", structural},
      {"H equals the tensor of star vectors", lambda12},
      {"unramified pair test vectors", unramified_pair},
      {"minimal triple test vectors", minimal_triples},
      {"equal-conductor stub value", equal_conductor},
      {"Kirillov pairing", kirillov},
      {"phi certification", phi_certification},
      {"kernel and descent concordance", concordance},
      {"reducible induced factors", reducible},
      {"epsilon predicate", epsilon},
      {"tree dictionary", tree},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += o.pass ? 0 : 1;
    std::printf("%s %2zu %-38s %6.1fs  %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), secs, o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed;
}
