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

#include "tvec/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tvec/kernel_oracle.hpp"
#include "tvec/kirillov.hpp"

namespace tvec {

namespace {

constexpr double kNonzero = 1e-6;
constexpr double kZero = 1e-9;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

TheoremReport start(const std::string& id, const std::array<RepSpec, 3>& specs) {
  TheoremReport r;
  r.case_id = id;
  r.p = specs[0].p();
  for (const RepSpec& s : specs) r.representations.push_back(s.describe());
  r.conventions = {"vol(K) = 1", "vol(J_n) = p^n / |GL2(Z/p^n)|",
                   "phi normalized by its defining integral; only ratios and "
                   "vanishing are meaningful"};
  return r;
}

void check(TheoremReport& r, bool ok, const std::string& line) {
  r.checks.push_back(std::string(ok ? "ok: " : "FAILED: ") + line);
  r.checks_ok = r.checks_ok && ok;
}

void chain_checks(TheoremReport& r, const TrilinearContext& ctx, const TheoremOptions& opt) {
  const HypothesisCheck h = chain_hypotheses(ctx);
  check(r, h.ok(), h.detail);
  if (opt.verify_h) {
    const HCheck hc = verify_lambda12(ctx, opt.pair_budget);
    check(r, hc.ok(),
          "H = c (v1* (x) v2*) on " + std::to_string(hc.pairs) +
              (hc.exhaustive ? " coset pairs" : (hc.sampled ? " sampled class pairs" : " class pairs")) +
              ", max deviation " +
              fmt(std::max(hc.max_err_closed, hc.max_err_tensor)));
  }
}

Claim from_descent(const TrilinearContext& ctx, const DescentResult& d, std::size_t k,
                   bool expect_nonzero, const std::string& label) {
  const EllValue& e = d.values[k];
  Claim c;
  c.tensor = label.empty() ? e.tensor.to_string() : label;
  c.expect_nonzero = expect_nonzero;
  c.value = e.value;
  c.scale = d.scale;
  c.determined = e.determined;
  c.provenance = e.certified_zero ? "eigenspace" : "chain";
  c.certificate = e.certificate;
  if (!e.certified_zero) {
    std::ostringstream os;
    os << e.certificate << " (n = " << ctx.n << ", " << d.equations << " equations, "
       << d.unknowns << " unknowns, rank " << d.rank
       << (d.atkin_lehner_used ? ", Atkin-Lehner relation" : "") << ")";
    c.certificate = os.str();
  }
  return c;
}

bool kernel_defined(const RepSpec& s) {
  return s.kind() == RepKind::kPrincipal || s.kind() == RepKind::kSpecialSubspace;
}

Claim kernel_claim(const std::array<InducedVector, 3>& f, bool expect_nonzero,
                   const std::string& label) {
  const KernelResult k = kernel_oracle(f[0], f[1], f[2]);
  Claim c;
  c.tensor = label;
  c.expect_nonzero = expect_nonzero;
  c.value = k.value;
  c.scale = k.abs_mass;
  c.provenance = "kernel";
  c.certificate = "triple integral, " + std::to_string(k.cells) + " pieces";
  return c;
}

// Same-context kernel values for descent targets (all three principal).
void kernel_cross_check(TheoremReport& r, const TrilinearContext& ctx,
                        const DescentResult& d) {
  if (ctx.f1.spec.kind() != RepKind::kPrincipal && ctx.f1.kind != FactorKind::kSpherical) return;
  if (ctx.f2.spec.kind() != RepKind::kPrincipal && ctx.f2.kind != FactorKind::kSpherical) return;
  if (ctx.v3.kind() != RepKind::kPrincipal) return;
  std::vector<cplx> kv;
  int compared = 0;
  double mass = 0.0;
  for (const EllValue& e : d.values) {
    compared += e.determined ? 1 : 0;
    const auto f = tensor_vectors(ctx, e.tensor);
    const KernelResult k = kernel_oracle(f[0], f[1], f[2]);
    kv.push_back(k.value);
    mass = std::max(mass, k.abs_mass);
  }
  // Zero pattern and pairwise ratios.
  bool ok = true;
  double worst = 0.0;
  for (std::size_t i = 0; i < kv.size(); ++i) {
    if (!d.values[i].determined) continue;
    const bool dz = std::abs(d.values[i].value) <= kZero * std::max(d.scale, 1e-300);
    const bool kz = std::abs(kv[i]) <= kZero * mass;
    ok = ok && dz == kz;
    for (std::size_t j = 0; j < kv.size(); ++j) {
      if (dz || kz) continue;
      if (!d.values[j].determined) continue;
      const cplx dj = d.values[j].value;
      if (std::abs(dj) <= kZero * d.scale || std::abs(kv[j]) <= kZero * mass) continue;
      const cplx lhs = kv[i] / kv[j];
      const cplx rhs = d.values[i].value / dj;
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
  }
  ok = ok && worst <= 1e-6;
  check(r, ok, "kernel oracle agrees with the chain on " + std::to_string(compared) +
                   " tensors (zero pattern, worst ratio deviation " + fmt(worst) + ")");
}

void require_no_stub(const std::array<RepSpec, 3>& specs, const char* who) {
  for (const RepSpec& s : specs) {
    if (s.is_stub()) throw UnsupportedError(std::string(who) + ": supercuspidal factors are out of scope");
  }
}

}  // namespace

bool Claim::holds() const {
  if (!determined) return false;
  if (expect_nonzero) return std::abs(value) > kNonzero * scale;
  if (provenance == "eigenspace") return true;
  return std::abs(value) < kZero * scale;
}

bool TheoremReport::pass() const {
  if (!checks_ok || claims.empty()) return false;
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.holds(); });
}

TheoremReport verify_unramified_pair(const std::array<RepSpec, 3>& specs,
                                     const TheoremOptions& opt) {
  require_no_stub(specs, "unramified-pair");
  if (specs[0].conductor() != 0 || specs[1].conductor() != 0 ||
      specs[0].kind() != RepKind::kPrincipal || specs[1].kind() != RepKind::kPrincipal) {
    throw DomainError("unramified-pair: V1 and V2 must be unramified principal series");
  }
  const int n = specs[2].conductor();
  if (n < 1) throw DomainError("unramified-pair: V3 must be ramified");
  TheoremReport r = start("unramified-pair", specs);
  const ContextOptions co{false, false, opt.cap};
  const TrilinearContext ctx = make_context(specs[0], specs[1], specs[2], co);
  chain_checks(r, ctx, opt);
  const DescentResult d = descent_solve(ctx, {{0, 0, 0}, {n, 0, 0}, {0, n, 0}});
  r.claims.push_back(from_descent(ctx, d, 0, false, "v1 (x) v2 (x) v3"));
  r.claims.push_back(from_descent(ctx, d, 1, true, "g^n v1 (x) v2 (x) v3"));
  if (d.values[2].determined) {
    r.claims.push_back(from_descent(ctx, d, 2, true, "v1 (x) g^n v2 (x) v3"));
  } else {
    const TrilinearContext sw = make_context(specs[1], specs[0], specs[2], co);
    chain_checks(r, sw, opt);
    const DescentResult d2 = descent_solve(sw, {{n, 0, 0}});
    r.claims.push_back(from_descent(sw, d2, 0, true, "v1 (x) g^n v2 (x) v3"));
  }
  if (opt.cross_check_kernel) kernel_cross_check(r, ctx, d);
  return r;
}

TheoremReport verify_minimal_triple(const std::array<RepSpec, 3>& specs,
                                    const TheoremOptions& opt) {
  require_no_stub(specs, "minimal-triple");
  if (!minimal_triple_search(specs).already_minimal) {
    throw DomainError("minimal-triple: the triple is not minimal");
  }
  if (epsilon_obstruction(specs).sign != 1) {
    throw DomainError("minimal-triple: epsilon = -1, no test vector statement applies");
  }
  std::array<int, 3> perm{0, 1, 2};
  int found = -1;  // 0 for (a), 1 for (b)
  std::array<int, 3> use{};
  do {
    const int n1 = specs[perm[0]].conductor();
    const int n2 = specs[perm[1]].conductor();
    const int n3 = specs[perm[2]].conductor();
    if (n3 > n1 && n3 > n2) {
      found = 0;
      use = perm;
      break;
    }
    if (n1 == n2 && n1 >= n3 && n1 >= 1 && found < 0) {
      found = 1;
      use = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (found < 0) throw DomainError("minimal-triple: no ordering matches either case");
  const std::array<RepSpec, 3> s{specs[use[0]], specs[use[1]], specs[use[2]]};
  TheoremReport r = start("minimal-triple", s);
  const ContextOptions co{false, false, opt.cap};
  const int n1 = s[0].conductor(), n2 = s[1].conductor(), n3 = s[2].conductor();
  if (found == 0) {
    r.subcase = "a";
    const TrilinearContext ctx = make_context(s[0], s[1], s[2], co);
    chain_checks(r, ctx, opt);
    const DescentResult d = descent_solve(ctx, {{n3 - n1, 0, 0}});
    r.claims.push_back(from_descent(ctx, d, 0, true, "g^(n3-n1) v1 (x) v2 (x) v3"));
    if (opt.cross_check_kernel) kernel_cross_check(r, ctx, d);
    const TrilinearContext sw = make_context(s[1], s[0], s[2], co);
    chain_checks(r, sw, opt);
    const DescentResult d2 = descent_solve(sw, {{n3 - n2, 0, 0}});
    r.claims.push_back(from_descent(sw, d2, 0, true, "v1 (x) g^(n3-n2) v2 (x) v3"));
  } else {
    r.subcase = "b";
    const TrilinearContext ctx = make_context(s[0], s[1], s[2], co);
    chain_checks(r, ctx, opt);
    std::vector<Tensor> ts;
    for (int i = 0; i <= n1 - n3; ++i) ts.push_back({0, 0, i});
    const DescentResult d = descent_solve(ctx, ts);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      r.claims.push_back(from_descent(ctx, d, i, true, "v1 (x) v2 (x) g^" + std::to_string(i) + " v3"));
    }
    if (opt.cross_check_kernel) kernel_cross_check(r, ctx, d);
  }
  return r;
}

TheoremReport verify_equal_conductor_stubs(const std::array<RepSpec, 3>& specs,
                                           const TheoremOptions& opt) {
  if (!specs[1].is_stub() || !specs[2].is_stub()) {
    throw DomainError("equal-conductor-stubs: V2 and V3 must be stubs");
  }
  if (specs[1].conductor() != specs[2].conductor()) {
    throw UnsupportedError("equal-conductor-stubs: unequal stub conductors, only the "
                           "vanishing pattern is known there");
  }
  TheoremReport r = start("equal-conductor-stubs", specs);
  const EqualConductorResult e = ell_equal_conductor(specs[0], specs[1], specs[2], opt.cap);
  const double dev = std::abs(e.computed - e.closed_form);
  check(r, dev <= 1e-12 * std::max(1.0, std::abs(e.closed_form)),
        "K-integral over " + std::to_string(e.cosets) +
            " cosets equals alpha1^(n3-n1) vol(I_n3), deviation " + fmt(dev));
  Claim c;
  c.tensor = "g^(n3-n1) v1 (x) v2 (x) v3";
  c.value = e.computed;
  c.scale = e.volume * std::max(1.0, std::abs(e.closed_form) / e.volume);
  c.provenance = "closed form";
  c.certificate = "stub eigenproperty on I_n3, Phi(v2, v3) = 1";
  r.claims.push_back(c);
  return r;
}

TheoremReport verify_reducible(int count, const std::array<RepSpec, 3>& specs,
                               const TheoremOptions& opt) {
  require_no_stub(specs, "reducible");
  for (int i = 0; i < count; ++i) {
    if (specs[i].kind() != RepKind::kSpecialSubspace || !specs[i].eta().is_unramified()) {
      throw DomainError("reducible: the spherical factors must be special_subspace(eta) "
                        "with eta unramified");
    }
  }
  const int p = specs[0].p();
  const MultChar w = specs[0].central_character() * specs[1].central_character() *
                     specs[2].central_character();
  if (!w.approx_equal(MultChar::trivial(p))) {
    throw DomainError("reducible: central characters do not multiply to 1");
  }
  static const char* ids[] = {"", "reducible-one-spherical", "reducible-two-spherical",
                              "reducible-spherical"};
  if (count < 1 || count > 3) throw DomainError("reducible: 1 to 3 spherical factors");
  TheoremReport r = start(ids[count], specs);
  const int cap = opt.cap;
  auto vec_of = [&](const RepSpec& s, bool spherical) {
    if (spherical) return v_spherical(s, cap);
    if (s.is_special()) return new_vector(RepSpec::special_subspace(s.eta()), cap);
    return new_vector(s, cap);
  };
  if (count == 3) {
    r.claims.push_back(kernel_claim({vec_of(specs[0], true), vec_of(specs[1], true),
                                     vec_of(specs[2], true)},
                                    true, "v1^K (x) v2^K (x) v3^K"));
    return r;
  }
  const int n3 = specs[2].conductor();
  if (count == 2) {
    if (n3 == 0) {
      if (!kernel_defined(specs[2])) throw DomainError("reducible: V3 model not supported");
      r.claims.push_back(kernel_claim({vec_of(specs[0], true), vec_of(specs[1], true),
                                       vec_of(specs[2], false)},
                                      true, "v1^K (x) v2^K (x) v3"));
      return r;
    }
    const ContextOptions co{true, true, cap};
    const TrilinearContext ctx = make_context(specs[0], specs[1], specs[2], co);
    chain_checks(r, ctx, opt);
    const DescentResult d = descent_solve(ctx, {{n3, 0, 0}, {0, n3, 0}});
    r.claims.push_back(from_descent(ctx, d, 0, true, "g^n3 v1^K (x) v2^K (x) v3"));
    if (d.values[1].determined) {
      r.claims.push_back(from_descent(ctx, d, 1, true, "v1^K (x) g^n3 v2^K (x) v3"));
    } else {
      const TrilinearContext sw = make_context(specs[1], specs[0], specs[2], co);
      const DescentResult d2 = descent_solve(sw, {{n3, 0, 0}});
      r.claims.push_back(from_descent(sw, d2, 0, true, "v1^K (x) g^n3 v2^K (x) v3"));
    }
    return r;
  }
  // One spherical factor; V2 non-supercuspidal and minimal.
  const RepSpec& v2 = specs[1];
  if (!v2.is_minimal()) throw DomainError("reducible: V2 must be minimal");
  const int n2 = v2.conductor();
  if (n3 > n2) {
    r.subcase = "a";
    const TrilinearContext ctx = make_context(specs[0], v2, specs[2], {true, false, cap});
    chain_checks(r, ctx, opt);
    const DescentResult d = descent_solve(ctx, {{n3, 0, 0}});
    r.claims.push_back(from_descent(ctx, d, 0, true, "g^n3 v1^K (x) v2 (x) v3"));
    const TrilinearContext sw = make_context(v2, specs[0], specs[2], {false, true, cap});
    chain_checks(r, sw, opt);
    const DescentResult d2 = descent_solve(sw, {{n3 - n2, 0, 0}});
    r.claims.push_back(from_descent(sw, d2, 0, true, "v1^K (x) g^(n3-n2) v2 (x) v3"));
    return r;
  }
  if (!kernel_defined(specs[2]) && !specs[2].is_special()) {
    throw DomainError("reducible: V3 model not supported");
  }
  const InducedVector k1 = vec_of(specs[0], true);
  const InducedVector f2 = vec_of(v2, false);
  const InducedVector f3 = vec_of(specs[2], false);
  if (n3 == n2) {
    r.subcase = "b";
    for (int i = 0; i <= n3; ++i) {
      r.claims.push_back(kernel_claim({k1.gamma_translate(i), f2, f3}, true,
                                      "g^" + std::to_string(i) + " v1^K (x) v2 (x) v3"));
    }
    return r;
  }
  if (v2.is_special() && n3 == 0) {
    r.subcase = "c";
    r.claims.push_back(kernel_claim({k1, f2, f3.gamma_translate(1)}, true, "v1^K (x) v2 (x) g v3"));
    r.claims.push_back(kernel_claim({k1.gamma_translate(1), f2, f3}, true, "g v1^K (x) v2 (x) v3"));
    return r;
  }
  throw DomainError("reducible: conductors fit none of the three subcases");
}

const std::vector<std::string>& theorem_case_ids() {
  static const std::vector<std::string> ids{
      "unramified-pair",     "minimal-triple",          "equal-conductor-stubs",
      "reducible-spherical", "reducible-two-spherical", "reducible-one-spherical"};
  return ids;
}

TheoremReport verify_theorem(const std::string& id, const std::array<RepSpec, 3>& specs,
                             const TheoremOptions& opt) {
  if (id == "unramified-pair") return verify_unramified_pair(specs, opt);
  if (id == "minimal-triple") return verify_minimal_triple(specs, opt);
  if (id == "equal-conductor-stubs") return verify_equal_conductor_stubs(specs, opt);
  if (id == "reducible-spherical") return verify_reducible(3, specs, opt);
  if (id == "reducible-two-spherical") return verify_reducible(2, specs, opt);
  if (id == "reducible-one-spherical") return verify_reducible(1, specs, opt);
  throw DomainError("verify_theorem: unknown case id '" + id + "'");
}

}  // namespace tvec
