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
#include "tvec/suites.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tvec {

bool LemmaSuiteResult::ok() const {
  return !cases.empty() &&
         std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.ok; });
}

std::vector<RepSpec> lemma_representatives(int p) {
  auto un = [&](double re, double im) { return MultChar::unramified(p, {re, im}); };
  const int m = p == 2 ? 2 : 1;
  const UnitChar u = UnitChar::from_exponents(p, m, {1});
  const MultChar r1(cplx(0.7, 0.2), u);
  const MultChar r2(cplx(1.2, -0.5), u);
  return {
      RepSpec::principal(un(1.3, 0.4), un(0.5, -0.2)),
      RepSpec::principal(un(1.1, 0.3), r1),
      RepSpec::principal(r1, un(0.9, 0.1)),
      RepSpec::principal(r1, r2),
      RepSpec::special_quotient(un(0.8, 0.6)),
      RepSpec::special_subspace(un(0.8, 0.6)),
  };
}

namespace {

// Same principal series with alpha multiplied by f: alpha^-1 is
// mu(p) |p|^(1/2), so mu(p) is divided by f. Special kinds are left alone.
RepSpec with_alpha_scaled(const RepSpec& spec, cplx f) {
  if (f == cplx(1.0, 0.0) || spec.kind() != RepKind::kPrincipal) return spec;
  const BorelChar& chi = spec.chi();
  return RepSpec::principal(MultChar(chi.mu.unramified_value() / f, chi.mu.unit_part()),
                            chi.mu_prime);
}

LemmaCaseResult sweep(const RepSpec& spec, int r, GammaVariant v,
                      const LemmaSuiteOptions& opt) {
  const InducedVector vec = gamma_vector(spec, r, v, opt.cap);
  const RepSpec closed = with_alpha_scaled(spec, opt.alpha_fault);
  LemmaCaseResult res;
  res.lemma = to_string(lemma_case(spec));
  res.representation = spec.describe();
  res.variant = to_string(v);
  res.r = r;
  res.level = vec.level();
  double err = 0.0;
  double scale = 0.0;
  auto check = [&](const Mat2& k) {
    ++res.checked;
    const cplx expect = closed_form_gamma(closed, r, k, res.level, v);
    err = std::max(err, std::abs(vec.eval(k) - expect));
    scale = std::max(scale, std::abs(expect));
  };
  const int p = spec.p();
  try {
    if (gl2_order(p, res.level) <= opt.budget) {
      res.exhaustive = true;
      for_each_coset(p, res.level, opt.budget, check);
    } else {
      for_each_class(p, res.level, opt.budget, check);
    }
  } catch (const BudgetError& e) {
    throw BudgetError(std::string(e.what()) + " at level " + std::to_string(res.level) + " (" +
                      res.lemma + ", r = " + std::to_string(r) + ")");
  }
  res.max_rel_error = err / std::max(scale, 1e-300);
  res.ok = res.max_rel_error <= opt.tolerance;
  return res;
}

std::string mat_str(const Mat2& k) {
  std::ostringstream os;
  os << "(" << k.a << ", " << k.b << "; " << k.c << ", " << k.d << ")";
  return os.str();
}

StructuralCheck support_check(int p, int max_sum, i64 budget) {
  StructuralCheck out{"support-identity", 0, true, ""};
  for (int r = 0; r <= max_sum; ++r) {
    for (int s = 1; r + s <= max_sum; ++s) {
      const SupportCheck c = support_identity_check(p, r, s, budget);
      out.checked += c.checked;
      if (!c.ok && out.ok) {
        out.ok = false;
        out.first_failure = "r=" + std::to_string(r) + " s=" + std::to_string(s) + ": " +
                            c.first_failure;
      }
    }
  }
  return out;
}

// Coset representatives at level max_level; the deep factorization needs
// r + 1 <= val c < max_level, the shallow one val c <= r.
StructuralCheck factorization_check(int p, int max_sum, int max_level, i64 budget, bool deep) {
  StructuralCheck out{deep ? "factorization-deep" : "factorization-shallow", 0, true, ""};
  const int N = max_sum + max_level + 6;
  for_each_coset(p, max_level, budget, [&](const Mat2& m) {
    if (m.c == 0) return;
    const int vc = val_p(m.c, p);
    const GL2Elem k = GL2Elem::from_mat2(p, N, m);
    for (int r = 0; r <= max_sum; ++r) {
      if (deep ? vc < r + 1 : vc > r) continue;
      ++out.checked;
      const auto f = deep ? factor_deep(k, r) : factor_shallow(k, r);
      const bool good = is_upper_triangular(f[0]) &&
                        same_value(f[0] * f[1] * f[2], conjugate_by_gamma(k, r));
      if (!good && out.ok) {
        out.ok = false;
        out.first_failure = "r=" + std::to_string(r) + " k=" + mat_str(m);
      }
    }
  });
  return out;
}

StructuralCheck inclusion_check(int p, int max_level, i64 budget) {
  StructuralCheck out{"inclusion-lattice", 0, true, ""};
  auto fail = [&](const std::string& why) {
    if (out.ok) {
      out.ok = false;
      out.first_failure = why;
    }
  };
  const int N = max_level + 4;
  for (int L = 1; L <= max_level; ++L) {
    for_each_coset(p, L, budget, [&](const Mat2& m) {
      const GL2Elem k = GL2Elem::from_mat2(p, N, m);
      for (int n = 0; n <= L; ++n) {
        ++out.checked;
        const bool iw = is_member(k, {SubgroupTag::kIwahori, n});
        const bool i1 = is_member(k, {SubgroupTag::kI1, n});
        const bool pr = is_member(k, {SubgroupTag::kPrincipal, n});
        if (iw != mat_in_iwahori(m, p, n) || pr != mat_in_principal(m, p, n)) {
          fail("integer and field membership disagree at n=" + std::to_string(n) + " k=" +
               mat_str(m));
        }
        if ((pr && !i1) || (i1 && !iw)) {
          fail("Kprin_n < I1_n < I_n violated at n=" + std::to_string(n) + " k=" + mat_str(m));
        }
        if (n + 1 <= L) {
          const bool iw1 = is_member(k, {SubgroupTag::kIwahori, n + 1});
          const bool pr1 = is_member(k, {SubgroupTag::kPrincipal, n + 1});
          if ((iw1 && !iw) || (pr1 && !pr)) {
            fail("level n+1 not inside level n at n=" + std::to_string(n) + " k=" + mat_str(m));
          }
        }
      }
    });
  }
  // J_n = (1, b; p^n c, 1) is inside I1_n, and inside K exactly when the
  // determinant 1 - p^n b c is a unit.
  for (int n = 0; n <= max_level; ++n) {
    const i64 q = ipow(p, n);
    for (i64 b = -p; b <= p; ++b) {
      for (i64 c = -p; c <= p; ++c) {
        if (1 - q * b * c == 0) continue;
        ++out.checked;
        const GL2Elem j = GL2Elem::from_ints(p, N, 1, b, q * c, 1);
        const bool unit_det = mod(1 - q * b * c, static_cast<i64>(p)) != 0;
        const bool in_j = is_member(j, {SubgroupTag::kJ, n});
        if (in_j != unit_det || (in_j && !is_member(j, {SubgroupTag::kI1, n}))) {
          fail("J_n membership wrong at n=" + std::to_string(n) + " b=" + std::to_string(b) +
               " c=" + std::to_string(c));
        }
      }
    }
  }
  return out;
}

}  // namespace

LemmaSuiteResult run_lemma_suite(int p, const LemmaSuiteOptions& opt) {
  LemmaSuiteResult out;
  out.p = p;
  for (const RepSpec& spec : lemma_representatives(p)) {
    for (GammaVariant v : {GammaVariant::kPlain, GammaVariant::kMinusAlpha,
                           GammaVariant::kMinusBeta, GammaVariant::kMinusAlphaInvNext}) {
      if (!variant_supported(lemma_case(spec), v)) continue;
      const bool diff = v == GammaVariant::kMinusAlpha || v == GammaVariant::kMinusBeta;
      for (int r = diff ? 1 : 0; r <= opt.max_r; ++r) {
        out.cases.push_back(sweep(spec, r, v, opt));
      }
    }
  }
  return out;
}

std::vector<StructuralCheck> run_structural_suite(int p, int max_sum, int max_level,
                                                  i64 budget) {
  return {support_check(p, max_sum, budget), factorization_check(p, max_sum, max_level, budget, true),
          factorization_check(p, max_sum, max_level, budget, false), inclusion_check(p, max_level, budget)};
}

}  // namespace tvec
