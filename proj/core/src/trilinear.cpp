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

#include "tvec/trilinear.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

namespace tvec {

namespace {

cplx at_minus_one(const MultChar& chi) {
  const int c = std::max(1, chi.conductor());
  return chi.eval_parts(0, ipow(chi.p(), c) - 1);
}

cplx at_p(const MultChar& chi) { return chi.eval_parts(1, 1); }

InducedVector combine(const InducedVector& base,
                      const std::vector<std::pair<int, cplx>>& terms) {
  int level = 0;
  std::vector<InducedVector> parts;
  for (const auto& [a, c] : terms) {
    parts.push_back(base.gamma_translate(a) * c);
    level = std::max(level, parts.back().level());
  }
  InducedVector sum = parts.front().at_level(level);
  for (std::size_t i = 1; i < parts.size(); ++i) sum = sum + parts[i];
  return sum;
}

Factor make_factor(const RepSpec& spec, int position, bool spherical, int cap) {
  const int p = spec.p();
  if (spec.is_stub()) {
    throw UnsupportedError("trilinear chain: supercuspidal factors are not modeled");
  }
  if (spherical) {
    if (spec.kind() != RepKind::kSpecialSubspace || !spec.eta().is_unramified()) {
      throw DomainError("spherical factor: expects special_subspace(eta) with eta unramified");
    }
    Factor f{spec, FactorKind::kSpherical, spec.chi(), 0, v_spherical(spec, cap), {}, 1.0};
    return f;
  }
  if (spec.is_special()) {
    if (!spec.eta().is_unramified()) {
      throw DomainError("trilinear chain: special factor with ramified eta is not minimal");
    }
    const RepSpec q = RepSpec::special_quotient(spec.eta());
    InducedVector base = position == 1 ? v_iwahori(q, cap) : v_k_minus_i(q, cap);
    return Factor{q, FactorKind::kSpecial, q.chi(), 1, std::move(base), {}, 1.0};
  }
  RepSpec model = spec;
  const int n = spec.conductor();
  if (n == 0) {
    return Factor{model, FactorKind::kUnramified, model.chi(), 0,
                  new_vector(model, cap), {}, 1.0};
  }
  auto good = [&](const RepSpec& s) {
    return position == 1 ? s.chi().mu.is_unramified() : s.chi().mu_prime.is_unramified();
  };
  if (!good(model)) model = RepSpec::principal(spec.chi().mu_prime, spec.chi().mu);
  if (!good(model)) {
    throw DomainError("trilinear chain: ramified principal factor must have an "
                      "unramified character");
  }
  (void)p;
  return Factor{model, FactorKind::kRamified, model.chi(), n, new_vector(model, cap), {}, 1.0};
}

}  // namespace

const char* to_string(FactorKind k) {
  switch (k) {
    case FactorKind::kUnramified: return "unramified";
    case FactorKind::kSpecial: return "special";
    case FactorKind::kRamified: return "ramified";
    case FactorKind::kSpherical: return "spherical";
  }
  return "?";
}

bool phi_on_boundary(const BorelChar& chi1, const BorelChar& chi2, const BorelChar& chi3) {
  const int p = chi3.p();
  const MultChar xi = (chi1.mu * chi2.mu_prime * chi3.mu_prime).inverse() *
                      MultChar::abs_power(p, -0.5);
  const MultChar zeta = chi3.mu_prime * chi3.mu.inverse() * xi;
  const bool at0 = xi.is_unramified() &&
                   std::abs(1.0 - xi.unramified_value() / static_cast<double>(p)) < 1e-9;
  const bool atinf = zeta.is_unramified() && std::abs(1.0 - 1.0 / zeta.unramified_value()) < 1e-9;
  return at0 || atinf;
}

TrilinearContext make_context(const RepSpec& v1, const RepSpec& v2,
                              const RepSpec& v3_in, const ContextOptions& opt) {
  const int p = v1.p();
  RepSpec v3 = v3_in;
  if (v2.p() != p || v3.p() != p) throw DomainError("make_context: p mismatch");
  if (v3.is_stub()) throw UnsupportedError("make_context: V3 must be an induced model");
  TrilinearContext ctx{p,
                       make_factor(v1, 1, opt.spherical1, opt.cap),
                       make_factor(v2, 2, opt.spherical2, opt.cap),
                       v3,
                       new_vector(v3, opt.cap),
                       v3.conductor(),
                       0,
                       opt.cap,
                       1.0};
  const MultChar w = ctx.f1.chi.central() * ctx.f2.chi.central() * v3.central_character();
  if (!w.approx_equal(MultChar::trivial(p))) {
    throw DomainError("make_context: omega1 omega2 omega3 != 1");
  }
  if (v3.is_special() && phi_on_boundary(ctx.f1.chi, ctx.f2.chi, v3.chi())) {
    const RepSpec other = v3.kind() == RepKind::kSpecialQuotient
                              ? RepSpec::special_subspace(v3.eta())
                              : RepSpec::special_quotient(v3.eta());
    if (!phi_on_boundary(ctx.f1.chi, ctx.f2.chi, other.chi())) {
      ctx.v3 = other;
      ctx.v3_vector = new_vector(other, opt.cap);
    }
  }
  if (ctx.v3.kind() == RepKind::kSpecialSubspace) {
    const MultChar xi = (ctx.f1.chi.mu * ctx.f2.chi.mu_prime * ctx.v3.chi().mu_prime).inverse() *
                        MultChar::abs_power(p, -0.5);
    if (xi.approx_equal(MultChar::trivial(p))) ctx.phi_order = 1;
  }
  ctx.n = std::max({ctx.f1.n, ctx.f2.n, ctx.n3});
  const int n = ctx.n;
  Factor& a = ctx.f1;
  Factor& b = ctx.f2;
  if (a.unramified_like()) {
    a.star = {{n, 1.0}, {n - 1, -a.chi.beta()}};
    a.lambda = 1.0 / (1.0 - a.chi.beta() / a.chi.alpha());
  } else {
    a.star = {{n - a.n, 1.0}};
  }
  if (b.unramified_like()) {
    b.star = {{0, 1.0}, {1, -1.0 / b.chi.alpha()}};
    b.lambda = 1.0 / (1.0 - b.chi.beta() / b.chi.alpha());
  } else {
    b.star = {{0, 1.0}};
  }
  ctx.constant = a.lambda * b.lambda * at_minus_one(b.chi.mu) * ipow(a.chi.alpha(), a.n - n);
  return ctx;
}

InducedVector star_vector(const TrilinearContext& ctx, int position) {
  if (ctx.n < 1) throw DomainError("star_vector: the chain needs n >= 1");
  const Factor& f = position == 1 ? ctx.f1 : ctx.f2;
  return combine(f.base, f.star);
}

namespace {

// sum_{v >= s} v r^v
cplx weighted_tail(cplx r, int s) {
  return ipow(r, s) * (static_cast<double>(s) - static_cast<double>(s - 1) * r) /
         ((1.0 - r) * (1.0 - r));
}

}  // namespace

PhiValue phi(const BorelChar& chi1, const BorelChar& chi2, const InducedVector& v,
             int order) {
  if (order != 0 && order != 1) throw DomainError("phi: order must be 0 or 1");
  const int p = v.p();
  const int s = v.level();
  const i64 q = ipow(p, s);
  const auto& vals = v.values();
  const MultChar& mu3 = v.chi().mu;
  const MultChar& mu3p = v.chi().mu_prime;
  const MultChar xi = (chi1.mu * chi2.mu_prime * mu3p).inverse() * MultChar::abs_power(p, -0.5);
  const MultChar zeta = mu3p * mu3.inverse() * xi;
  const cplx sgn = at_minus_one(mu3);
  const double pd = static_cast<double>(p);
  const double lp = std::log(pd);
  // d/ds of |x|^s on the shell of valuation v.
  auto weight = [&](int sh) { return order == 0 ? 1.0 : -static_cast<double>(sh) * lp; };
  PhiValue out{{0.0, 0.0}, 0.0};
  auto add = [&](cplx c) {
    out.value += c;
    out.abs_mass += std::abs(c);
  };
  // x = p^v u, v >= 0: v(w~ n(x)) = mu3(-1) A[x].
  for (int sh = 0; sh < s; ++sh) {
    const int M = std::max({s - sh, xi.conductor(), 1});
    const i64 Q = ipow(p, M);
    const double cell = std::pow(pd, -sh - M);
    for (i64 u = 1; u < Q; ++u) {
      if (u % p == 0) continue;
      const i64 x = mulmod(ipow(p, sh) % q, u % q, q);
      add(sgn * vals[x] * xi.eval_parts(sh, u) * cell * weight(sh));
    }
  }
  if (xi.is_unramified()) {
    const cplx r0 = xi.unramified_value() / pd;
    if (std::abs(1.0 - r0) < 1e-9) throw DomainError("phi: exponent on the boundary at 0");
    const cplx tail = order == 0 ? ipow(r0, s) / (1.0 - r0) : -lp * weighted_tail(r0, s);
    add(sgn * vals[0] * (1.0 - 1.0 / pd) * tail);
  }
  // v < 0: v(w~ n(x)) = mu3(-1) (mu3^-1 mu3')(x) |x|^-1 B[1/x].
  for (int sh = -1; sh > -s; --sh) {
    const int M = std::max({s + sh, zeta.conductor(), 1});
    const i64 Q = ipow(p, M);
    const double cell = std::pow(pd, -M);  // p^v from |x|^-1 times p^(-v-M)
    for (i64 u = 1; u < Q; ++u) {
      if (u % p == 0) continue;
      const i64 y = mulmod(ipow(p, -sh), inv_mod(u % q, q), q);
      add(sgn * vals[q + y / p] * zeta.eval_parts(sh, u) * cell * weight(sh));
    }
  }
  if (zeta.is_unramified()) {
    const cplx rho = 1.0 / zeta.unramified_value();
    if (std::abs(1.0 - rho) < 1e-9) throw DomainError("phi: exponent on the boundary at infinity");
    const cplx tail = order == 0 ? ipow(rho, s) / (1.0 - rho) : lp * weighted_tail(rho, s);
    add(sgn * vals[q] * (1.0 - 1.0 / pd) * tail);
  }
  return out;
}

PhiValue phi(const TrilinearContext& ctx, const InducedVector& v) {
  return phi(ctx.f1.chi, ctx.f2.chi, v, ctx.phi_order);
}

PhiOracle phi_linear_oracle(const BorelChar& chi1, const BorelChar& chi2,
                            const RepSpec& v3, int level,
                            const std::vector<InducedVector>& probes, int cap) {
  const int p = v3.p();
  const BorelChar chi3 = v3.chi();
  const ModelTag tag = model_tag(v3);
  const MultChar ta = chi1.mu * chi2.mu_prime;  // (chi1 chi2')(diag(a, 1))
  const MultChar td = chi1.mu_prime * chi2.mu;  // (chi1 chi2')(diag(1, d))
  const InducedVector proto(chi3, tag, level, cap);
  const Eigen::Index S = proto.slot_count();
  std::vector<Eigen::RowVectorXcd> rows;
  auto unit_vec = [&](int lev, i64 k) {
    InducedVector e(chi3, tag, lev, cap);
    e.values()[k] = 1.0;
    return e;
  };
  auto row_of = [&](const InducedVector& f) {
    if (f.level() > level) throw DomainError("phi_linear_oracle: probe above the oracle level");
    const InducedVector g = f.at_level(level);
    Eigen::RowVectorXcd r(S);
    for (Eigen::Index k = 0; k < S; ++k) r(k) = g.values()[k];
    return r;
  };
  const UnitGroup& ug = unit_group(p, level);
  for (i64 g : ug.generators) {
    for (i64 k = 0; k < S; ++k) {
      const InducedVector e = unit_vec(level, k);
      rows.push_back(row_of(e.act(Mat2{g, 0, 0, 1})) - row_of(e) / ta.eval_parts(0, g));
      rows.push_back(row_of(e.act(Mat2{1, 0, 0, g})) - row_of(e) / td.eval_parts(0, g));
    }
  }
  const cplx up = ta.eval_parts(1, 1);  // (chi1 chi2')(diag(p, 1))
  const InducedVector lower(chi3, tag, level - 1, cap);
  for (i64 k = 0; k < lower.slot_count(); ++k) {
    const InducedVector e = unit_vec(level - 1, k);
    rows.push_back(row_of(e.gamma_translate(1)) - row_of(e) * up);
    rows.push_back(row_of(e.gamma_translate(-1)) - row_of(e) / up);
  }
  if (tag == ModelTag::kSpecialQuotient) rows.push_back(row_of(eta_det_vector(v3, level, cap)));
  Eigen::MatrixXcd A(static_cast<Eigen::Index>(rows.size()), S);
  for (std::size_t i = 0; i < rows.size(); ++i) A.row(static_cast<Eigen::Index>(i)) = rows[i];
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-9 * std::max(top, 1.0)) ++rank;
  }
  PhiOracle out;
  out.dimension = static_cast<int>(S) - rank;
  if (out.dimension != 1) return out;
  const Eigen::VectorXcd ell = svd.matrixV().col(S - 1);
  cplx scale(0.0, 0.0);
  for (const InducedVector& v : probes) {
    out.values.push_back((row_of(v) * ell)(0));
  }
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const cplx ref = phi(chi1, chi2, probes[i]).value;
    if (std::abs(out.values[i]) > 1e-9 && std::abs(ref) > 1e-12) {
      scale = ref / out.values[i];
      break;
    }
  }
  for (cplx& v : out.values) v *= scale;
  return out;
}

HCheck verify_lambda12(const TrilinearContext& ctx, i64 budget) {
  const int p = ctx.p;
  const int n = ctx.n;
  if (n < 1) throw DomainError("verify_lambda12: the chain needs n >= 1");
  const i64 q = ipow(p, n);
  HCheck out;
  out.n = n;
  std::vector<Mat2> reps;
  const i64 order = gl2_order(p, n);
  out.exhaustive = order <= budget / order;
  if (out.exhaustive) {
    reps = enumerate_cosets(p, n, order);
  } else {
    for_each_class(p, n, budget, [&](const Mat2& k) { reps.push_back(k); });
  }
  const std::size_t total = reps.size();
  std::size_t stride = 1;
  if (!out.exhaustive && static_cast<double>(total) * static_cast<double>(total) >
                             static_cast<double>(budget)) {
    stride = (total * total + static_cast<std::size_t>(budget) - 1) / static_cast<std::size_t>(budget);
    out.sampled = true;
  }
  const InducedVector v1s = star_vector(ctx, 1);
  const InducedVector v2s = star_vector(ctx, 2);
  const BorelChar& c1 = ctx.f1.chi;
  const BorelChar& c2 = ctx.f2.chi;
  const MultChar w1 = c1.central();
  const MultChar w2 = c2.central();
  struct Row {
    Mat2 k;
    cplx v1, v2;
  };
  std::vector<Row> rows;
  rows.reserve(reps.size());
  for (const Mat2& k : reps) rows.push_back({k, v1s.eval(k), v2s.eval(k)});
  auto ev = [&](const MultChar& chi, i64 u) { return chi.eval_parts(0, mod(u, q)); };
  for (const Row& r1 : rows) {
    const Mat2& k1 = r1.k;
    for (std::size_t j2 = 0; j2 < rows.size(); j2 += stride) {
      const Row& r2 = rows[j2];
      const Mat2& k2 = r2.k;
      ++out.pairs;
      // k0 = (1, b0; 0, 1) mod p^n with k1 k0^-1 and k2 k0^-1 w~ upper triangular.
      cplx h(0.0, 0.0);
      int hits = 0;
      if (mod(k1.c, q) == 0) {
        for (i64 b0 = 0; b0 < q; ++b0) {
          if (mod(k2.d - mulmod(mod(k2.c, q), b0, q), q) != 0) continue;
          ++hits;
          const i64 a1 = k1.a;
          const i64 d1 = k1.d - mulmod(mod(k1.c, q), b0, q);
          const i64 a2 = k2.b - mulmod(mod(k2.a, q), b0, q);
          const i64 d2 = k2.c;
          h = ev(c1.mu, a1) * ev(c1.mu_prime, d1) * ev(c2.mu, a2) * ev(c2.mu_prime, d2);
        }
      }
      if (hits > 1) throw DomainError("verify_lambda12: k0 not unique");
      cplx closed(0.0, 0.0);
      if (mod(k1.c, q) == 0 && mod(k2.c, p) != 0) {
        const i64 det2 = mod(static_cast<i64>(k2.det() % q), q);
        const i64 x = mulmod(mod(-det2, q), inv_mod(mod(k2.c, q), q), q);
        closed = ev(w1, k1.d) * ev(w2, x);
      }
      if (hits > 0) ++out.support;
      const cplx tensor = ctx.constant * r1.v1 * r2.v2;
      out.max_err_closed = std::max(out.max_err_closed, std::abs(h - closed));
      out.max_err_tensor = std::max(out.max_err_tensor, std::abs(h - tensor));
    }
  }
  return out;
}

PhiValue psi_on_H(const TrilinearContext& ctx, int i) {
  if (ctx.n < 1) throw DomainError("psi_on_H: the chain needs n >= 1");
  if (i < 0 || i > ctx.n - ctx.n3) throw DomainError("psi_on_H: i outside [0, n - n3]");
  const double vol = static_cast<double>(ipow(ctx.p, ctx.n)) /
                     static_cast<double>(gl2_order(ctx.p, ctx.n));
  PhiValue v = phi(ctx, ctx.v3_vector.gamma_translate(i));
  v.value *= vol;
  v.abs_mass *= vol;
  return v;
}

std::string Tensor::to_string() const {
  std::ostringstream os;
  os << "g^" << a << " v1 (x) g^" << b << " v2 (x) ";
  if (!(k == Mat2{})) os << "(" << k.a << "," << k.b << ";" << k.c << "," << k.d << ") ";
  os << "g^" << c << " v3";
  return os.str();
}

std::array<InducedVector, 3> tensor_vectors(const TrilinearContext& ctx, const Tensor& t) {
  InducedVector third = ctx.v3_vector.gamma_translate(t.c);
  if (!(t.k == Mat2{})) third = third.act(t.k);
  return {ctx.f1.base.gamma_translate(t.a), ctx.f2.base.gamma_translate(t.b), third};
}

namespace {

using Key = std::tuple<int, int, int>;
using Form = std::map<int, cplx>;

class Descent {
 public:
  explicit Descent(const TrilinearContext& ctx) : ctx_(ctx) {}

  int m_of(int a, int b) const { return std::max(ctx_.f1.n + a, ctx_.f2.n + b); }

  // Zero certificate for the functional l(gamma^a v1 (x) gamma^b v2 (x) .).
  bool certified_zero(int m, std::string* cert) {
    if (m >= ctx_.n3) return false;
    auto it = dims_.find(m);
    if (it == dims_.end()) {
      it = dims_.emplace(m, eigenspace_dim(ctx_.v3, m, ctx_.v3.central_character(),
                                           EigenCharSide::kD, ctx_.cap)).first;
    }
    if (it->second != 0) {
      throw DomainError("descent: eigenspace below the conductor is not zero");
    }
    if (cert) {
      std::ostringstream os;
      os << "dim V3^(I_" << m << ", omega3) = 0";
      *cert = os.str();
    }
    return true;
  }

  int unknown(int a, int b, int j) {
    const Key k{a, b, j};
    auto it = index_.find(k);
    if (it != index_.end()) return it->second;
    const int id = static_cast<int>(keys_.size());
    index_.emplace(k, id);
    keys_.push_back(k);
    return id;
  }

  // l(gamma^a v1 (x) gamma^b v2 (x) u) as a linear form in the unknowns.
  Form expand_vector(int a, int b, const InducedVector& u, std::string* cert) {
    const int shift = std::min(a, b);
    a -= shift;
    b -= shift;
    const InducedVector w = shift == 0 ? u : u.gamma_translate(-shift);
    const int m = m_of(a, b);
    Form f;
    if (certified_zero(m, cert)) return f;
    std::vector<InducedVector> basis;
    for (int j = 0; j <= m - ctx_.n3; ++j) basis.push_back(ctx_.v3_vector.gamma_translate(j));
    const bool quotient = ctx_.v3.kind() == RepKind::kSpecialQuotient;
    if (quotient) basis.push_back(eta_det_vector(ctx_.v3, 1, ctx_.cap));
    const std::vector<cplx> coef = projection_coefficients(w, basis);
    for (int j = 0; j <= m - ctx_.n3; ++j) {
      if (std::abs(coef[j]) > 1e-13) f[unknown(a, b, j)] += coef[j];
    }
    return f;
  }

  Form expand(int a, int b, int c, std::string* cert) {
    const int shift = std::min(a, b);
    a -= shift;
    b -= shift;
    c -= shift;
    const int m = m_of(a, b);
    if (certified_zero(m, cert)) return {};
    if (c >= 0 && c <= m - ctx_.n3) return {{unknown(a, b, c), 1.0}};
    return expand_vector(a, b, ctx_.v3_vector.gamma_translate(c), cert);
  }

  int size() const { return static_cast<int>(keys_.size()); }

 private:
  const TrilinearContext& ctx_;
  std::map<int, int> dims_;
  std::map<Key, int> index_;
  std::vector<Key> keys_;
};

void accumulate(Form& into, const Form& f, cplx s) {
  for (const auto& [k, v] : f) into[k] += s * v;
}

}  // namespace

DescentResult descent_solve(const TrilinearContext& ctx,
                            const std::vector<Tensor>& targets) {
  if (ctx.n < 1) throw DomainError("descent_solve: the chain needs n >= 1");
  Descent d(ctx);
  DescentResult out;
  std::vector<Form> eqs;
  std::vector<cplx> rhs;
  for (int i = 0; i <= ctx.n - ctx.n3; ++i) {
    const PhiValue ph = psi_on_H(ctx, i);
    const cplx k = ph.value / ctx.constant;
    out.chain.push_back(k);
    out.scale = std::max(out.scale, ph.abs_mass / std::abs(ctx.constant));
    Form f;
    for (const auto& [a, ca] : ctx.f1.star) {
      for (const auto& [b, cb] : ctx.f2.star) accumulate(f, d.expand(a, b, i, nullptr), ca * cb);
    }
    eqs.push_back(std::move(f));
    rhs.push_back(k);
  }
  if (ctx.f1.n == 0 && ctx.f2.n == 0) {
    // l(v1 (x) gamma v2 (x) v3) = omega1(p) l(gamma v1 (x) v2 (x) w v3), w = (0, 1; p, 0).
    Form f = d.expand(0, 1, 0, nullptr);
    const cplx w1p = at_p(ctx.f1.chi.central());
    accumulate(f, d.expand_vector(1, 0, ctx.v3_vector.act(Mat2{0, 1, ctx.p, 0}), nullptr), -w1p);
    if (!f.empty()) {
      eqs.push_back(std::move(f));
      rhs.push_back(0.0);
      out.atkin_lehner_used = true;
    }
  }
  struct Target {
    Form form;
    bool zero;
    std::string cert;
  };
  std::vector<Target> tforms;
  for (const Tensor& t : targets) {
    Target tg{{}, false, {}};
    if (t.k == Mat2{}) {
      tg.form = d.expand(t.a, t.b, t.c, &tg.cert);
    } else {
      tg.form = d.expand_vector(t.a, t.b, tensor_vectors(ctx, t)[2], &tg.cert);
    }
    tg.zero = tg.form.empty() && !tg.cert.empty();
    tforms.push_back(std::move(tg));
  }
  const Eigen::Index nu = d.size();
  const Eigen::Index ne = static_cast<Eigen::Index>(eqs.size());
  out.unknowns = static_cast<int>(nu);
  out.equations = static_cast<int>(ne);
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(ne, nu);
  Eigen::VectorXcd b(ne);
  for (Eigen::Index i = 0; i < ne; ++i) {
    for (const auto& [k, v] : eqs[i]) A(i, k) = v;
    b(i) = rhs[i];
  }
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(nu);
  Eigen::MatrixXcd null;
  if (nu > 0) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double top = sv.size() > 0 ? sv(0) : 0.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv(i) > 1e-10 * std::max(top, 1e-300)) ++rank;
    }
    out.rank = rank;
    x = A.completeOrthogonalDecomposition().solve(b);
    null = svd.matrixV().rightCols(nu - rank);
    out.residual = (A * x - b).norm();
  }
  for (std::size_t t = 0; t < targets.size(); ++t) {
    EllValue ev;
    ev.tensor = targets[t];
    if (tforms[t].zero) {
      ev.value = 0.0;
      ev.determined = true;
      ev.certified_zero = true;
      ev.certificate = tforms[t].cert;
    } else {
      Eigen::RowVectorXcd r = Eigen::RowVectorXcd::Zero(nu);
      for (const auto& [k, v] : tforms[t].form) r(k) = v;
      ev.value = (r * x)(0);
      const double leak = null.cols() > 0 ? (r * null).norm() : 0.0;
      ev.determined = leak <= 1e-8 * std::max(r.norm(), 1.0);
      ev.certificate = ev.determined ? "chain" : "underdetermined";
    }
    out.values.push_back(std::move(ev));
  }
  return out;
}

HypothesisCheck chain_hypotheses(const TrilinearContext& ctx) {
  HypothesisCheck out;
  const RepSpec dual = contragredient(ctx.v3);
  const int p = ctx.p;
  const BorelChar sigma{ctx.f1.chi.mu * ctx.f2.chi.mu * MultChar::abs_power(p, 0.5),
                        ctx.f1.chi.mu_prime * ctx.f2.chi.mu_prime * MultChar::abs_power(p, -0.5)};
  out.induced_hom_vanishes = !hom_from_induced_nonzero(sigma, dual);
  std::ostringstream os;
  os << "Hom(Ind(chi1 chi2 delta^1/2), V3~) " << (out.induced_hom_vanishes ? "= 0" : "!= 0");
  auto twist_vanishes = [&](const Factor& other, const MultChar& eta) {
    if (other.kind == FactorKind::kSpecial) {
      return !isomorphic(twist_and_classify(other.spec, eta), dual);
    }
    return !hom_from_induced_nonzero(other.chi.twisted(eta), dual);
  };
  if (ctx.f2.kind == FactorKind::kSpecial) {
    const bool v = twist_vanishes(ctx.f1, ctx.f2.spec.eta());
    out.twist_hom_vanishes = out.twist_hom_vanishes && v;
    os << "; Hom(V1 (x) eta2, V3~) " << (v ? "= 0" : "!= 0");
  }
  if (ctx.f1.kind == FactorKind::kSpecial) {
    const bool v = twist_vanishes(ctx.f2, ctx.f1.spec.eta());
    out.twist_hom_vanishes = out.twist_hom_vanishes && v;
    os << "; Hom(V2 (x) eta1, V3~) " << (v ? "= 0" : "!= 0");
  }
  out.detail = os.str();
  return out;
}

EpsilonResult epsilon_obstruction(const std::array<RepSpec, 3>& specs) {
  const int p = specs[0].p();
  const MultChar w = specs[0].central_character() * specs[1].central_character() *
                     specs[2].central_character();
  if (!w.approx_equal(MultChar::trivial(p))) {
    throw DomainError("epsilon_obstruction: omega1 omega2 omega3 != 1");
  }
  bool stubs = false;
  for (const RepSpec& s : specs) stubs = stubs || s.is_stub();
  if (stubs) {
    for (const RepSpec& s : specs) {
      if (!s.is_minimal()) throw DomainError("epsilon_obstruction: non-minimal input");
    }
  } else if (!minimal_triple_search(specs).already_minimal) {
    throw DomainError("epsilon_obstruction: non-minimal input");
  }
  EpsilonResult out;
  for (int i = 0; i < 3; ++i) {
    const RepSpec& vi = specs[i];
    if (!vi.is_special() || !vi.eta().is_unramified()) continue;
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      const RepSpec& vj = specs[j];
      if (!vj.is_special() && !vj.is_stub()) continue;
      const int k = 3 - i - j;
      bool iso = false;
      try {
        iso = isomorphic(contragredient(vj), twist_and_classify(specs[k], vi.eta()));
      } catch (const UnsupportedError&) {
        iso = false;
      }
      if (iso) {
        std::ostringstream os;
        os << "V" << i + 1 << " = eta (x) St, V" << j + 1 << "~ = V" << k + 1 << " (x) eta";
        out.sign = -1;
        out.pattern = os.str();
        return out;
      }
    }
  }
  return out;
}

}  // namespace tvec
