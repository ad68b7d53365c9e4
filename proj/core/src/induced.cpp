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

#include "tvec/induced.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace tvec {

namespace {

int base_level(const BorelChar& chi) {
  return std::max({1, chi.mu.conductor(), chi.mu_prime.conductor()});
}

int val_or_inf(i64 x, int p) { return x == 0 ? kInfVal : val_p(x, p); }

i64 div_pow(i64 x, int p, int k) {
  for (int i = 0; i < k; ++i) x /= p;
  return x;
}

int min_entry_val(const Mat2& m, int p) {
  return std::min({val_or_inf(m.a, p), val_or_inf(m.b, p), val_or_inf(m.c, p),
                   val_or_inf(m.d, p)});
}

Mat2 gamma_mat(int p, int r, int* e) {
  if (r >= 0) {
    *e = r;
    return {1, 0, 0, ipow(p, r)};
  }
  *e = 0;
  return {ipow(p, -r), 0, 0, 1};
}

void require_unramified_eta(const RepSpec& spec, const char* what) {
  if (!spec.is_special()) throw DomainError(std::string(what) + ": not a special kind");
  if (!spec.eta().is_unramified()) {
    throw UnsupportedError(std::string(what) + ": eta must be unramified");
  }
}

}  // namespace

ModelTag model_tag(const RepSpec& spec) {
  switch (spec.kind()) {
    case RepKind::kPrincipal:
      return ModelTag::kPrincipal;
    case RepKind::kSpecialQuotient:
      return ModelTag::kSpecialQuotient;
    case RepKind::kSpecialSubspace:
      return ModelTag::kSpecialSubspace;
    case RepKind::kSupercuspidalStub:
      break;
  }
  throw UnsupportedError("supercuspidal stubs have no induced model");
}

InducedVector::InducedVector(const BorelChar& chi, ModelTag tag, int level, int cap)
    : chi_(chi), tag_(tag), level_(std::max(level, base_level(chi))), cap_(cap) {
  if (level_ > cap_) throw DomainError("induced vector: level exceeds the cap");
  q_ = ipow(p(), level_);
  values_.assign(static_cast<size_t>(q_ + q_ / p()), cplx(0.0, 0.0));
  sqrt_p_ = std::sqrt(static_cast<double>(p()));
}

Mat2 InducedVector::slot_matrix(i64 index) const {
  if (index < q_) return {0, -1, 1, index};
  return {1, 0, (index - q_) * p(), 1};
}

std::string InducedVector::slot_label(i64 index) const {
  std::ostringstream os;
  if (index < q_) {
    os << "A:" << index;
  } else {
    os << "B:" << (index - q_) * p();
  }
  return os.str();
}

Slot InducedVector::locate(const Mat2& m) const {
  const int p = this->p();
  const i128 D = m.det();
  if (D == 0) throw DomainError("locate: singular matrix");
  const int vc = val_or_inf(m.c, p);
  const int vd = val_or_inf(m.d, p);
  const int vD = val_p(D, p);
  const i64 uD = mod(unit_part(D, p), q_);
  if (vc <= vd) {
    const i64 uc = mod(unit_part(m.c, p), q_);
    const i64 ucinv = inv_mod(uc, q_);
    const i64 x = vd == kInfVal ? 0 : mulmod(mod(div_pow(m.d, p, vc), q_), ucinv, q_);
    const cplx coef = chi_.mu.eval_parts(vD - vc, mulmod(uD, ucinv, q_)) *
                      chi_.mu_prime.eval_parts(vc, uc) *
                      std::pow(sqrt_p_, -(vD - 2 * vc));
    return {coef, x};
  }
  const i64 ud = mod(unit_part(m.d, p), q_);
  const i64 udinv = inv_mod(ud, q_);
  const i64 y = vc == kInfVal ? 0 : mulmod(mod(div_pow(m.c, p, vd), q_), udinv, q_);
  const cplx coef = chi_.mu.eval_parts(vD - vd, mulmod(uD, udinv, q_)) *
                    chi_.mu_prime.eval_parts(vd, ud) *
                    std::pow(sqrt_p_, -(vD - 2 * vd));
  return {coef, q_ + y / p};
}

cplx InducedVector::eval(const Mat2& m) const {
  const Slot s = locate(m);
  return s.coef * values_[static_cast<size_t>(s.index)];
}

cplx InducedVector::eval(const Mat2& m, int e) const {
  const cplx v = eval(m);
  if (e == 0) return v;
  return v * ipow(chi_.central().unramified_value(), -e);
}

cplx InducedVector::evaluate(const GL2Elem& g) const {
  const auto [e, m] = g.to_scaled();
  return eval(m, e);
}

InducedVector InducedVector::at_level(int t) const {
  if (t < level_) throw DomainError("at_level: cannot lower the level");
  if (t == level_) return *this;
  InducedVector out(chi_, tag_, t, cap_);
  for (i64 i = 0; i < out.slot_count(); ++i) {
    out.values_[i] = eval(out.slot_matrix(i));
  }
  return out;
}

InducedVector InducedVector::act(const Mat2& m, int e) const {
  const int p = this->p();
  const i128 D = m.det();
  if (D == 0) throw DomainError("act: singular matrix");
  const int t = level_ - 2 * min_entry_val(m, p) + val_p(D, p);
  if (t > cap_) {
    throw DomainError("act: level " + std::to_string(t) + " exceeds the cap " +
                      std::to_string(cap_));
  }
  InducedVector out(chi_, tag_, t, cap_);
  for (i64 i = 0; i < out.slot_count(); ++i) {
    out.values_[i] = eval(out.slot_matrix(i) * m, e);
  }
  return out;
}

InducedVector InducedVector::act(const GL2Elem& g) const {
  const auto [e, m] = g.to_scaled();
  return act(m, e);
}

InducedVector InducedVector::gamma_translate(int r) const {
  int e = 0;
  const Mat2 m = gamma_mat(p(), r, &e);
  return act(m, e);
}

void InducedVector::check_compatible(const InducedVector& o) const {
  if (tag_ != o.tag_ || !chi_.mu.approx_equal(o.chi_.mu) ||
      !chi_.mu_prime.approx_equal(o.chi_.mu_prime)) {
    throw DomainError("induced vectors from different models");
  }
}

InducedVector InducedVector::operator+(const InducedVector& o) const {
  check_compatible(o);
  const int t = std::max(level_, o.level_);
  InducedVector x = at_level(t);
  const InducedVector y = o.at_level(t);
  for (size_t i = 0; i < x.values_.size(); ++i) x.values_[i] += y.values_[i];
  return x;
}

InducedVector InducedVector::operator-(const InducedVector& o) const {
  return *this + o * cplx(-1.0, 0.0);
}

InducedVector InducedVector::operator*(cplx s) const {
  InducedVector x = *this;
  for (auto& v : x.values_) v *= s;
  return x;
}

bool InducedVector::approx_equal(const InducedVector& o, double tol) const {
  const InducedVector d = *this - o;
  for (const auto& v : d.values_) {
    if (std::abs(v) > tol) return false;
  }
  return true;
}

cplx inner_product(const InducedVector& f, const InducedVector& g) {
  const int t = std::max(f.level(), g.level());
  const InducedVector x = f.at_level(t);
  const InducedVector y = g.at_level(t);
  cplx s(0.0, 0.0);
  for (i64 i = 0; i < x.slot_count(); ++i) s += x.values()[i] * std::conj(y.values()[i]);
  return s / static_cast<double>(x.slot_count());
}

InducedVector v_iwahori(const RepSpec& spec, int cap) {
  require_unramified_eta(spec, "v_iwahori");
  InducedVector v(spec.chi(), model_tag(spec), 1, cap);
  for (i64 i = v.a_count(); i < v.slot_count(); ++i) v.values()[i] = 1.0;
  return v;
}

InducedVector v_k_minus_i(const RepSpec& spec, int cap) {
  require_unramified_eta(spec, "v_k_minus_i");
  InducedVector v(spec.chi(), model_tag(spec), 1, cap);
  for (i64 i = 0; i < v.a_count(); ++i) v.values()[i] = 1.0;
  return v;
}

InducedVector v_spherical(const RepSpec& spec, int cap) {
  if (spec.kind() == RepKind::kPrincipal) {
    if (spec.conductor() != 0) throw DomainError("v_spherical: ramified principal series");
  } else {
    require_unramified_eta(spec, "v_spherical");
  }
  InducedVector v(spec.chi(), model_tag(spec), 1, cap);
  std::fill(v.values().begin(), v.values().end(), cplx(1.0, 0.0));
  return v;
}

InducedVector eta_det_vector(const RepSpec& spec, int level, int cap) {
  if (!spec.is_special()) throw DomainError("eta_det_vector: not a special kind");
  InducedVector v(spec.chi(), model_tag(spec), level, cap);
  // Every slot representative has determinant 1.
  std::fill(v.values().begin(), v.values().end(), cplx(1.0, 0.0));
  return v;
}

InducedVector quotient_class(const InducedVector& f) {
  if (f.tag() != ModelTag::kSpecialQuotient) {
    throw DomainError("quotient_class: not the quotient model");
  }
  InducedVector g = f;
  const cplx at_one = f.eval(Mat2{});
  for (auto& v : g.values()) v -= at_one;
  return g;
}

cplx proj_star(const InducedVector& f) {
  if (f.tag() != ModelTag::kSpecialSubspace) {
    throw DomainError("proj_star: not the subspace model");
  }
  cplx s(0.0, 0.0);
  for (const auto& v : f.values()) s += v;
  return s / static_cast<double>(f.slot_count());
}

InducedVector new_vector(const RepSpec& spec, int cap) {
  switch (spec.kind()) {
    case RepKind::kPrincipal: {
      const BorelChar& chi = spec.chi();
      const int n = spec.conductor();
      const int m = chi.mu_prime.conductor();
      InducedVector v(chi, ModelTag::kPrincipal, n, cap);
      const i64 q = ipow(spec.p(), v.level());
      const i64 bcount = v.slot_count() - v.a_count();
      if (n == 0) {
        std::fill(v.values().begin(), v.values().end(), cplx(1.0, 0.0));
      } else if (chi.mu.is_unramified()) {
        v.b_value(0) = 1.0;
      } else if (chi.mu_prime.is_unramified()) {
        for (i64 x = 0; x < q; ++x) v.a_value(x) = 1.0;
      } else {
        const i64 pm = ipow(spec.p(), m);
        for (i64 j = 0; j < bcount; ++j) {
          const i64 y = j * spec.p();
          if (y == 0 || val_p(y, spec.p()) != m) continue;
          v.b_value(y) = 1.0 / chi.mu.eval_parts(0, y / pm);
        }
      }
      return v;
    }
    case RepKind::kSpecialQuotient:
      return quotient_class(v_iwahori(spec, cap));
    case RepKind::kSpecialSubspace: {
      const InducedVector vk = v_spherical(spec, cap);
      return vk.gamma_translate(1) - vk * (1.0 / spec.eta().unramified_value());
    }
    case RepKind::kSupercuspidalStub:
      break;
  }
  throw UnsupportedError("new_vector: supercuspidal stubs have no induced model");
}

InducedVector atkin_lehner(const InducedVector& f, int n) {
  return f.act(Mat2{0, 1, ipow(f.p(), n), 0});
}

const char* to_string(LemmaCase c) {
  switch (c) {
    case LemmaCase::kUnramified:
      return "unramified";
    case LemmaCase::kMuUnram:
      return "mu_unramified";
    case LemmaCase::kMuPrimeUnram:
      return "mu_prime_unramified";
    case LemmaCase::kBothRamified:
      return "both_ramified";
    case LemmaCase::kQuotientIwahori:
      return "quotient_v_iwahori";
    case LemmaCase::kSubspaceSpherical:
      return "subspace_v_spherical";
  }
  return "?";
}

const char* to_string(GammaVariant v) {
  switch (v) {
    case GammaVariant::kPlain:
      return "plain";
    case GammaVariant::kMinusAlpha:
      return "minus_alpha_prev";
    case GammaVariant::kMinusBeta:
      return "minus_beta_prev";
    case GammaVariant::kMinusAlphaInvNext:
      return "minus_alpha_inv_next";
  }
  return "?";
}

LemmaCase lemma_case(const RepSpec& spec) {
  switch (spec.kind()) {
    case RepKind::kPrincipal: {
      const bool u = spec.chi().mu.is_unramified();
      const bool up = spec.chi().mu_prime.is_unramified();
      if (u && up) return LemmaCase::kUnramified;
      if (u) return LemmaCase::kMuUnram;
      if (up) return LemmaCase::kMuPrimeUnram;
      return LemmaCase::kBothRamified;
    }
    case RepKind::kSpecialQuotient:
      require_unramified_eta(spec, "lemma_case");
      return LemmaCase::kQuotientIwahori;
    case RepKind::kSpecialSubspace:
      require_unramified_eta(spec, "lemma_case");
      return LemmaCase::kSubspaceSpherical;
    case RepKind::kSupercuspidalStub:
      break;
  }
  throw UnsupportedError("lemma_case: stub");
}

bool variant_supported(LemmaCase c, GammaVariant v) {
  if (v == GammaVariant::kPlain) return true;
  switch (c) {
    case LemmaCase::kUnramified:
    case LemmaCase::kSubspaceSpherical:
      return v == GammaVariant::kMinusAlpha || v == GammaVariant::kMinusBeta;
    case LemmaCase::kMuUnram:
      return v == GammaVariant::kMinusAlphaInvNext;
    case LemmaCase::kMuPrimeUnram:
      return v == GammaVariant::kMinusBeta;
    case LemmaCase::kBothRamified:
    case LemmaCase::kQuotientIwahori:
      return false;
  }
  return false;
}

InducedVector lemma_vector(const RepSpec& spec, int cap) {
  switch (lemma_case(spec)) {
    case LemmaCase::kQuotientIwahori:
      return v_iwahori(spec, cap);
    case LemmaCase::kSubspaceSpherical:
      return v_spherical(spec, cap);
    default:
      return new_vector(spec, cap);
  }
}

InducedVector gamma_vector(const RepSpec& spec, int r, GammaVariant v, int cap) {
  if (r < 0) throw DomainError("gamma_vector: r < 0");
  if (!variant_supported(lemma_case(spec), v)) {
    throw DomainError(std::string("gamma_vector: variant ") + to_string(v) +
                      " does not apply to case " + to_string(lemma_case(spec)));
  }
  const InducedVector base = lemma_vector(spec, cap);
  const BorelChar& chi = spec.chi();
  const InducedVector top = base.gamma_translate(r);
  switch (v) {
    case GammaVariant::kPlain:
      return top;
    case GammaVariant::kMinusAlpha:
      if (r < 1) throw DomainError("gamma_vector: difference needs r >= 1");
      return top - base.gamma_translate(r - 1) * chi.alpha();
    case GammaVariant::kMinusBeta:
      if (r < 1) throw DomainError("gamma_vector: difference needs r >= 1");
      return top - base.gamma_translate(r - 1) * chi.beta();
    case GammaVariant::kMinusAlphaInvNext:
      return top - base.gamma_translate(r + 1) * (1.0 / chi.alpha());
  }
  return top;
}

cplx closed_form_gamma(const RepSpec& spec, int r, const Mat2& k, int level,
                       GammaVariant v) {
  const LemmaCase lc = lemma_case(spec);
  if (!variant_supported(lc, v)) {
    throw DomainError(std::string("closed_form_gamma: variant ") + to_string(v) +
                      " does not apply to case " + to_string(lc));
  }
  if ((v == GammaVariant::kMinusAlpha || v == GammaVariant::kMinusBeta) && r < 1) {
    throw DomainError("closed_form_gamma: difference needs r >= 1");
  }
  const int p = spec.p();
  const i64 q = ipow(p, level);
  const i64 c = mod(k.c, q);
  const i64 d = mod(k.d, q);
  const i64 det = mod(k.det(), q);
  if (det % p == 0) throw DomainError("closed_form_gamma: k not in K");
  const int s = c == 0 ? level : val_p(c, p);
  const BorelChar& chi = spec.chi();
  const cplx al = chi.alpha();
  const cplx be = chi.beta();
  auto mu_ratio = [&](int t) {
    // mu(det k / (p^-t c)) for val c = t.
    const int digits = level - t;
    if (chi.mu.conductor() > digits) {
      throw DomainError("closed_form_gamma: level too small for mu");
    }
    const i64 qq = ipow(p, digits);
    const i64 cu = mod(div_pow(c, p, t), qq);
    return chi.mu.eval_parts(0, mulmod(mod(det, qq), inv_mod(cu, qq), qq));
  };
  auto nr = [&](int rr, int ss) {
    return ss >= rr ? ipow(al, rr) : ipow(al, ss) * ipow(be, rr - ss);
  };
  const int n = spec.conductor();
  const int m = chi.mu_prime.conductor();
  const cplx zero(0.0, 0.0);
  switch (lc) {
    case LemmaCase::kUnramified:
    case LemmaCase::kSubspaceSpherical:
      if (v == GammaVariant::kPlain) return nr(r, s);
      if (v == GammaVariant::kMinusAlpha) {
        return s >= r ? zero : nr(r, s) - ipow(al, s + 1) * ipow(be, r - 1 - s);
      }
      return s >= r ? ipow(al, r) * (1.0 - be / al) : zero;
    case LemmaCase::kMuUnram: {
      const bool inside = v == GammaVariant::kPlain ? s >= n + r : s == n + r;
      if (!inside) return zero;
      if (v != GammaVariant::kPlain && level <= n + r) {
        throw DomainError("closed_form_gamma: level too small");
      }
      return ipow(al, r) * chi.mu_prime.eval_parts(0, d);
    }
    case LemmaCase::kMuPrimeUnram:
      if (v == GammaVariant::kPlain) {
        if (s > r) return zero;
        return ipow(al, s) * ipow(be, r - s) * mu_ratio(s);
      }
      return s == r ? ipow(al, r) * mu_ratio(r) : zero;
    case LemmaCase::kBothRamified:
      if (s != m + r) return zero;
      return ipow(al, r) * mu_ratio(m + r) * chi.mu_prime.eval_parts(0, d);
    case LemmaCase::kQuotientIwahori:
      return s >= r + 1 ? ipow(al, r) : zero;
  }
  return zero;
}

cplx closed_form_gamma(const RepSpec& spec, int r, const GL2Elem& k,
                       GammaVariant v) {
  if (!in_K(k)) throw DomainError("closed_form_gamma: k not in K");
  int level = k.cap();
  for (const auto* x : {&k.a(), &k.b(), &k.c(), &k.d()}) {
    if (x->is_zero()) {
      if (x->abs_precision() < level) level = x->abs_precision();
    } else {
      level = std::min(level, x->abs_precision());
    }
  }
  const Mat2 m{k.a().residue(level), k.b().residue(level), k.c().residue(level),
               k.d().residue(level)};
  return closed_form_gamma(spec, r, m, level, v);
}

LemmaSweep lemma_sweep(const RepSpec& spec, int r, GammaVariant v, int cap,
                       i64 budget) {
  const InducedVector vec = gamma_vector(spec, r, v, cap);
  LemmaSweep res;
  res.level = vec.level();
  auto check = [&](const Mat2& k) {
    ++res.checked;
    const double err =
        std::abs(vec.eval(k) - closed_form_gamma(spec, r, k, res.level, v));
    res.max_error = std::max(res.max_error, err);
  };
  if (gl2_order(spec.p(), res.level) <= budget) {
    res.exhaustive = true;
    for_each_coset(spec.p(), res.level, budget, check);
  } else {
    for_each_class(spec.p(), res.level, budget, check);
  }
  return res;
}

int eigenspace_dim(const RepSpec& spec, int s, const MultChar& omega,
                   EigenCharSide side, int cap, double tol) {
  if (spec.is_stub()) throw UnsupportedError("eigenspace_dim: stub");
  if (s < 0) throw DomainError("eigenspace_dim: s < 0");
  if (s == 0 ? !omega.is_unramified() : omega.conductor() > s) {
    throw DomainError("eigenspace_dim: omega is not a character of I_s");
  }
  const int p = spec.p();
  const BorelChar& chi = spec.chi();
  const int L = std::max({s, 1, omega.conductor(), base_level(chi)});
  const InducedVector tmpl(chi, model_tag(spec), L, std::max(cap, L));
  const i64 n = tmpl.slot_count();

  struct Gen {
    Mat2 k;
    cplx value;
    i64 det;
  };
  std::vector<Gen> gens;
  for (i64 g : unit_group(p, L).generators) {
    const cplx w = omega.eval_parts(0, g);
    gens.push_back({{g, 0, 0, 1}, side == EigenCharSide::kA ? w : 1.0, g});
    gens.push_back({{1, 0, 0, g}, side == EigenCharSide::kD ? w : 1.0, g});
  }
  gens.push_back({{1, 1, 0, 1}, 1.0, 1});
  if (s >= 1) {
    gens.push_back({{1, 0, ipow(p, s), 1}, 1.0, 1});
  } else {
    gens.push_back({{0, 1, 1, 0}, 1.0, -1});
  }

  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(gens.size() * n), n);
  Eigen::Index row = 0;
  for (const auto& g : gens) {
    for (i64 x = 0; x < n; ++x, ++row) {
      const Slot sl = tmpl.locate(tmpl.slot_matrix(x) * g.k);
      A(row, sl.index) += sl.coef;
      A(row, x) -= g.value;
    }
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(A);
  const auto& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol * std::max(1.0, top)) ++rank;
  }
  int dim = static_cast<int>(n) - rank;
  if (spec.is_special()) {
    // eta o det lies in the eigenspace iff eta(det k) matches on generators.
    bool line = true;
    for (const auto& g : gens) {
      if (std::abs(spec.eta().eval(g.det) - g.value) > 1e-9) line = false;
    }
    if (line) --dim;
  }
  return dim;
}

namespace {

// Smallest level at which f is right-invariant under Kprin.
InducedVector compress(const InducedVector& f) {
  for (int t = base_level(f.chi()); t < f.level(); ++t) {
    InducedVector g(f.chi(), f.tag(), t, f.cap());
    for (i64 i = 0; i < g.slot_count(); ++i) g.values()[i] = f.eval(g.slot_matrix(i));
    if (g.approx_equal(f, 1e-10)) return g;
  }
  return f;
}

}  // namespace

std::vector<InducedVector> casselman_basis(const RepSpec& spec, int s, int cap) {
  const int n = spec.conductor();
  if (s < n) return {};
  const InducedVector v = compress(new_vector(spec, cap));
  std::vector<InducedVector> out;
  for (int i = 0; i <= s - n; ++i) {
    InducedVector w = v.gamma_translate(i);
    if (spec.kind() == RepKind::kSpecialQuotient) w = quotient_class(w);
    out.push_back(w.at_level(std::max(s, w.level())));
  }
  return out;
}

std::vector<cplx> projection_coefficients(const InducedVector& f,
                                          const std::vector<InducedVector>& basis) {
  const Eigen::Index k = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd G(k, k);
  Eigen::VectorXcd rhs(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    rhs(i) = inner_product(f, basis[i]);
    for (Eigen::Index j = 0; j < k; ++j) G(i, j) = inner_product(basis[j], basis[i]);
  }
  const Eigen::VectorXcd x = G.completeOrthogonalDecomposition().solve(rhs);
  return std::vector<cplx>(x.data(), x.data() + k);
}

int family_rank(const std::vector<InducedVector>& family, double tol) {
  const Eigen::Index k = static_cast<Eigen::Index>(family.size());
  if (k == 0) return 0;
  Eigen::MatrixXcd G(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) G(i, j) = inner_product(family[j], family[i]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G);
  const auto& ev = es.eigenvalues();
  const double top = ev.maxCoeff();
  int rank = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > tol * std::max(top, 1e-300)) ++rank;
  }
  return rank;
}

}  // namespace tvec
