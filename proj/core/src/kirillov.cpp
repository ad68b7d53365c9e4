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

#include "tvec/kirillov.hpp"

#include <cmath>
#include <numbers>

#include "tvec/induced.hpp"

namespace tvec {

namespace {

// psi(p^w U) for a unit U, or its conjugate.
cplx psi_parts(int p, int w, i64 U, AddChar side) {
  if (w >= 0) return {1.0, 0.0};
  const i64 q = ipow(p, -w);
  const double t = 2.0 * std::numbers::pi * static_cast<double>(mod(U, q)) /
                   static_cast<double>(q);
  const double s = side == AddChar::kPsi ? 1.0 : -1.0;
  return {std::cos(t), s * std::sin(t)};
}

// Unit part of a field element as a residue mod p^k.
i64 unit_mod(const LocalFieldElem& x, int k) {
  if (x.precision() < k) {
    throw PrecisionError("borel_act: matrix entry known to too few digits");
  }
  return mod(x.unit(), ipow(x.p(), k));
}

}  // namespace

KirillovVector::KirillovVector(int p, int depth, AddChar side)
    : p_(p), depth_(depth), modulus_(ipow(p, depth)), side_(side) {
  if (depth < 0) throw DomainError("KirillovVector: negative depth");
}

KirillovVector KirillovVector::unit_indicator(int p, AddChar side) {
  KirillovVector f(p, 0, side);
  f.set(0, 0, 1.0);
  return f;
}

void KirillovVector::set(int v, i64 u, cplx value) {
  const i64 r = mod(u, modulus_);
  if (modulus_ > 1 && r % p_ == 0) throw DomainError("KirillovVector: u not a unit");
  if (value == cplx(0.0, 0.0)) {
    cells_.erase({v, r});
  } else {
    cells_[{v, r}] = value;
  }
}

cplx KirillovVector::at(int v, i64 u) const {
  const auto it = cells_.find({v, mod(u, modulus_)});
  return it == cells_.end() ? cplx(0.0, 0.0) : it->second;
}

KirillovVector KirillovVector::refined(int depth) const {
  if (depth < depth_) throw DomainError("refined: cannot lower the depth");
  if (depth == depth_) return *this;
  KirillovVector out(p_, depth, side_);
  const i64 steps = ipow(p_, depth - depth_);
  for (const auto& [key, value] : cells_) {
    for (i64 k = 0; k < steps; ++k) {
      const i64 u = key.second + k * modulus_;
      if (u % p_ == 0) continue;
      out.cells_[{key.first, u}] = value;
    }
  }
  return out;
}

KirillovVector KirillovVector::operator+(const KirillovVector& o) const {
  if (p_ != o.p_ || side_ != o.side_) {
    throw DomainError("KirillovVector: incompatible models");
  }
  const int m = std::max(depth_, o.depth_);
  KirillovVector x = refined(m);
  const KirillovVector y = o.refined(m);
  for (const auto& [key, value] : y.cells_) x.set(key.first, key.second, x.at(key.first, key.second) + value);
  return x;
}

KirillovVector KirillovVector::operator*(cplx s) const {
  KirillovVector x = *this;
  for (auto& [key, value] : x.cells_) value *= s;
  return x;
}

bool KirillovVector::approx_equal(const KirillovVector& o, double tol) const {
  const KirillovVector d = *this + o * cplx(-1.0, 0.0);
  for (const auto& [key, value] : d.cells_) {
    if (std::abs(value) > tol) return false;
  }
  return true;
}

KirillovVector borel_act(const GL2Elem& g, const KirillovVector& f,
                         const MultChar& omega) {
  if (!is_upper_triangular(g)) throw DomainError("borel_act: not upper triangular");
  const int p = f.p();
  const LocalFieldElem& a = g.a();
  const LocalFieldElem& b = g.b();
  const LocalFieldElem& d = g.d();
  const int shift = a.val() - d.val();  // val(a / d)
  // psi(b x / d) with val(b x / d) = vb + v.
  const bool has_b = !b.is_zero();
  const int vb = has_b ? b.val() - d.val() : 0;
  int depth = f.depth();
  for (const auto& [key, value] : f.cells()) {
    const int v = key.first - shift;
    if (has_b) depth = std::max(depth, -(vb + v));
  }
  const KirillovVector src = f.refined(depth);
  const i64 q = ipow(p, depth);
  const i64 ua = unit_mod(a, depth);
  const i64 ud = unit_mod(d, depth);
  const i64 ratio = mulmod(ua, inv_mod(ud, std::max<i64>(q, 1)), std::max<i64>(q, 1));
  const i64 ub = has_b ? unit_mod(b, std::max(depth, 1)) : 0;
  const cplx wd = omega.eval(d);
  KirillovVector out(p, depth, f.side());
  for (const auto& [key, value] : src.cells()) {
    // x = p^v u with a x / d = p^key.first * key.second.
    const int v = key.first - shift;
    const i64 u = q == 1 ? 0 : mulmod(key.second, inv_mod(ratio, q), q);
    cplx s = wd * value;
    if (has_b && vb + v < 0) {
      const i64 qq = ipow(p, -(vb + v));
      const i64 U = mulmod(mulmod(ub, u, qq), inv_mod(mod(ud, qq), qq), qq);
      s *= psi_parts(p, vb + v, U, f.side());
    }
    out.set(v, u, s);
  }
  return out;
}

cplx pairing_Phi(const KirillovVector& f, const KirillovVector& g) {
  if (f.side() == g.side()) {
    throw DomainError("pairing_Phi: both vectors use the same additive character");
  }
  if (f.p() != g.p()) throw DomainError("pairing_Phi: p mismatch");
  const int m = std::max(f.depth(), g.depth());
  const KirillovVector x = f.refined(m);
  const KirillovVector y = g.refined(m);
  const int p = f.p();
  const double cell = m == 0 ? 1.0 : 1.0 / static_cast<double>(ipow(p, m) - ipow(p, m - 1));
  cplx s(0.0, 0.0);
  for (const auto& [key, value] : x.cells()) {
    const cplx w = y.at(key.first, key.second);
    if (w == cplx(0.0, 0.0)) continue;
    s += value * w * std::pow(static_cast<double>(p), key.first) * cell;
  }
  return s;
}

SupercuspidalStub::SupercuspidalStub(const RepSpec& spec) : spec_(spec) {
  if (!spec.is_stub()) throw DomainError("SupercuspidalStub: not a stub spec");
}

KirillovVector SupercuspidalStub::new_vector(AddChar side) const {
  return KirillovVector::unit_indicator(spec_.p(), side);
}

cplx SupercuspidalStub::eigenvalue(const Mat2& k) const {
  if (!mat_in_iwahori(k, spec_.p(), conductor())) {
    throw UnsupportedError("stub: only I_n acts on the new vector by a scalar");
  }
  return omega().eval_parts(0, mod(k.d, ipow(spec_.p(), conductor())));
}

void SupercuspidalStub::translate(const GL2Elem&) const {
  throw UnsupportedError("stub: G-translates of supercuspidal vectors are not modeled");
}

EqualConductorResult ell_equal_conductor(const RepSpec& v1, const RepSpec& v2,
                                         const RepSpec& v3, int cap, i64 budget) {
  if (v1.kind() != RepKind::kPrincipal || !v1.chi().mu.is_unramified() ||
      v1.chi().mu_prime.is_unramified()) {
    throw DomainError("ell_equal_conductor: V1 must have mu1 unramified and mu1' ramified");
  }
  if (!v2.is_stub() || !v3.is_stub()) {
    throw DomainError("ell_equal_conductor: V2 and V3 must be stubs");
  }
  if (v2.conductor() != v3.conductor()) {
    throw DomainError("ell_equal_conductor: stub conductors differ");
  }
  const int p = v1.p();
  const int n1 = v1.conductor();
  const int n3 = v3.conductor();
  if (n1 >= n3) throw DomainError("ell_equal_conductor: need n1 < n3");
  const MultChar prod = v1.central_character() * v2.central_character() *
                        v3.central_character();
  if (!prod.approx_equal(MultChar::trivial(p))) {
    throw DomainError("ell_equal_conductor: omega1 omega2 omega3 != 1");
  }
  const SupercuspidalStub s2(v2), s3(v3);
  const cplx phi0 = pairing_Phi(s2.new_vector(AddChar::kPsi),
                                s3.new_vector(AddChar::kPsiBar));
  const int r = n3 - n1;
  const InducedVector f = new_vector(v1, cap).gamma_translate(r);
  EqualConductorResult res;
  res.n1 = n1;
  res.n3 = n3;
  const double mass = 1.0 / static_cast<double>(gl2_order(p, n3));
  cplx total(0.0, 0.0);
  for_each_coset(p, n3, budget, [&](const Mat2& k) {
    ++res.cosets;
    const cplx fv = f.eval(k);
    if (!mat_in_iwahori(k, p, n3)) {
      if (std::abs(fv) > 1e-12) {
        throw UnsupportedError("ell_equal_conductor: translate of v1 is nonzero "
                               "off I_n3, stub translates would be needed");
      }
      return;
    }
    total += fv * s2.eigenvalue(k) * s3.eigenvalue(k) * phi0 * mass;
  });
  res.computed = total;
  res.volume = iwahori_volume(p, n3);
  res.closed_form = ipow(v1.chi().alpha(), r) * res.volume;
  return res;
}

}  // namespace tvec
