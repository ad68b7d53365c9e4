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

#include "tvec/tree.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace tvec {

namespace {

// Working modulus p^W < 2^62.
struct Work {
  int p;
  int W;
  i64 P;
  explicit Work(int p_) : p(p_) {
    W = 0;
    i64 q = 1;
    while (q <= (i64{1} << 61) / p) {
      q *= p;
      ++W;
    }
    P = q;
  }
  i64 m(i128 x) const { return mod(x, P); }
  int val(i64 x) const {
    x = m(x);
    return x == 0 ? kInfVal : val_p(x, p);
  }
  // Inverse of the unit part of a nonzero residue.
  i64 unit_inv(i64 x) const {
    return inv_mod(m(unit_part(m(x), p)), P);
  }
};

i64 div_pk(i64 x, int p, int k) {
  for (int i = 0; i < k; ++i) x /= p;
  return x;
}

}  // namespace

std::string Vertex::to_string() const {
  std::ostringstream os;
  os << "(" << n << "," << bval << "," << bunit << ")";
  return os.str();
}

Vertex base_vertex() { return {0, 0, 0}; }

Vertex vertex_of_lattice(int p, const Mat2& m0) {
  const Work w(p);
  i64 a = w.m(m0.a), b = w.m(m0.b), c = w.m(m0.c), d = w.m(m0.d);
  if (w.val(c) < w.val(d)) {
    std::swap(a, b);
    std::swap(c, d);
  }
  const int vd = w.val(d);
  if (vd == kInfVal) throw PrecisionError("vertex_of_lattice: singular basis");
  // col1 -= (c / d) col2
  const i64 t = w.m(static_cast<i128>(div_pk(c, p, vd)) * w.unit_inv(d));
  a = w.m(a - static_cast<i128>(t) * b);
  const int va = w.val(a);
  if (va == kInfVal || va + vd >= w.W / 2) {
    throw PrecisionError("vertex_of_lattice: valuation beyond working precision");
  }
  const i64 qa = ipow(p, va);
  const i64 y = mod(static_cast<i128>(b) * w.unit_inv(d), qa);
  Vertex v;
  v.n = va - vd;
  if (y == 0) {
    v.bval = v.n;
    v.bunit = 0;
  } else {
    const int vy = val_p(y, p);
    v.bval = vy - vd;
    v.bunit = mod(unit_part(y, p), ipow(p, va - vy));
  }
  return v;
}

Mat2 lattice_basis(int p, const Vertex& v) {
  const int s = std::max({0, -v.n, -v.bval});
  return {ipow(p, s + v.n), ipow(p, s + v.bval) * v.bunit, 0, ipow(p, s)};
}

int tree_distance(int p, const Vertex& x, const Vertex& y) {
  const Work w(p);
  const Mat2 m1 = lattice_basis(p, x);
  const Mat2 m2 = lattice_basis(p, y);
  const Mat2 adj{m1.d, -m1.b, -m1.c, m1.a};
  const i64 e[4] = {
      w.m(static_cast<i128>(adj.a) * m2.a + static_cast<i128>(adj.b) * m2.c),
      w.m(static_cast<i128>(adj.a) * m2.b + static_cast<i128>(adj.b) * m2.d),
      w.m(static_cast<i128>(adj.c) * m2.a + static_cast<i128>(adj.d) * m2.c),
      w.m(static_cast<i128>(adj.c) * m2.b + static_cast<i128>(adj.d) * m2.d)};
  int mv = kInfVal;
  for (i64 v : e) mv = std::min(mv, w.val(v));
  return val_p(m1.det(), p) + val_p(m2.det(), p) - 2 * mv;
}

Vertex act(const GL2Elem& g, const Vertex& v) {
  const int p = g.p();
  const Work w(p);
  const Mat2 gm = g.to_scaled().second;
  const Mat2 lb = lattice_basis(p, v);
  auto mm = [&](i64 x1, i64 y1, i64 x2, i64 y2) {
    return w.m(static_cast<i128>(w.m(x1)) * w.m(y1) +
               static_cast<i128>(w.m(x2)) * w.m(y2));
  };
  const Mat2 prod{mm(gm.a, lb.a, gm.b, lb.c), mm(gm.a, lb.b, gm.b, lb.d),
                  mm(gm.c, lb.a, gm.d, lb.c), mm(gm.c, lb.b, gm.d, lb.d)};
  return vertex_of_lattice(p, prod);
}

bool OrientedPath::is_valid() const {
  if (vertices.empty()) return false;
  for (size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (tree_distance(p, vertices[i], vertices[i + 1]) != 1) return false;
    if (i + 2 < vertices.size() &&
        tree_distance(p, vertices[i], vertices[i + 2]) != 2) {
      return false;
    }
  }
  return true;
}

OrientedPath standard_path(int p, int n) {
  if (n < 0) throw DomainError("standard_path: negative length");
  OrientedPath path;
  path.p = p;
  for (int j = 0; j <= n; ++j) {
    path.vertices.push_back(act(GL2Elem::gamma(p, 8, j), base_vertex()));
  }
  return path;
}

OrientedPath act(const GL2Elem& g, const OrientedPath& path) {
  OrientedPath out;
  out.p = path.p;
  out.forward = path.forward;
  for (const auto& v : path.vertices) out.vertices.push_back(act(g, v));
  return out;
}

CoveringResult covering_ok(const OrientedPath& p1, const OrientedPath& p2,
                           const OrientedPath& p3) {
  const OrientedPath* ps[3] = {&p1, &p2, &p3};
  const int maxlen = std::max({p1.length(), p2.length(), p3.length()});
  CoveringResult best;
  std::ostringstream diag;
  for (int li = 0; li < 3; ++li) {
    if (ps[li]->length() != maxlen) continue;
    const auto& L = ps[li]->vertices;
    std::vector<int> covered(std::max(maxlen, 0), 0);
    bool inside = true;
    diag << "longest=P" << li + 1 << " len " << maxlen << ":";
    for (int oi = 0; oi < 3; ++oi) {
      if (oi == li) continue;
      std::vector<int> pos;
      for (const auto& v : ps[oi]->vertices) {
        const auto it = std::find(L.begin(), L.end(), v);
        if (it == L.end()) {
          inside = false;
          pos.push_back(-1);
        } else {
          pos.push_back(static_cast<int>(it - L.begin()));
        }
      }
      diag << " P" << oi + 1 << " positions [";
      for (size_t i = 0; i < pos.size(); ++i) diag << (i ? "," : "") << pos[i];
      diag << "]";
      if (!inside) continue;
      const auto [lo, hi] = std::minmax_element(pos.begin(), pos.end());
      for (int e = *lo; e < *hi; ++e) ++covered[e];
    }
    std::vector<int> gaps;
    int overlap = 0;
    for (int e = 0; e < maxlen; ++e) {
      if (covered[e] == 0) gaps.push_back(e);
      if (covered[e] > 1) ++overlap;
    }
    diag << "; overlap " << overlap << " edges";
    if (!inside) diag << "; a path leaves the longest one";
    if (!gaps.empty()) {
      diag << "; uncovered edges";
      for (int g : gaps) diag << " " << g;
    }
    diag << ". ";
    if (inside && gaps.empty() && !best.ok) {
      best.ok = true;
      best.longest = li;
    }
  }
  best.diagnostic = diag.str();
  return best;
}

std::vector<OrientedPath> configuration_paths(int p, int n1, int n2,
                                              int offset, int n3) {
  return {act(GL2Elem::gamma(p, 8, offset), standard_path(p, n1)),
          standard_path(p, n2), standard_path(p, n3)};
}

std::string to_dot(const std::vector<OrientedPath>& paths) {
  static const char* kStyles[] = {"solid", "dashed", "dotted", "bold"};
  static const char* kColors[] = {"black", "red", "blue", "darkgreen"};
  std::ostringstream os;
  os << "digraph tvec {\n";
  std::map<std::string, int> ids;
  for (const auto& path : paths) {
    for (const auto& v : path.vertices) {
      const std::string key = v.to_string();
      if (ids.emplace(key, static_cast<int>(ids.size())).second) {
        os << "  v" << ids[key] << " [label=\"" << key << "\"];\n";
      }
    }
  }
  for (size_t i = 0; i < paths.size(); ++i) {
    const auto& vs = paths[i].vertices;
    for (size_t j = 0; j + 1 < vs.size(); ++j) {
      int from = ids[vs[j].to_string()];
      int to = ids[vs[j + 1].to_string()];
      if (!paths[i].forward) std::swap(from, to);
      os << "  v" << from << " -> v" << to << " [style=" << kStyles[i % 4]
         << ", color=" << kColors[i % 4] << ", label=\"P" << i + 1 << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace tvec
