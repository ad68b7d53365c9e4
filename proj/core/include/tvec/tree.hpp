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

// The Bruhat-Tits tree of PGL2(Q_p). A vertex is a lattice class, labelled
// by the canonical basis (p^n, b; 0, 1) with b in Q_p / p^n Z_p. The base
// vertex O^2 (stabilizer K) is (0, 0, 0).

#pragma once

#include <string>
#include <vector>

#include "tvec/gl2.hpp"

namespace tvec {

struct Vertex {
  int n = 0;
  // b = p^bval * bunit with bunit a unit mod p^(n - bval); b = 0 is stored
  // as bval = n, bunit = 0.
  int bval = 0;
  i64 bunit = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  std::string to_string() const;
};

Vertex base_vertex();

// Class of the lattice spanned by the columns of the integer matrix m.
// Throws PrecisionError if a valuation reaches the working precision.
Vertex vertex_of_lattice(int p, const Mat2& m);
// Integer basis of some lattice in the class.
Mat2 lattice_basis(int p, const Vertex& v);

int tree_distance(int p, const Vertex& x, const Vertex& y);

// g acting on lattices by left multiplication.
Vertex act(const GL2Elem& g, const Vertex& v);

struct OrientedPath {
  int p = 2;
  std::vector<Vertex> vertices;  // v_0, ..., v_len
  bool forward = true;           // orientation from v_0 towards v_len

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  // Consecutive vertices adjacent and no backtracking.
  bool is_valid() const;
  friend bool operator==(const OrientedPath&, const OrientedPath&) = default;
};

// Vertices gamma^j O^2 for j = 0..n; its pointwise stabilizer is I_n.
OrientedPath standard_path(int p, int n);
OrientedPath act(const GL2Elem& g, const OrientedPath& path);

struct CoveringResult {
  bool ok = false;
  int longest = -1;  // index (0..2) of the path used as the longest
  std::string diagnostic;
};

// True when one of the longest paths is exactly covered by the other two:
// both lie inside it and together they contain each of its edges.
CoveringResult covering_ok(const OrientedPath& p1, const OrientedPath& p2,
                           const OrientedPath& p3);

// Paths gamma^offset * standard_path(n1), standard_path(n2),
// standard_path(n3).
std::vector<OrientedPath> configuration_paths(int p, int n1, int n2,
                                              int offset, int n3);

// DOT digraph; vertices deduplicated by label, one style per path, edges
// drawn along the orientation.
std::string to_dot(const std::vector<OrientedPath>& paths);

}  // namespace tvec
