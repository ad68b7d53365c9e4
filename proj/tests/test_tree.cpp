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
#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "tvec/tree.hpp"

namespace tvec {
namespace {

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (std::size_t at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
  return n;
}

TEST(Tree, StandardPaths) {
  EXPECT_EQ(standard_path(3, 0).vertices.size(), 1u);
  EXPECT_EQ(standard_path(3, 0).vertices[0], base_vertex());
  const OrientedPath two = standard_path(3, 2);
  EXPECT_TRUE(two.is_valid());
  EXPECT_EQ(tree_distance(3, two.vertices.front(), two.vertices.back()), 2);
}

TEST(Tree, ActionExamples) {
  const int p = 2, N = 8;
  const OrientedPath one = standard_path(p, 1);
  EXPECT_EQ(act(GL2Elem::identity(p, N), one), one);
  EXPECT_EQ(act(GL2Elem::from_ints(p, N, 1, 1, 0, 1), standard_path(p, 0)), standard_path(p, 0));
  const OrientedPath shifted = act(GL2Elem::gamma(p, N, 1), one);
  EXPECT_EQ(shifted.vertices[0], one.vertices[1]);
  EXPECT_EQ(shifted.vertices[1], standard_path(p, 2).vertices[2]);
}

TEST(Tree, StabilizerOfPathIsIwahori) {
  for (int p : {2, 3}) {
    for (int n = 0; n <= 2; ++n) {
      const OrientedPath path = standard_path(p, n);
      for (const Mat2& k : enumerate_cosets(p, n + 1)) {
        const bool fixes = act(GL2Elem::from_mat2(p, 8, k), path) == path;
        ASSERT_EQ(fixes, mat_in_iwahori(k, p, n)) << "p=" << p << " n=" << n;
      }
    }
  }
}

TEST(Tree, CoveringPictures) {
  const int p = 2, N = 8;
  // Concatenation: one edge then three more edges along the longest path.
  EXPECT_TRUE(covering_ok(standard_path(p, 1), act(GL2Elem::gamma(p, N, 1), standard_path(p, 3)),
                          standard_path(p, 4))
                  .ok);
  // Two equal long paths with a sub-path sharing an end.
  EXPECT_TRUE(covering_ok(standard_path(p, 5), standard_path(p, 5), standard_path(p, 2)).ok);
  // Three disjoint edges.
  EXPECT_FALSE(covering_ok(standard_path(p, 1), act(GL2Elem::gamma(p, N, 2), standard_path(p, 1)),
                           act(GL2Elem::gamma(p, N, 4), standard_path(p, 1)))
                   .ok);
}

TEST(Tree, MainConfigurationDrawing) {
  // Path of length n1 = 2 from the base, n2 = 1 shifted by n3 - n2, n3 = 3.
  const int p = 2, N = 8;
  const std::vector<OrientedPath> paths = {
      standard_path(p, 2), act(GL2Elem::gamma(p, N, 2), standard_path(p, 1)), standard_path(p, 3)};
  EXPECT_TRUE(covering_ok(paths[0], paths[1], paths[2]).ok);
  const std::string dot = to_dot(paths);
  EXPECT_EQ(count(dot, "[label="), 4);
  EXPECT_EQ(count(dot, "->"), 2 + 1 + 3);
  EXPECT_EQ(count(to_dot({standard_path(p, 2)}), "->"), 2);
  EXPECT_EQ(count(to_dot({}), "->"), 0);
}

TEST(TreeProperty, CoveringInvariantUnderTranslation) {
  std::mt19937_64 rng(5);
  const int p = 3, N = 10;
  std::uniform_int_distribution<i64> e(-20, 20);
  for (int i = 0; i < 60; ++i) {
    const int n3 = 1 + static_cast<int>(rng() % 3);
    const int n1 = static_cast<int>(rng() % (n3 + 1));
    const int off = static_cast<int>(rng() % (n3 + 1));
    const int n2 = static_cast<int>(rng() % (n3 + 1));
    const auto paths = configuration_paths(p, n1, n2, off, n3);
    Mat2 m{e(rng), e(rng), e(rng), e(rng)};
    while (m.det() == 0) m = Mat2{e(rng), e(rng), e(rng), e(rng)};
    const GL2Elem g = GL2Elem::from_mat2(p, N, m);
    const bool before = covering_ok(paths[0], paths[1], paths[2]).ok;
    const bool after = covering_ok(act(g, paths[0]), act(g, paths[1]), act(g, paths[2])).ok;
    EXPECT_EQ(before, after);
  }
}

}  // namespace
}  // namespace tvec
