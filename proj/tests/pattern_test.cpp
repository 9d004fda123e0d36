// Copyright 2026 The cktest Authors
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


#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "cktest/pattern.hpp"
#include "cktest/rng.hpp"
#include "support/brute_force.hpp"

namespace cktest {
namespace {

std::vector<std::pair<int, int>> pairs_of(const PatternGraph& f) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : f.edges()) out.emplace_back(static_cast<int>(e.u), static_cast<int>(e.v));
  return out;
}

TEST(Pattern, RejectsIsolatedAndOversized) {
  EXPECT_THROW(PatternGraph(3, {{0, 1}}), GraphError);
  EXPECT_THROW(PatternGraph(13, {}), SizeLimitError);
  EXPECT_THROW(PatternGraph(2, {{0, 1}, {1, 0}}), GraphError);
}

TEST(Pattern, NamedPatterns) {
  EXPECT_EQ(named_pattern("C5").num_edges(), 5u);
  EXPECT_EQ(named_pattern("K4").num_edges(), 6u);
  EXPECT_EQ(named_pattern("K1,3").num_vertices(), 4u);
  EXPECT_EQ(named_pattern("P4").num_edges(), 3u);
  EXPECT_EQ(named_pattern("edge").num_edges(), 1u);
  EXPECT_THROW(named_pattern("Q7"), Error);
}

TEST(Pattern, AsCycle) {
  EXPECT_TRUE(cycle_pattern(6).as_cycle().has_value());
  EXPECT_FALSE(path_pattern(4).as_cycle().has_value());
  // Two disjoint triangles have all degrees 2 but are not one cycle.
  const PatternGraph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_FALSE(two_triangles.as_cycle().has_value());
}

TEST(Ell, Examples) {
  EXPECT_EQ(ell_of(complete_pattern(2)), 1u);
  EXPECT_EQ(ell_of(cycle_pattern(4)), 2u);
  EXPECT_EQ(ell_of(cycle_pattern(5)), 3u);
  // {0, 1, 3, 4} is a minimal vertex cover of C6.
  EXPECT_EQ(ell_of(cycle_pattern(6)), 4u);
  EXPECT_EQ(ell_of(star_pattern(3)), 3u);
}

// ell(C_k) is the largest minimal vertex cover of C_k, floor(2k/3); values
// produced by the brute-force oracle and frozen.
TEST(Ell, Cycles) {
  const std::size_t expected[] = {0, 0, 0, 2, 2, 3, 4, 4, 5, 6, 6};
  for (std::size_t k = 3; k <= 10; ++k) {
    EXPECT_EQ(testing::brute_ell(k, pairs_of(cycle_pattern(k))), expected[k]) << "k=" << k;
    EXPECT_EQ(ell_of(cycle_pattern(k)), expected[k]) << "k=" << k;
    EXPECT_GE(ell_of(cycle_pattern(k)), (k + 1) / 2) << "k=" << k;
  }
}

// Value produced by the brute-force oracle and frozen.
TEST(Ell, PathOnFourVertices) {
  EXPECT_EQ(testing::brute_ell(4, {{0, 1}, {1, 2}, {2, 3}}), 2u);
  EXPECT_EQ(ell_of(path_pattern(4)), 2u);
}

TEST(Ell, AgreesWithBruteForceOnRandomPatterns) {
  Rng rng(3);
  int checked = 0;
  while (checked < 200) {
    const std::size_t k = 2 + rng.below(7);
    std::vector<Edge> edges;
    std::vector<int> deg(k, 0);
    for (Vertex u = 0; u < k; ++u) {
      for (Vertex v = u + 1; v < k; ++v) {
        if (rng.bernoulli(0.45)) {
          edges.push_back({u, v});
          ++deg[u];
          ++deg[v];
        }
      }
    }
    bool isolated = false;
    for (int d : deg) isolated = isolated || d == 0;
    if (isolated) continue;
    const PatternGraph f(k, edges);
    const std::size_t ell = ell_of(f);
    EXPECT_EQ(ell, testing::brute_ell(k, pairs_of(f)));
    EXPECT_GE(ell, min_vertex_cover_size(f));
    EXPECT_LE(ell, k);
    ++checked;
  }
}

}  // namespace
}  // namespace cktest
