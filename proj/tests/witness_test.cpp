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


#include <vector>

#include <gtest/gtest.h>

#include "cktest/exact.hpp"
#include "cktest/explored.hpp"
#include "cktest/rng.hpp"
#include "cktest/witness.hpp"
#include "support/brute_force.hpp"

namespace cktest {
namespace {

ExploredGraph explored_from(const Graph& g) {
  ExploredGraph x;
  for (const Edge& e : g.edges()) {
    x.add_vertex(e.u);
    x.add_vertex(e.v);
    x.add_edge(e.u, e.v);
  }
  return x;
}

TEST(Witness, FourCycle) {
  ExploredGraph x = explored_from(parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0"));
  WitnessSearch search(4);
  const auto w = search.scan(x);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(search.validate(x, *w));
  EXPECT_EQ(w->size(), 4u);
}

TEST(Witness, TreeHasNone) {
  ExploredGraph x = explored_from(parse_edge_list("6 5\n0 1\n0 2\n1 3\n1 4\n2 5"));
  for (std::size_t k = 3; k <= 6; ++k) {
    ExploredGraph copy = x;
    EXPECT_FALSE(WitnessSearch(k).scan(copy).has_value());
  }
}

TEST(Witness, TriangleInK4) {
  ExploredGraph x = explored_from(parse_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3"));
  WitnessSearch search(cycle_pattern(3));
  const auto w = search.scan(x);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(search.validate(x, *w));
}

TEST(Witness, ValidateRejectsBadSequences) {
  ExploredGraph x = explored_from(parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0"));
  WitnessSearch search(4);
  EXPECT_FALSE(search.validate(x, {0, 2, 1, 3}));
  EXPECT_FALSE(search.validate(x, {0, 1, 2}));
  EXPECT_FALSE(search.validate(x, {0, 1, 0, 3}));
  EXPECT_TRUE(search.validate(x, {3, 2, 1, 0}));
}

TEST(Witness, GeneralPatternEmbedding) {
  const Graph g = parse_edge_list("6 5\n0 1\n0 2\n0 3\n3 4\n4 5");
  ExploredGraph x = explored_from(g);
  WitnessSearch star(star_pattern(3));
  const auto w = star.scan(x);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(star.validate(x, *w));
  EXPECT_TRUE(star.validate_against(g, *w));
  ExploredGraph y = explored_from(g);
  EXPECT_FALSE(WitnessSearch(star_pattern(4)).scan(y).has_value());
}

// Incremental scans over random edge orders find a copy exactly when the
// revealed graph first contains one.
TEST(Witness, IncrementalScanIsComplete) {
  Rng rng(13);
  for (int rep = 0; rep < 600; ++rep) {
    const std::size_t n = 6 + rng.below(7);
    const Graph g = testing::random_graph(n, 0.15 + 0.3 * rng.uniform01(), rng);
    const std::size_t k = 3 + rng.below(4);
    std::vector<Edge> order(g.edges().begin(), g.edges().end());
    shuffle(order.begin(), order.end(), rng);
    ExploredGraph x;
    WitnessSearch search(k);
    std::vector<Edge> revealed;
    bool found = false;
    for (std::size_t i = 0; i < order.size() && !found; ) {
      const std::size_t batch = 1 + rng.below(3);
      for (std::size_t j = 0; j < batch && i < order.size(); ++j, ++i) {
        x.add_vertex(order[i].u);
        x.add_vertex(order[i].v);
        x.add_edge(order[i].u, order[i].v);
        revealed.push_back(order[i]);
      }
      const auto w = search.scan(x);
      const Graph sub = Graph::from_edges(n, revealed);
      const bool present = testing::brute_cycle_count(sub, k) > 0;
      ASSERT_EQ(w.has_value(), present) << "rep " << rep;
      if (w) {
        EXPECT_TRUE(search.validate(x, *w));
        found = true;
      }
    }
  }
}

TEST(Witness, PatternScanMatchesExactCount) {
  Rng rng(21);
  const PatternGraph patterns[] = {path_pattern(4), star_pattern(3), complete_pattern(4),
                                   cycle_pattern(4)};
  for (int rep = 0; rep < 80; ++rep) {
    const Graph g = testing::random_graph(9, 0.3, rng);
    for (const PatternGraph& f : patterns) {
      ExploredGraph x = explored_from(g);
      const auto w = WitnessSearch(f).scan(x);
      EXPECT_EQ(w.has_value(), count_pattern(g, f) > 0);
    }
  }
}

}  // namespace
}  // namespace cktest
