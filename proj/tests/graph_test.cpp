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


#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cktest/graph.hpp"
#include "cktest/rng.hpp"
#include "support/brute_force.hpp"

namespace cktest {
namespace {

GraphError::Kind load_error_kind(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const GraphError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for: " << text;
  return GraphError::Kind::kMalformed;
}

TEST(EdgeList, PathDegrees) {
  const Graph g = parse_edge_list("3 2\n0 1\n1 2");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_EQ(g.degree(2), 1u);
}

TEST(EdgeList, FourCycleNeighborOrder) {
  const Graph g = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0");
  EXPECT_EQ(g.neighbor(1, 1), 0u);
  EXPECT_EQ(g.neighbor(1, 2), 2u);
  EXPECT_EQ(g.neighbor(0, 1), 1u);
  EXPECT_EQ(g.neighbor(0, 2), 3u);
  EXPECT_TRUE(g.has_edge(3, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(EdgeList, DistinctDiagnostics) {
  EXPECT_EQ(load_error_kind("2 1\n0 0"), GraphError::Kind::kSelfLoop);
  EXPECT_EQ(load_error_kind("3 2\n0 1\n1 0"), GraphError::Kind::kDuplicate);
  EXPECT_EQ(load_error_kind("2 1\n0 2"), GraphError::Kind::kOutOfRange);
  EXPECT_EQ(load_error_kind("2 1\n0 x"), GraphError::Kind::kMalformed);
  EXPECT_EQ(load_error_kind("3 2\n0 1"), GraphError::Kind::kMalformed);
  EXPECT_EQ(load_error_kind("3 1\n0 1\n1 2"), GraphError::Kind::kMalformed);
  EXPECT_EQ(load_error_kind(""), GraphError::Kind::kMalformed);
}

TEST(EdgeList, RoundTrip) {
  Rng rng(5);
  const Graph g = testing::random_graph(30, 0.2, rng);
  const std::string text = to_edge_list(g);
  const Graph h = parse_edge_list(text);
  EXPECT_EQ(to_edge_list(h), text);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    ASSERT_EQ(g.degree(v), h.degree(v));
    for (std::size_t i = 1; i <= g.degree(v); ++i) EXPECT_EQ(g.neighbor(v, i), h.neighbor(v, i));
  }
}

TEST(Graph, InvariantsOnRandomGraphs) {
  Rng rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = testing::random_graph(40, 0.15, rng);
    std::size_t sum = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      sum += g.degree(v);
      for (Vertex w : g.neighbors(v)) {
        EXPECT_NE(v, w);
        EXPECT_TRUE(g.has_edge(w, v));
      }
    }
    EXPECT_EQ(sum, 2 * g.num_edges());
  }
}

TEST(Graph, FromAdjacencyKeepsOrder) {
  const Graph g = Graph::from_adjacency({{2, 1}, {0}, {0}});
  EXPECT_EQ(g.neighbor(0, 1), 2u);
  EXPECT_EQ(g.neighbor(0, 2), 1u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_THROW(Graph::from_adjacency({{1}, {}}), GraphError);
  EXPECT_THROW(Graph::from_adjacency({{0}}), GraphError);
  EXPECT_THROW(Graph::from_adjacency({{1, 1}, {0, 0}}), GraphError);
}

TEST(Degeneracy, Examples) {
  EXPECT_EQ(degeneracy(parse_edge_list("5 4\n0 1\n1 2\n1 3\n3 4")), 1u);
  EXPECT_EQ(degeneracy(testing::disjoint_cycles(1, 7)), 2u);
  EXPECT_EQ(degeneracy(parse_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3")), 3u);
}

TEST(ExactArboricity, Examples) {
  EXPECT_EQ(exact_arboricity(parse_edge_list("5 4\n0 1\n1 2\n1 3\n3 4")), 1u);
  EXPECT_EQ(exact_arboricity(parse_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3")), 2u);
  EXPECT_EQ(exact_arboricity(testing::disjoint_cycles(1, 4)), 2u);
  EXPECT_THROW(exact_arboricity(Graph::from_edges(21, {})), SizeLimitError);
}

TEST(Arboricity, DegeneracySandwichOnRandomCorpus) {
  Rng rng(11);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t n = 2 + rng.below(13);
    const Graph g = testing::random_graph(n, 0.1 + 0.8 * rng.uniform01(), rng);
    if (g.num_edges() == 0) continue;
    const ArboricityBound b = arboricity_bound(g);
    ASSERT_TRUE(b.exact_nash_williams.has_value());
    EXPECT_GE(b.degeneracy, *b.exact_nash_williams);
    EXPECT_LE(b.degeneracy, 2 * *b.exact_nash_williams - 1);
    EXPECT_GE(*b.exact_nash_williams, 1u);
  }
}

}  // namespace
}  // namespace cktest
