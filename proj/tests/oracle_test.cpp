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


#include <cmath>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "cktest/graph.hpp"
#include "cktest/oracle.hpp"
#include "cktest/rng.hpp"
#include "support/brute_force.hpp"

namespace cktest {
namespace {

const Graph kP3 = parse_edge_list("3 2\n0 1\n1 2");
const Graph kC4 = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0");

TEST(Rng, Deterministic) {
  Rng a(42, 7);
  Rng b(42, 7);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  Rng c(42, 8);
  EXPECT_NE(Rng(42, 7).next_u64(), c.next_u64());
}

TEST(Rng, BoundedDrawsStayInRange) {
  Rng r(1);
  for (int i = 0; i < 10000; ++i) {
    EXPECT_LT(r.below(7), 7u);
    const auto x = r.between(3, 5);
    EXPECT_GE(x, 3u);
    EXPECT_LE(x, 5u);
    const double u = r.uniform01();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Rng, SubstreamIgnoresConsumption) {
  Rng a(9, 1);
  Rng b(9, 1);
  for (int i = 0; i < 17; ++i) b.next_u64();
  EXPECT_EQ(a.substream(3, 4).next_u64(), b.substream(3, 4).next_u64());
  EXPECT_NE(a.substream(3, 4).next_u64(), a.substream(3, 5).next_u64());
}

TEST(Rng, StreamKeyInjective) {
  std::set<std::uint64_t> keys;
  for (std::uint32_t n : {1u, 2u, 1024u, 0xFFFFFFFFu}) {
    for (std::uint32_t t : {0u, 1u, 199u, kGenerationTrial}) keys.insert(stream_key(n, t));
  }
  EXPECT_EQ(keys.size(), 16u);
}

TEST(Oracle, DegreeQueries) {
  OracleSession s(kP3, 1);
  EXPECT_EQ(s.degree(1), 2u);
  const Graph isolated = Graph::from_edges(2, {});
  OracleSession t(isolated, 1);
  EXPECT_EQ(t.degree(0), 0u);
  EXPECT_THROW(s.degree(3), QueryError);
  EXPECT_EQ(s.stats().degree, 1u);
}

TEST(Oracle, NeighborQueries) {
  OracleSession s(kC4, 1);
  EXPECT_EQ(s.neighbor(1, 1), 0u);
  EXPECT_EQ(s.neighbor(1, 2), 2u);
  EXPECT_THROW(s.neighbor(1, 3), QueryError);
  EXPECT_THROW(s.neighbor(1, 0), QueryError);
  const Graph star = parse_edge_list("5 4\n0 3\n0 1\n0 4\n0 2");
  OracleSession t(star, 1);
  EXPECT_EQ(t.neighbor(0, 3), 4u);
  EXPECT_TRUE(s.explored().has_edge(1, 2));
}

TEST(Oracle, PairQueries) {
  const Graph k4 = parse_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3");
  OracleSession s(k4, 1);
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = 0; v < 4; ++v) {
      if (u != v) {
        EXPECT_TRUE(s.pair(u, v));
      }
    }
  }
  OracleSession t(kP3, 1);
  EXPECT_FALSE(t.pair(0, 2));
  EXPECT_FALSE(t.explored().has_edge(0, 2));
  EXPECT_THROW(t.pair(1, 1), QueryError);
  EXPECT_EQ(t.stats().pair, 1u);
}

TEST(Oracle, BudgetExhaustion) {
  OracleSession s(kC4, 1, 3);
  s.degree(0);
  s.neighbor(0, 1);
  s.pair(0, 2);
  EXPECT_THROW(s.degree(1), QueryBudgetExhausted);
  EXPECT_EQ(s.stats().total(), 3u);
}

TEST(Oracle, TranscriptReplaysAndCountsMatch) {
  Rng rng(2);
  const Graph g = testing::random_graph(25, 0.2, rng);
  OracleSession s(g, 3);
  s.enable_transcript();
  for (int i = 0; i < 200; ++i) {
    const auto v = static_cast<Vertex>(rng.below(g.num_vertices()));
    const std::size_t d = s.degree(v);
    if (d > 0) s.neighbor(v, rng.between(1, d));
    const auto w = static_cast<Vertex>(rng.below(g.num_vertices()));
    if (w != v) s.pair(v, w);
  }
  EXPECT_EQ(s.transcript().size(), s.stats().total());
  EXPECT_FALSE(replay_transcript(g, s.transcript()).has_value());
  // Explored is a subgraph with true degrees.
  for (const Edge& e : s.explored().all_edges()) EXPECT_TRUE(g.has_edge(e.u, e.v));
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (auto d = s.explored().known_degree(v)) {
      EXPECT_EQ(*d, g.degree(v));
    }
  }
  auto altered = s.transcript();
  altered.front().answer += 1;
  EXPECT_EQ(replay_transcript(g, altered), std::optional<std::size_t>(0));
}

TEST(Oracle, TranscriptFormat) {
  OracleSession s(kC4, 1);
  s.enable_transcript();
  s.degree(0);
  s.neighbor(1, 2);
  s.pair(0, 2);
  EXPECT_EQ(format_transcript(s.transcript()), "D 0\nN 1 2 -> 2\nP 0 2 -> 0\n");
}

TEST(RandomNeighbor, StarCenterUniform) {
  const Graph star = parse_edge_list("5 4\n0 1\n0 2\n0 3\n0 4");
  OracleSession s(star, 17);
  const int draws = 100000;
  std::vector<int> hits(5, 0);
  for (int i = 0; i < draws; ++i) ++hits[random_neighbor(s, 0)];
  const double sigma = std::sqrt(draws * 0.25 * 0.75);
  for (Vertex leaf = 1; leaf <= 4; ++leaf) {
    EXPECT_NEAR(hits[leaf], draws / 4.0, 3 * sigma);
  }
  // One degree query, then one neighbor query per draw.
  EXPECT_EQ(s.stats().degree, 1u);
  EXPECT_EQ(s.stats().neighbor, static_cast<std::uint64_t>(draws));
}

TEST(RandomNeighbor, DegreeOneAndZero) {
  OracleSession s(kP3, 1);
  EXPECT_EQ(random_neighbor(s, 0), 1u);
  const Graph isolated = Graph::from_edges(1, {});
  OracleSession t(isolated, 1);
  EXPECT_THROW(random_neighbor(t, 0), QueryError);
}

TEST(RandomNeighbor, LengthTwoWalkOnFourCycle) {
  OracleSession s(kC4, 23);
  const int walks = 40000;
  int at_two = 0;
  for (int i = 0; i < walks; ++i) {
    const Vertex mid = random_neighbor(s, 0);
    if (random_neighbor(s, mid) == 2) ++at_two;
  }
  const double sigma = std::sqrt(walks * 0.25);
  EXPECT_NEAR(at_two, walks / 2.0, 3 * sigma);
}

TEST(DistinctSampling, PrefixConsistentAndDistinct) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng a(seed);
    Rng b(seed);
    const auto small = random_index_prefix(50, 10, a);
    const auto large = random_index_prefix(50, 30, b);
    ASSERT_EQ(small.size(), 10u);
    for (std::size_t i = 0; i < small.size(); ++i) EXPECT_EQ(small[i], large[i]);
    std::set<std::size_t> distinct(large.begin(), large.end());
    EXPECT_EQ(distinct.size(), large.size());
    for (std::size_t x : large) {
      EXPECT_GE(x, 1u);
      EXPECT_LE(x, 50u);
    }
  }
}

TEST(DistinctSampling, ClampsToFullNeighborhood) {
  OracleSession s(kC4, 5);
  const auto all = sample_distinct_neighbors(s, 0, 10);
  EXPECT_EQ(all, (std::vector<Vertex>{1, 3}));
}

TEST(DistinctSampling, MarginalIsUniform) {
  // Position 0 of a uniform permutation prefix is uniform over 1..d.
  Rng rng(8);
  const int draws = 60000;
  std::vector<int> hits(7, 0);
  for (int i = 0; i < draws; ++i) ++hits[random_index_prefix(6, 3, rng)[2]];
  const double sigma = std::sqrt(draws * (1.0 / 6) * (5.0 / 6));
  for (int x = 1; x <= 6; ++x) EXPECT_NEAR(hits[x], draws / 6.0, 4 * sigma);
}

}  // namespace
}  // namespace cktest
