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


#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "cktest/exact.hpp"
#include "cktest/generators.hpp"
#include "support/brute_force.hpp"

namespace cktest {
namespace {

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.num_vertices(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

void expect_valid_certificate(const Instance& inst) {
  ASSERT_TRUE(inst.certificate.has_value());
  EXPECT_TRUE(is_edge_disjoint_cycle_set(inst.graph, *inst.certificate));
}

TEST(C4Pair, SmallestSize) {
  const auto pair = gen_c4_lb_pair(13);
  EXPECT_EQ(pair.g0.graph.num_vertices(), 13u);
  EXPECT_EQ(pair.g0.graph.num_edges(), 6u);
  EXPECT_TRUE(is_free(pair.g0.graph, 4));
  EXPECT_EQ(pair.g1.certificate->size(), 1u);
  EXPECT_THROW(gen_c4_lb_pair(12), Error);
}

TEST(C4Pair, Structure) {
  for (std::size_t n : {13u, 100u, 500u, 2000u}) {
    const auto pair = gen_c4_lb_pair(n);
    const Graph& g0 = pair.g0.graph;
    const Graph& g1 = pair.g1.graph;
    EXPECT_EQ(g0.num_vertices(), n);
    EXPECT_EQ(g1.num_vertices(), n);
    EXPECT_TRUE(is_free(g0, 4)) << n;
    expect_valid_certificate(pair.g1);
    const std::size_t y0 = pair.g0.parameters["y0"];
    const std::size_t x1 = pair.g1.parameters["x1"];
    EXPECT_EQ(pair.g1.certificate->size(), x1 / 2);
    EXPECT_EQ(g0.max_degree(), y0 - 1);
    EXPECT_EQ(g1.max_degree(), y0 - 1);
    // X vertices have degree 2 in both graphs.
    for (Vertex v = 0; v < n; ++v) {
      if (pair.g0.part[v] == 1) {
        EXPECT_EQ(g0.degree(v), 2u);
      }
      if (pair.g1.part[v] == 2 || pair.g1.part[v] == 3) {
        EXPECT_EQ(g1.degree(v), 2u);
      }
    }
  }
}

TEST(C4Pair, GreedyMatchesCertificate) {
  const auto pair = gen_c4_lb_pair(500);
  EXPECT_EQ(greedy_edge_disjoint(pair.g1.graph, 4).size(), 225u);
  EXPECT_EQ(count_cycles(pair.g0.graph, 4), 0u);
}

TEST(C5Pair, Structure) {
  for (std::size_t n : {7u, 60u, 500u}) {
    const auto pair = gen_c5_lb_pair(n);
    const Graph& g0 = pair.g0.graph;
    EXPECT_EQ(g0.num_vertices(), n);
    EXPECT_EQ(pair.g1.graph.num_vertices(), n);
    EXPECT_TRUE(is_free(g0, 4));
    EXPECT_TRUE(is_free(g0, 5));
    expect_valid_certificate(pair.g1);
    const std::size_t y0 = pair.g0.parameters["y0"];
    EXPECT_EQ(g0.max_degree(), y0 - 1);
    EXPECT_EQ(pair.g1.graph.max_degree(), y0 - 1);
  }
  const auto pair = gen_c5_lb_pair(500);
  EXPECT_EQ(pair.g0.parameters["y0"], 25);
  EXPECT_EQ(greedy_edge_disjoint(pair.g1.graph, 5).size(), 144u);
  EXPECT_THROW(gen_c5_lb_pair(6), Error);
}

TEST(DistD, LayoutExample) {
  const DistDLayout L = dist_d_layout(1 << 12, 16);
  EXPECT_EQ(L.d, 16u);
  EXPECT_EQ(L.x_part, 1024u);
  EXPECT_EQ(L.y_part, 1024u);
  EXPECT_EQ(L.z, 0u);
  EXPECT_THROW(dist_d_layout(1 << 12, 3), Error);
  EXPECT_THROW(dist_d_layout(1 << 12, 32), Error);
  EXPECT_THROW(dist_d_layout(30, 2), Error);
}

TEST(DistD, DegreesAndParts) {
  for (std::size_t alpha : {2u, 4u, 6u}) {
    const Instance inst = gen_dist_D(5000, alpha, 3);
    const DistDLayout L = dist_d_layout(5000, alpha);
    const Graph& g = inst.graph;
    EXPECT_EQ(g.num_vertices(), 5000u);
    EXPECT_EQ(g.num_edges(), 4 * L.block_edges);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const std::uint8_t p = inst.part[v];
      if (p <= 1) {
        EXPECT_EQ(g.degree(v), alpha);
      } else if (p <= 3) {
        EXPECT_EQ(g.degree(v), L.d);
      } else {
        EXPECT_EQ(g.degree(v), 0u);
      }
    }
    for (const Edge& e : g.edges()) EXPECT_NE(inst.part[e.u] <= 1, inst.part[e.v] <= 1);
    EXPECT_LE(arboricity_bound(g).degeneracy, alpha);
  }
}

TEST(DistD, SeedDeterminism) {
  EXPECT_EQ(to_edge_list(gen_dist_D(2048, 4, 9).graph), to_edge_list(gen_dist_D(2048, 4, 9).graph));
  EXPECT_NE(to_edge_list(gen_dist_D(2048, 4, 9).graph),
            to_edge_list(gen_dist_D(2048, 4, 10).graph));
}

TEST(Planted, Profiles) {
  struct Case {
    std::size_t k;
    PlantedProfile profile;
  };
  const Case cases[] = {{4, PlantedProfile::kAllLight},  {4, PlantedProfile::kOneHeavy},
                        {4, PlantedProfile::kTwoHeavy},  {5, PlantedProfile::kTwoHeavy},
                        {5, PlantedProfile::kAllLight},  {6, PlantedProfile::kThreeHeavy},
                        {6, PlantedProfile::kOneHeavy},  {7, PlantedProfile::kAllLight}};
  for (const Case& c : cases) {
    PlantedSpec spec;
    spec.n = 4096;
    spec.k = c.k;
    spec.profile = c.profile;
    const Instance inst = gen_planted(spec, 5);
    SCOPED_TRACE(profile_name(c.profile) + " k=" + std::to_string(c.k));
    EXPECT_EQ(inst.graph.num_vertices(), 4096u);
    expect_valid_certificate(inst);
    const double lower = static_cast<double>(inst.certificate->size()) /
                         static_cast<double>(inst.graph.num_edges());
    EXPECT_GE(lower * static_cast<double>(c.k), spec.eps_target - 1e-12);
    TesterParams p;
    p.eps = spec.eps_target;
    p.alpha = spec.alpha_target;
    const auto max_deg = static_cast<double>(inst.graph.max_degree());
    if (c.profile == PlantedProfile::kAllLight) {
      EXPECT_LE(max_deg, p.theta0());
    } else if (c.profile == PlantedProfile::kTwoHeavy) {
      EXPECT_GT(max_deg, p.theta1_c4(4096));
    } else {
      EXPECT_GT(max_deg, p.theta0());
    }
  }
}

TEST(Planted, AllLightFullDensity) {
  PlantedSpec spec;
  spec.n = 400;
  spec.k = 4;
  spec.eps_target = 1.0;
  const Instance inst = gen_planted(spec, 3);
  EXPECT_EQ(inst.graph.num_edges(), 400u);
  EXPECT_EQ(inst.certificate->size(), 100u);
  EXPECT_EQ(greedy_edge_disjoint(inst.graph, 4).size(), 100u);
}

TEST(Planted, DegeneracyWithinTarget) {
  for (auto profile : {PlantedProfile::kAllLight, PlantedProfile::kOneHeavy,
                       PlantedProfile::kTwoHeavy}) {
    PlantedSpec spec;
    spec.n = 4096;
    spec.k = 4;
    spec.profile = profile;
    EXPECT_LE(static_cast<double>(degeneracy(gen_planted(spec, 1).graph)),
              spec.alpha_target + 2);
  }
}

TEST(Planted, ThreeHeavyCertificateAndErrors) {
  PlantedSpec spec;
  spec.n = 4096;
  spec.k = 6;
  spec.profile = PlantedProfile::kThreeHeavy;
  EXPECT_EQ(gen_planted(spec, 1).certificate->size(), 82u);
  spec.k = 4;
  EXPECT_THROW(gen_planted(spec, 1), Error);
  spec.profile = PlantedProfile::kAllLight;
  spec.n = 3;
  EXPECT_THROW(gen_planted(spec, 1), Error);
  EXPECT_THROW(parse_profile("four-heavy"), Error);
  EXPECT_EQ(parse_profile("two-heavy"), PlantedProfile::kTwoHeavy);
}

TEST(Planted, TwoHeavyHubDegree) {
  PlantedSpec spec;
  spec.n = 4096;
  spec.k = 4;
  spec.profile = PlantedProfile::kTwoHeavy;
  EXPECT_EQ(default_hub_degree(spec), 642u);
  const Instance inst = gen_planted(spec, 2);
  EXPECT_EQ(inst.graph.max_degree(), 642u);
  EXPECT_EQ(greedy_edge_disjoint(inst.graph, 4).size(), 321u);
}

TEST(Forest, Acyclic) {
  const Instance inst = gen_forest(3000, 4);
  EXPECT_LT(inst.graph.num_edges(), 3000u);
  for (std::size_t k = 3; k <= 6; ++k) EXPECT_TRUE(is_free(inst.graph, k));
  EXPECT_EQ(gen_forest(500, 1, 0.0).graph.num_edges(), 499u);
}

TEST(HighGirth, NoShortCycles) {
  const Instance inst = gen_high_girth(2000, 3000, 8, true, 7);
  EXPECT_GT(inst.graph.num_edges(), 2000u);
  for (std::size_t k = 3; k < 8; ++k) EXPECT_TRUE(is_free(inst.graph, k)) << k;
  for (const Edge& e : inst.graph.edges()) EXPECT_NE(inst.part[e.u], inst.part[e.v]);
  const Instance odd = gen_high_girth(1000, 1200, 6, false, 7);
  for (std::size_t k = 3; k < 6; ++k) EXPECT_TRUE(is_free(odd.graph, k)) << k;
}

TEST(StarForest, Shape) {
  const Instance inst = gen_star_forest(10, 3);
  EXPECT_EQ(inst.graph.num_vertices(), 40u);
  EXPECT_EQ(inst.graph.num_edges(), 30u);
  EXPECT_EQ(count_pattern(inst.graph, star_pattern(3)), 10u);
}

TEST(Tripartite, RegularDegrees) {
  const Instance inst = gen_regular_tripartite(50, 6, 3);
  EXPECT_EQ(sorted_degrees(inst.graph), std::vector<std::size_t>(150, 6));
  EXPECT_NO_THROW(check_tripartite(inst.graph, inst.part));
  for (Vertex v = 0; v < 150; ++v) EXPECT_EQ(inst.part[v], v / 50);
}

TEST(Tripartite, TriangleFree) {
  const Instance inst = gen_triangle_free_tripartite(40, 6, 3);
  EXPECT_EQ(sorted_degrees(inst.graph), std::vector<std::size_t>(120, 6));
  EXPECT_NO_THROW(check_tripartite(inst.graph, inst.part));
  EXPECT_TRUE(is_free(inst.graph, 3));
  EXPECT_THROW(gen_triangle_free_tripartite(7, 6, 3), Error);
}

TEST(Subdivision, Lengths) {
  const auto l6 = subdivision_lengths(6);
  EXPECT_EQ(l6.l01 + l6.l12 + l6.l02, 6u);
  EXPECT_EQ(l6.l01, 2u);
  const auto l7 = subdivision_lengths(7);
  EXPECT_EQ(l7.between(1, 0), 3u);
  EXPECT_EQ(l7.between(2, 1), 2u);
  EXPECT_EQ(l7.between(0, 2), 2u);
  const auto l8 = subdivision_lengths(8);
  EXPECT_EQ(l8.l01 + l8.l12 + l8.l02, 8u);
  EXPECT_THROW(l8.between(1, 1), Error);
  EXPECT_THROW(subdivision_lengths(5), Error);
}

TEST(Subdivision, TrianglesBecomeCycles) {
  const Instance base = gen_regular_tripartite(8, 4, 11);
  const std::uint64_t triangles = count_cycles(base.graph, 3);
  ASSERT_GT(triangles, 0u);
  for (std::size_t k : {6u, 7u, 9u}) {
    const Instance sub = subdivide_for_ck(base.graph, base.part, k);
    EXPECT_EQ(count_cycles(sub.graph, k), triangles) << k;
    EXPECT_EQ(sub.graph.num_vertices(),
              base.graph.num_vertices() + [&] {
                std::size_t extra = 0;
                const auto len = subdivision_lengths(k);
                for (const Edge& e : base.graph.edges()) {
                  extra += len.between(base.part[e.u], base.part[e.v]) - 1;
                }
                return extra;
              }());
  }
}

// At k = 8 the P0-P2 paths have length 2, so a 4-cycle alternating between
// P0 and P2 also becomes an 8-cycle.
TEST(Subdivision, EightCyclesFromFourCycles) {
  const Graph g = parse_edge_list("4 4\n0 2\n2 1\n1 3\n3 0");
  const std::vector<std::uint8_t> part = {0, 0, 2, 2};
  const Instance sub = subdivide_for_ck(g, part, 8);
  EXPECT_EQ(count_cycles(g, 3), 0u);
  EXPECT_EQ(count_cycles(sub.graph, 8), 1u);
}

TEST(Subdivision, RejectsNonTripartite) {
  const Graph g = parse_edge_list("3 1\n0 1");
  EXPECT_THROW(check_tripartite(g, {0, 0, 1}), Error);
  EXPECT_THROW(check_tripartite(g, {0, 3, 1}), Error);
  EXPECT_THROW(check_tripartite(g, {0, 1}), Error);
}

TEST(Metadata, WriteInstanceRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "cktest_gen_roundtrip.edgelist";
  const Instance inst = gen_c4_lb_pair(100).g1;
  TesterParams p;
  write_instance(inst, path.string(), p);
  std::ifstream in(path);
  const Graph back = load_edge_list(in);
  EXPECT_EQ(to_edge_list(back), to_edge_list(inst.graph));
  std::ifstream meta_in(path.string() + ".meta.json");
  const auto meta = nlohmann::json::parse(meta_in);
  EXPECT_EQ(meta["family"], "c4_lb_g1");
  EXPECT_EQ(meta["m"], inst.graph.num_edges());
  EXPECT_EQ(meta["certificate"]["cycles"].size(), inst.certificate->size());
  EXPECT_EQ(meta["parts"]["labels"].size(), 100u);
  EXPECT_DOUBLE_EQ(meta["degree_classes"]["theta0"].get<double>(), p.theta0());
  std::filesystem::remove(path);
  std::filesystem::remove(path.string() + ".meta.json");
}

TEST(Relabel, PreservesStructure) {
  Instance inst = gen_c4_lb_pair(200).g1;
  const auto before = sorted_degrees(inst.graph);
  Rng rng(3);
  relabel(inst, random_permutation(200, rng));
  EXPECT_EQ(sorted_degrees(inst.graph), before);
  expect_valid_certificate(inst);
}

}  // namespace
}  // namespace cktest
