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


// Tests C7-freeness of a subdivided tripartite graph without building it:
// the subdivided session answers from the base graph on demand.

#include <cstdio>

#include "cktest.hpp"

int main() {
  using namespace cktest;
  const std::size_t n_part = 30;
  const std::size_t d = 4;
  const std::size_t k = 7;
  const Instance base = gen_regular_tripartite(n_part, d, 5);
  std::printf("base: n'=%zu m'=%zu triangles=%llu\n", base.graph.num_vertices(),
              base.graph.num_edges(),
              static_cast<unsigned long long>(count_cycles(base.graph, 3)));

  OracleSession base_session(base.graph, 1);
  SubdividedOracle sim(base_session, n_part, d, k, 2);
  TesterParams p;
  p.eps = 0.5;
  p.alpha = 2;
  const std::uint64_t m = base.graph.num_edges() * 7 / 3;  // edges of the subdivision
  const Verdict v = test_ck_odd(sim, k, p, m);
  std::printf("simulated n=%zu: %s, %llu simulated queries, %llu base queries%s\n",
              sim.num_vertices(), v.rejected() ? "reject" : "accept",
              static_cast<unsigned long long>(sim.stats().total()),
              static_cast<unsigned long long>(sim.base_stats().total()),
              v.terminated() ? " (aborted)" : "");

  const Graph full = sim.materialize();
  if (v.witness()) {
    std::printf("witness valid in materialized graph: %s\n",
                WitnessSearch(k).validate_against(full, *v.witness()) ? "yes" : "no");
  }
  std::printf("C%zu count in materialized graph: %llu\n", k,
              static_cast<unsigned long long>(count_cycles(full, k)));
  return 0;
}
