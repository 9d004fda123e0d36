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


// Runs the C4 tester on a far instance and on its C4-free partner.

#include <cstdio>

#include "cktest.hpp"

int main() {
  using namespace cktest;
  const LowerBoundPair pair = gen_c4_lb_pair(1 << 12);
  TesterParams p;
  p.eps = 0.1;
  p.alpha = 1;

  const DistanceBounds far = distance_bounds(*pair.g1.certificate, pair.g1.graph.num_edges());
  std::printf("G1: n=%zu m=%zu, distance to C4-free in [%.3f, %.3f]\n",
              pair.g1.graph.num_vertices(), pair.g1.graph.num_edges(), far.lower, far.upper);

  for (const Instance* inst : {&pair.g1, &pair.g0}) {
    OracleSession session(inst->graph, SeedPair{2024, 0});
    const Verdict v = test_c4(session, p);
    std::printf("%s: %s after %llu queries", inst->family.c_str(),
                v.rejected() ? "reject" : "accept",
                static_cast<unsigned long long>(v.queries().total()));
    if (v.witness()) {
      std::printf(", witness");
      for (Vertex x : *v.witness()) std::printf(" %u", x);
    }
    std::printf("\n");
  }
  return 0;
}
