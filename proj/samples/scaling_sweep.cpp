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


// Small query-scaling sweep of the C4 tester on G1, written as CSV.

#include <cstdio>
#include <iostream>

#include "cktest.hpp"

int main() {
  using namespace cktest;
  ExperimentSpec spec;
  spec.tester = "c4";
  spec.family = "c4_lb_g1";
  spec.n_sweep = {1 << 10, 1 << 11, 1 << 12, 1 << 13, 1 << 14};
  spec.eps = 0.1;
  spec.alpha = 1;
  spec.overrides = {{"s1_mult", 1.0}};
  spec.trials = 50;
  spec.master_seed = 7;

  const auto rows = run_experiment(spec);
  write_csv(std::cout, spec, rows);
  const ScalingFit fit = fit_scaling(rows);
  std::fprintf(stderr, "slope %.3f, R^2 %.3f\n", fit.slope, fit.r2);
  return 0;
}
