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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cktest/graph.hpp"

namespace cktest {

/// Every tunable of the testers. Multipliers stand in for the unspecified
/// constants of the asymptotic sample sizes; defaults are frozen here.
///
/// Logarithms are natural logarithms throughout.
struct TesterParams {
  double eps = 0.1;
  double alpha = 1.0;

  double c1 = 1.0;             // theta1 constant
  double t_mult = 500.0;       // C4/C5 repetitions: ceil(t_mult / eps)
  double s1_mult = 512.0;      // ceil(s1_mult * sqrt(d(v) / eps)) neighbors
  double s2_mult = 1.0;        // walk count constant
  double c6_t_mult = 0.02;     // C6 repetitions: ceil(c6_t_mult * ln^3 n / eps^3)
  double s_mult = 1.0;         // vertex/edge sample constant (general F, odd k)
  double cap_mult = 1.0;       // average-degree query cap (general F)
  double select_mult = 8.0;    // Select-an-Edge rounds: ceil(select_mult * theta0)
  double edge_loop_mult = 20;  // uniform low-edge sampler round cap

  /// Throws Error on an out-of-range field.
  void validate() const {
    if (!(eps > 0.0 && eps <= 1.0)) throw Error("eps must be in (0, 1]");
    if (!(alpha >= 1.0)) throw Error("alpha must be >= 1");
    for (const auto& [name, value] : multipliers()) {
      if (!(value > 0.0) || !std::isfinite(value)) {
        throw Error("parameter '" + name + "' must be positive");
      }
    }
  }

  std::map<std::string, double> multipliers() const {
    return {{"c1", c1},           {"t_mult", t_mult},
            {"s1_mult", s1_mult}, {"s2_mult", s2_mult},
            {"c6_t_mult", c6_t_mult}, {"s_mult", s_mult},
            {"cap_mult", cap_mult},   {"select_mult", select_mult},
            {"edge_loop_mult", edge_loop_mult}};
  }

  /// Sets a field by name ("eps", "alpha" or any multiplier).
  void set(const std::string& key, double value) {
    double* field = nullptr;
    if (key == "eps") field = &eps;
    else if (key == "alpha") field = &alpha;
    else if (key == "c1") field = &c1;
    else if (key == "t_mult") field = &t_mult;
    else if (key == "s1_mult") field = &s1_mult;
    else if (key == "s2_mult") field = &s2_mult;
    else if (key == "c6_t_mult") field = &c6_t_mult;
    else if (key == "s_mult") field = &s_mult;
    else if (key == "cap_mult") field = &cap_mult;
    else if (key == "select_mult") field = &select_mult;
    else if (key == "edge_loop_mult") field = &edge_loop_mult;
    if (field == nullptr) throw Error("unknown parameter '" + key + "'");
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw Error("parameter '" + key + "' must be positive");
    }
    *field = value;
  }

  /// Applies "key=value".
  void apply_override(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error("override '" + assignment + "' is not key=value");
    }
    const std::string key = assignment.substr(0, eq);
    const std::string text = assignment.substr(eq + 1);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) {
      throw Error("override '" + assignment + "' has a non-numeric value");
    }
    set(key, value);
  }

  double theta0() const { return 4.0 * alpha / eps; }

  double theta1_c4(std::size_t n) const {
    return c1 * std::sqrt(static_cast<double>(n)) / eps;
  }

  double theta1_c6(std::size_t n) const {
    const double ln = log_n(n);
    return c1 * std::sqrt(static_cast<double>(n)) * ln * ln / (eps * eps);
  }

  double theta_min_c4(std::size_t n) const { return std::min(theta0(), theta1_c4(n)); }

  std::size_t repetitions_c4() const { return ceil_count(t_mult / eps); }

  std::size_t s1(std::size_t degree) const {
    return ceil_count(s1_mult * std::sqrt(static_cast<double>(degree) / eps));
  }

  /// Length-2 walks for the C4 high branch.
  std::size_t s2_c4(std::size_t n) const {
    const double nn = static_cast<double>(n);
    return std::max<std::size_t>(
        1, ceil_count(s2_mult * std::sqrt(nn * alpha / theta1_c4(n) * log_n(n)) /
                      (eps * eps)));
  }

  /// Length-3 walks for the C5 high branch.
  std::size_t s2_c5(std::size_t n) const {
    const double nn = static_cast<double>(n);
    return std::max<std::size_t>(
        1, ceil_count(s2_mult * std::pow(eps, -3.0) *
                      std::sqrt(nn * log_n(n) / theta1_c4(n))));
  }

  std::size_t repetitions_c6(std::size_t n) const {
    const double ln = log_n(n);
    return std::max<std::size_t>(1, ceil_count(c6_t_mult * ln * ln * ln / std::pow(eps, 3.0)));
  }

  static double log_n(std::size_t n) {
    return n < 2 ? 0.0 : std::log(static_cast<double>(n));
  }

  /// ceil for non-negative counts, saturating instead of overflowing.
  static std::size_t ceil_count(double x) {
    if (!(x > 0.0)) return 0;
    if (x >= 9.0e18) return static_cast<std::size_t>(9.0e18);
    return static_cast<std::size_t>(std::ceil(x - 1e-9));
  }
};

}  // namespace cktest
