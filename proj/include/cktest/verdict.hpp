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

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cktest/graph.hpp"
#include "cktest/oracle.hpp"
#include "cktest/rng.hpp"

namespace cktest {

/// Accept, or Reject with a witness that was checked against the explored
/// subgraph before the verdict was built.
class Verdict {
 public:
  static Verdict accept(QueryStats queries, SeedPair seed, bool terminated = false) {
    Verdict v;
    v.queries_ = queries;
    v.seed_ = seed;
    v.terminated_ = terminated;
    return v;
  }

  static Verdict reject(std::vector<Vertex> witness, QueryStats queries, SeedPair seed) {
    Verdict v;
    v.witness_ = std::move(witness);
    v.queries_ = queries;
    v.seed_ = seed;
    return v;
  }

  bool rejected() const { return witness_.has_value(); }
  bool accepted() const { return !rejected(); }
  const std::optional<std::vector<Vertex>>& witness() const { return witness_; }
  const QueryStats& queries() const { return queries_; }
  SeedPair seed() const { return seed_; }
  /// Accepted because a query budget or cap ran out.
  bool terminated() const { return terminated_; }

  friend bool operator==(const Verdict&, const Verdict&) = default;

 private:
  Verdict() = default;

  std::optional<std::vector<Vertex>> witness_;
  QueryStats queries_;
  SeedPair seed_;
  bool terminated_ = false;
};

inline nlohmann::json to_json(const QueryStats& q) {
  return {{"degree", q.degree}, {"neighbor", q.neighbor}, {"pair", q.pair},
          {"total", q.total()}};
}

/// {verdict, witness?, queries:{degree,neighbor,pair,total}, seed}
inline nlohmann::json to_json(const Verdict& v) {
  nlohmann::json out;
  out["verdict"] = v.rejected() ? "reject" : "accept";
  if (v.witness()) out["witness"] = *v.witness();
  out["queries"] = to_json(v.queries());
  out["seed"] = {{"master", v.seed().master}, {"stream", v.seed().stream}};
  if (v.terminated()) out["terminated"] = true;
  return out;
}

}  // namespace cktest
