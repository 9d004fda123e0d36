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
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cktest/explored.hpp"
#include "cktest/graph.hpp"
#include "cktest/rng.hpp"

namespace cktest {

struct QueryStats {
  std::uint64_t degree = 0;
  std::uint64_t neighbor = 0;
  std::uint64_t pair = 0;

  std::uint64_t total() const { return degree + neighbor + pair; }

  friend bool operator==(const QueryStats&, const QueryStats&) = default;
};

/// Query that violates the access contract (bad id, index past degree).
class QueryError : public Error {
 public:
  using Error::Error;
};

/// A session stopped answering. Testers translate this into Accept: no
/// witness was found, and one-sided error forbids rejecting without one.
class SessionTerminated : public Error {
 public:
  using Error::Error;
};

class QueryBudgetExhausted : public SessionTerminated {
 public:
  explicit QueryBudgetExhausted(std::uint64_t budget)
      : SessionTerminated("query budget of " + std::to_string(budget) +
                          " exhausted") {}
};

struct QueryRecord {
  enum class Type : char { kDegree = 'D', kNeighbor = 'N', kPair = 'P' };

  Type type = Type::kDegree;
  Vertex a = 0;
  std::uint64_t b = 0;  // neighbor index or second pair vertex
  std::uint64_t answer = 0;

  friend bool operator==(const QueryRecord&, const QueryRecord&) = default;
};

/// "D v" / "N v i -> u" / "P u v -> 0|1".
inline std::string format_record(const QueryRecord& r) {
  std::ostringstream out;
  switch (r.type) {
    case QueryRecord::Type::kDegree:
      out << "D " << r.a;
      break;
    case QueryRecord::Type::kNeighbor:
      out << "N " << r.a << ' ' << r.b << " -> " << r.answer;
      break;
    case QueryRecord::Type::kPair:
      out << "P " << r.a << ' ' << r.b << " -> " << r.answer;
      break;
  }
  return out.str();
}

inline std::string format_transcript(const std::vector<QueryRecord>& records) {
  std::string text;
  for (const QueryRecord& r : records) {
    text += format_record(r);
    text += '\n';
  }
  return text;
}

/// Replays recorded queries against `g`. Returns the index of the first
/// record whose answer differs, or nullopt if all match.
inline std::optional<std::size_t> replay_transcript(
    const Graph& g, const std::vector<QueryRecord>& records) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    const QueryRecord& r = records[i];
    if (r.a >= g.num_vertices()) return i;
    std::uint64_t answer = 0;
    switch (r.type) {
      case QueryRecord::Type::kDegree:
        answer = g.degree(r.a);
        break;
      case QueryRecord::Type::kNeighbor:
        if (r.b < 1 || r.b > g.degree(r.a)) return i;
        answer = g.neighbor(r.a, r.b);
        break;
      case QueryRecord::Type::kPair:
        if (r.b >= g.num_vertices()) return i;
        answer = g.has_edge(r.a, static_cast<Vertex>(r.b)) ? 1 : 0;
        break;
    }
    if (answer != r.answer) return i;
  }
  return std::nullopt;
}

/// What a tester needs from its graph access: the three query types, a
/// random source, and the explored subgraph the answers have built.
template <typename O>
concept QueryOracle = requires(O& o, const O& co, Vertex v, std::size_t i) {
  { co.num_vertices() } -> std::convertible_to<std::size_t>;
  { o.degree(v) } -> std::convertible_to<std::size_t>;
  { o.neighbor(v, i) } -> std::convertible_to<Vertex>;
  { o.pair(v, v) } -> std::convertible_to<bool>;
  { o.rng() } -> std::same_as<Rng&>;
  { o.explored() } -> std::same_as<ExploredGraph&>;
  { co.explored() } -> std::same_as<const ExploredGraph&>;
  { co.stats() } -> std::convertible_to<QueryStats>;
};

/// Query-counting, budget-enforcing view of a Graph.
class OracleSession {
 public:
  OracleSession(const Graph& graph, SeedPair seed,
                std::optional<std::uint64_t> budget = std::nullopt)
      : graph_(&graph), rng_(seed), budget_(budget) {}
  OracleSession(const Graph& graph, std::uint64_t seed,
                std::optional<std::uint64_t> budget = std::nullopt)
      : OracleSession(graph, SeedPair{seed, 0}, budget) {}

  const Graph& graph() const { return *graph_; }
  std::size_t num_vertices() const { return graph_->num_vertices(); }

  std::size_t degree(Vertex v) {
    check_vertex(v);
    charge();
    ++stats_.degree;
    const std::size_t d = graph_->degree(v);
    explored_.add_vertex(v);
    explored_.set_degree(v, d);
    record({QueryRecord::Type::kDegree, v, 0, d});
    return d;
  }

  /// 1-based index, as in the query model.
  Vertex neighbor(Vertex v, std::size_t i) {
    check_vertex(v);
    if (i < 1 || i > graph_->degree(v)) {
      throw QueryError("neighbor(" + std::to_string(v) + ", " +
                       std::to_string(i) + "): index outside [1, " +
                       std::to_string(graph_->degree(v)) + "]");
    }
    charge();
    ++stats_.neighbor;
    const Vertex u = graph_->neighbor(v, i);
    explored_.add_vertex(v);
    explored_.add_vertex(u);
    explored_.add_edge(v, u);
    record({QueryRecord::Type::kNeighbor, v, i, u});
    return u;
  }

  bool pair(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw QueryError("pair(" + std::to_string(u) + ", " + std::to_string(v) +
                       "): vertices must differ");
    }
    charge();
    ++stats_.pair;
    const bool present = graph_->has_edge(u, v);
    explored_.add_vertex(u);
    explored_.add_vertex(v);
    if (present) explored_.add_edge(u, v);
    record({QueryRecord::Type::kPair, u, v, present ? 1u : 0u});
    return present;
  }

  Rng& rng() { return rng_; }
  ExploredGraph& explored() { return explored_; }
  const ExploredGraph& explored() const { return explored_; }
  const QueryStats& stats() const { return stats_; }
  std::optional<std::uint64_t> budget() const { return budget_; }

  void enable_transcript() { recording_ = true; }
  const std::vector<QueryRecord>& transcript() const { return transcript_; }

 private:
  void check_vertex(Vertex v) const {
    if (v >= graph_->num_vertices()) {
      throw QueryError("vertex " + std::to_string(v) + " outside [0, " +
                       std::to_string(graph_->num_vertices()) + ")");
    }
  }

  void charge() const {
    if (budget_ && stats_.total() >= *budget_) throw QueryBudgetExhausted(*budget_);
  }

  void record(const QueryRecord& r) {
    if (recording_) transcript_.push_back(r);
  }

  const Graph* graph_;
  Rng rng_;
  std::optional<std::uint64_t> budget_;
  QueryStats stats_;
  ExploredGraph explored_;
  bool recording_ = false;
  std::vector<QueryRecord> transcript_;
};

static_assert(QueryOracle<OracleSession>);

/// Degree from what the session already revealed, else one degree query.
template <QueryOracle O>
std::size_t degree_of(O& oracle, Vertex v) {
  if (auto known = std::as_const(oracle).explored().known_degree(v)) return *known;
  return oracle.degree(v);
}

/// Uniform neighbor of v with replacement: one neighbor query once d(v)
/// is known.
template <QueryOracle O>
Vertex random_neighbor(O& oracle, Vertex v, Rng& rng) {
  const std::size_t d = degree_of(oracle, v);
  if (d == 0) {
    throw QueryError("random_neighbor(" + std::to_string(v) + "): degree 0");
  }
  return oracle.neighbor(v, rng.between(1, d));
}

template <QueryOracle O>
Vertex random_neighbor(O& oracle, Vertex v) {
  return random_neighbor(oracle, v, oracle.rng());
}

/// Queries every neighbor of v, in order.
template <QueryOracle O>
void expand_all(O& oracle, Vertex v) {
  const std::size_t d = degree_of(oracle, v);
  for (std::size_t i = 1; i <= d; ++i) oracle.neighbor(v, i);
}

/// First s entries of a uniform random permutation of 1..d, drawn by a
/// forward Fisher-Yates pass that stores only displaced slots. The result
/// for s is a prefix of the result for any larger s on the same stream.
inline std::vector<std::size_t> random_index_prefix(std::size_t d, std::size_t s, Rng& rng) {
  s = std::min(s, d);
  std::unordered_map<std::size_t, std::size_t> displaced;
  auto slot = [&](std::size_t i) {
    auto it = displaced.find(i);
    return it == displaced.end() ? i : it->second;
  };
  std::vector<std::size_t> out;
  out.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    const std::size_t j = i + rng.below(d - i);
    const std::size_t picked = slot(j);
    displaced[j] = slot(i);
    out.push_back(picked + 1);
  }
  return out;
}

/// s distinct uniform neighbors of v; all of them, in order, when s >= d(v).
template <QueryOracle O>
std::vector<Vertex> sample_distinct_neighbors(O& oracle, Vertex v, std::size_t s, Rng& rng) {
  const std::size_t d = degree_of(oracle, v);
  std::vector<Vertex> out;
  if (s >= d) {
    out.reserve(d);
    for (std::size_t i = 1; i <= d; ++i) out.push_back(oracle.neighbor(v, i));
    return out;
  }
  out.reserve(s);
  for (std::size_t i : random_index_prefix(d, s, rng)) out.push_back(oracle.neighbor(v, i));
  return out;
}

template <QueryOracle O>
std::vector<Vertex> sample_distinct_neighbors(O& oracle, Vertex v, std::size_t s) {
  return sample_distinct_neighbors(oracle, v, s, oracle.rng());
}

}  // namespace cktest
