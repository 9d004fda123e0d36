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
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace cktest {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Order-independent 64-bit key of an undirected edge.
constexpr std::uint64_t edge_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input too large for an exhaustive routine.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class GraphError : public Error {
 public:
  enum class Kind { kMalformed, kOutOfRange, kSelfLoop, kDuplicate };

  GraphError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists keep edge insertion order: adding {u,v} appends v to u's
/// list and u to v's list. A sorted copy backs adjacency tests.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on out-of-range ids, self-loops and duplicates.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.n_ = n;
    g.edges_.assign(edges.begin(), edges.end());
    std::vector<std::size_t> deg(n, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge& e = edges[i];
      if (e.u >= n || e.v >= n) {
        throw GraphError(GraphError::Kind::kOutOfRange,
                         "edge " + std::to_string(i) + ": vertex id out of " +
                             "range [0, " + std::to_string(n) + ")");
      }
      if (e.u == e.v) {
        throw GraphError(GraphError::Kind::kSelfLoop,
                         "edge " + std::to_string(i) + ": self-loop at " +
                             std::to_string(e.u));
      }
      ++deg[e.u];
      ++deg[e.v];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adjacency_.resize(g.offsets_[n]);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : edges) {
      g.adjacency_[cursor[e.u]++] = e.v;
      g.adjacency_[cursor[e.v]++] = e.u;
    }
    g.sorted_ = g.adjacency_;
    for (std::size_t v = 0; v < n; ++v) {
      auto first = g.sorted_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
      auto last = g.sorted_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
      std::sort(first, last);
      auto dup = std::adjacent_find(first, last);
      if (dup != last) {
        throw GraphError(GraphError::Kind::kDuplicate,
                         "duplicate edge {" + std::to_string(v) + ", " +
                             std::to_string(*dup) + "}");
      }
    }
    return g;
  }

  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds a graph whose neighbor lists are exactly `adjacency`. The edge
  /// list is derived: {u, v} with u < v, ordered by u, then by position in
  /// u's list. Throws GraphError unless the lists are simple and symmetric.
  static Graph from_adjacency(const std::vector<std::vector<Vertex>>& adjacency) {
    const std::size_t n = adjacency.size();
    Graph g;
    g.n_ = n;
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
      g.offsets_[v + 1] = g.offsets_[v] + adjacency[v].size();
    }
    g.adjacency_.reserve(g.offsets_[n]);
    for (std::size_t v = 0; v < n; ++v) {
      for (Vertex w : adjacency[v]) {
        if (w >= n) {
          throw GraphError(GraphError::Kind::kOutOfRange,
                           "neighbor " + std::to_string(w) + " of " + std::to_string(v) +
                               " out of range");
        }
        if (w == v) {
          throw GraphError(GraphError::Kind::kSelfLoop,
                           "self-loop at " + std::to_string(v));
        }
        g.adjacency_.push_back(w);
        if (v < w) g.edges_.push_back({static_cast<Vertex>(v), w});
      }
    }
    g.sorted_ = g.adjacency_;
    for (std::size_t v = 0; v < n; ++v) {
      auto first = g.sorted_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
      auto last = g.sorted_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
      std::sort(first, last);
      if (auto dup = std::adjacent_find(first, last); dup != last) {
        throw GraphError(GraphError::Kind::kDuplicate,
                         "duplicate edge {" + std::to_string(v) + ", " +
                             std::to_string(*dup) + "}");
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      for (Vertex w : adjacency[v]) {
        auto back = g.sorted_neighbors(w);
        if (!std::binary_search(back.begin(), back.end(), static_cast<Vertex>(v))) {
          throw GraphError(GraphError::Kind::kMalformed,
                           "adjacency not symmetric at {" + std::to_string(v) + ", " +
                               std::to_string(w) + "}");
        }
      }
    }
    return g;
  }

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Neighbors in insertion order.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], degree(v)};
  }

  /// Neighbors in increasing id order.
  std::span<const Vertex> sorted_neighbors(Vertex v) const {
    return {sorted_.data() + offsets_[v], degree(v)};
  }

  /// 1-based i-th neighbor, the query-model convention.
  Vertex neighbor(Vertex v, std::size_t i) const {
    return adjacency_[offsets_[v] + i - 1];
  }

  bool has_edge(Vertex u, Vertex v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = sorted_neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Edges in insertion order.
  std::span<const Edge> edges() const { return edges_; }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<Vertex> sorted_;
};

/// Reads "n m" followed by m lines "u v". Blank lines are skipped.
inline Graph load_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto malformed = [&](const std::string& why) {
    return GraphError(GraphError::Kind::kMalformed,
                      "line " + std::to_string(line_no) + ": " + why);
  };
  auto parse_pair = [&](const std::string& text, long long& a, long long& b) {
    std::istringstream fields(text);
    std::string extra;
    if (!(fields >> a >> b)) throw malformed("expected two integers");
    if (fields >> extra) throw malformed("trailing text '" + extra + "'");
  };

  if (!next_line(line)) throw malformed("missing 'n m' header");
  long long n = 0;
  long long m = 0;
  parse_pair(line, n, m);
  if (n < 0 || m < 0) throw malformed("negative header value");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line)) {
      throw malformed("expected " + std::to_string(m) + " edges, found " +
                      std::to_string(i));
    }
    long long a = 0;
    long long b = 0;
    parse_pair(line, a, b);
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw GraphError(GraphError::Kind::kOutOfRange,
                       "line " + std::to_string(line_no) + ": vertex id out " +
                           "of range [0, " + std::to_string(n) + ")");
    }
    if (a == b) {
      throw GraphError(GraphError::Kind::kSelfLoop,
                       "line " + std::to_string(line_no) + ": self-loop at " +
                           std::to_string(a));
    }
    auto u = static_cast<Vertex>(a);
    auto v = static_cast<Vertex>(b);
    if (!seen.insert(edge_key(u, v)).second) {
      throw GraphError(GraphError::Kind::kDuplicate,
                       "line " + std::to_string(line_no) + ": duplicate edge {" +
                           std::to_string(a) + ", " + std::to_string(b) + "}");
    }
    edges.push_back({u, v});
  }
  if (next_line(line)) throw malformed("unexpected content after last edge");
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

inline void save_edge_list(const Graph& g, std::ostream& out) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  save_edge_list(g, out);
  return out.str();
}

/// Max over the smallest-last peeling order of the minimum remaining degree.
/// Bucket queue, O(n + m).
inline std::size_t degeneracy(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return 0;
  std::vector<std::size_t> deg(n);
  std::size_t max_deg = 0;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::vector<Vertex>> buckets(max_deg + 1);
  for (Vertex v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  std::size_t best = 0;
  std::size_t low = 0;
  for (std::size_t done = 0; done < n;) {
    while (buckets[low].empty()) ++low;
    Vertex v = buckets[low].back();
    buckets[low].pop_back();
    if (removed[v] || deg[v] != low) continue;  // stale bucket entry
    removed[v] = 1;
    ++done;
    best = std::max(best, low);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      --deg[w];
      buckets[deg[w]].push_back(w);
      if (deg[w] < low) low = deg[w];
    }
  }
  return best;
}

inline constexpr std::size_t kExactArboricityMaxVertices = 20;

/// Nash-Williams arboricity: max over |S| >= 2 of ceil(|E(S)| / (|S| - 1)),
/// by enumerating every vertex subset.
inline std::size_t exact_arboricity(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kExactArboricityMaxVertices) {
    throw SizeLimitError("exact_arboricity: n = " + std::to_string(n) +
                         " exceeds limit " +
                         std::to_string(kExactArboricityMaxVertices));
  }
  if (g.num_edges() == 0) return 0;
  std::vector<std::uint32_t> mask(n, 0);
  for (const Edge& e : g.edges()) {
    mask[e.u] |= 1u << e.v;
    mask[e.v] |= 1u << e.u;
  }
  // edges_in[S] built incrementally from S without its lowest vertex.
  const std::uint32_t full = 1u << n;
  std::vector<std::uint16_t> edges_in(full, 0);
  std::size_t best = 1;
  for (std::uint32_t s = 1; s < full; ++s) {
    const int low = __builtin_ctz(s);
    const std::uint32_t rest = s & (s - 1);
    edges_in[s] = static_cast<std::uint16_t>(
        edges_in[rest] + __builtin_popcount(mask[low] & rest));
    const int size = __builtin_popcount(s);
    if (size < 2) continue;
    const std::size_t bound =
        (edges_in[s] + static_cast<std::size_t>(size) - 2) /
        static_cast<std::size_t>(size - 1);
    best = std::max(best, bound);
  }
  return best;
}

struct ArboricityBound {
  std::size_t degeneracy = 0;
  std::optional<std::size_t> exact_nash_williams;
};

inline ArboricityBound arboricity_bound(const Graph& g) {
  ArboricityBound bound{degeneracy(g), std::nullopt};
  if (g.num_vertices() <= kExactArboricityMaxVertices) {
    bound.exact_nash_williams = exact_arboricity(g);
  }
  return bound;
}

}  // namespace cktest
