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
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"

#include "cktest/graph.hpp"
#include "cktest/pattern.hpp"
#include "cktest/witness.hpp"

namespace cktest {

// Cost model: cycle enumeration is a DFS over simple paths rooted at each
// cycle's smallest vertex, so its work grows with the number of simple
// paths of length < k. It is meant for sparse desk-scale graphs.
inline constexpr std::size_t kExactMaxVertices = std::size_t{1} << 20;
inline constexpr std::size_t kExactMaxCycleLength = 10;
inline constexpr std::size_t kExactMaxPatternVertices = 8;

namespace detail {

inline void check_exact_limits(const Graph& g, std::size_t k, std::size_t max_k) {
  if (g.num_vertices() > kExactMaxVertices) {
    throw SizeLimitError("exact oracle: n = " + std::to_string(g.num_vertices()) +
                         " exceeds " + std::to_string(kExactMaxVertices));
  }
  if (k > max_k) {
    throw SizeLimitError("exact oracle: pattern size " + std::to_string(k) +
                         " exceeds " + std::to_string(max_k));
  }
}

/// Enumerates k-cycles in canonical form (v0 smallest, v1 < v_{k-1}) in
/// lexicographic order. `usable(a, b)` filters edges; `visit` returns false
/// to stop.
class CycleEnumerator {
 public:
  CycleEnumerator(const Graph& g, std::size_t k,
                  std::function<bool(Vertex, Vertex)> usable,
                  std::function<bool(const std::vector<Vertex>&)> visit)
      : g_(g), k_(k), usable_(std::move(usable)), visit_(std::move(visit)),
        on_path_(g.num_vertices(), 0) {}

  void run() {
    for (Vertex s = 0; s < g_.num_vertices() && !stopped_; ++s) {
      path_.assign(1, s);
      on_path_[s] = 1;
      extend();
      on_path_[s] = 0;
    }
  }

 private:
  void extend() {
    const Vertex s = path_.front();
    const Vertex x = path_.back();
    for (Vertex y : g_.sorted_neighbors(x)) {
      if (stopped_) return;
      if (y <= s || on_path_[y] || !usable_(x, y)) continue;
      if (path_.size() + 1 == k_) {
        // Closing vertex: must beat v1 to keep one orientation.
        if (y < path_[1] || !g_.has_edge(y, s) || !usable_(y, s)) continue;
        path_.push_back(y);
        if (!visit_(path_)) stopped_ = true;
        path_.pop_back();
        continue;
      }
      path_.push_back(y);
      on_path_[y] = 1;
      extend();
      on_path_[y] = 0;
      path_.pop_back();
    }
  }

  const Graph& g_;
  std::size_t k_;
  std::function<bool(Vertex, Vertex)> usable_;
  std::function<bool(const std::vector<Vertex>&)> visit_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
  bool stopped_ = false;
};

/// Counts injective homomorphisms of F into g.
class EmbeddingCounter {
 public:
  EmbeddingCounter(const Graph& g, const PatternGraph& f) : g_(g), f_(f) {
    const std::size_t k = f.num_vertices();
    std::uint32_t placed = 0;
    while (order_.size() < k) {
      Vertex next = 0;
      bool attached = false;
      for (Vertex w = 0; w < k && !attached; ++w) {
        if (!(placed & (1u << w)) && (f.neighbor_mask(w) & placed)) {
          next = w;
          attached = true;
        }
      }
      if (!attached) {
        while (placed & (1u << next)) ++next;
      }
      order_.push_back(next);
      placed |= 1u << next;
    }
    image_.assign(k, 0);
    used_.assign(g.num_vertices(), 0);
  }

  std::uint64_t run() {
    count_ = 0;
    extend(0, 0);
    return count_;
  }

 private:
  void extend(std::size_t depth, std::uint32_t placed) {
    if (depth == order_.size()) {
      ++count_;
      return;
    }
    const Vertex pv = order_[depth];
    const std::uint32_t back = f_.neighbor_mask(pv) & placed;
    auto fits = [&](Vertex host) {
      if (used_[host]) return false;
      for (Vertex w = 0; w < f_.num_vertices(); ++w) {
        if ((back & (1u << w)) && !g_.has_edge(host, image_[w])) return false;
      }
      return true;
    };
    auto place = [&](Vertex host) {
      image_[pv] = host;
      used_[host] = 1;
      extend(depth + 1, placed | (1u << pv));
      used_[host] = 0;
    };
    if (back) {
      const auto anchor = static_cast<Vertex>(__builtin_ctz(back));
      for (Vertex host : g_.sorted_neighbors(image_[anchor])) {
        if (fits(host)) place(host);
      }
    } else {
      for (Vertex host = 0; host < g_.num_vertices(); ++host) {
        if (fits(host)) place(host);
      }
    }
  }

  const Graph& g_;
  const PatternGraph& f_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  std::uint64_t count_ = 0;
};

}  // namespace detail

/// Calls `visit(cycle)` on every k-cycle of g once, in canonical form and
/// lexicographic order, until it returns false.
inline void for_each_cycle(const Graph& g, std::size_t k,
                           const std::function<bool(const std::vector<Vertex>&)>& visit) {
  if (k < 3) throw Error("cycle length must be at least 3");
  detail::check_exact_limits(g, k, kExactMaxCycleLength);
  detail::CycleEnumerator(g, k, [](Vertex, Vertex) { return true; }, visit).run();
}

inline std::uint64_t count_cycles(const Graph& g, std::size_t k) {
  std::uint64_t count = 0;
  for_each_cycle(g, k, [&](const std::vector<Vertex>&) {
    ++count;
    return true;
  });
  return count;
}

/// Number of automorphisms of F.
inline std::uint64_t automorphism_count(const PatternGraph& f) {
  const Graph host = Graph::from_edges(f.num_vertices(), f.edges());
  return detail::EmbeddingCounter(host, f).run();
}

/// Number of subgraphs of g isomorphic to F.
inline std::uint64_t count_pattern(const Graph& g, const PatternGraph& f) {
  if (f.as_cycle()) return count_cycles(g, f.num_vertices());
  detail::check_exact_limits(g, f.num_vertices(), kExactMaxPatternVertices);
  return detail::EmbeddingCounter(g, f).run() / automorphism_count(f);
}

inline bool is_free(const Graph& g, std::size_t k) {
  bool found = false;
  for_each_cycle(g, k, [&](const std::vector<Vertex>&) {
    found = true;
    return false;
  });
  return !found;
}

inline bool is_free(const Graph& g, const PatternGraph& f) {
  if (f.as_cycle()) return is_free(g, f.num_vertices());
  return count_pattern(g, f) == 0;
}

struct DisjointCycleSet {
  std::size_t k = 0;
  std::vector<std::vector<Vertex>> cycles;
  bool maximal = false;

  std::size_t size() const { return cycles.size(); }
};

/// True when every member is a k-cycle of g and no edge is shared.
inline bool is_edge_disjoint_cycle_set(const Graph& g, const DisjointCycleSet& set) {
  std::unordered_set<std::uint64_t> used;
  for (const auto& cycle : set.cycles) {
    if (cycle.size() != set.k) return false;
    for (Vertex v : cycle) {
      if (v >= g.num_vertices()) return false;
    }
    if (!is_valid_cycle(cycle, [&](Vertex a, Vertex b) { return g.has_edge(a, b); })) {
      return false;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (!used.insert(edge_key(cycle[i], cycle[(i + 1) % cycle.size()])).second) return false;
    }
  }
  return true;
}

/// Greedy maximal edge-disjoint set of k-cycles: cycles are taken in
/// canonical lexicographic order whenever they avoid every edge chosen so
/// far. Used edges are pruned from the enumeration as they are claimed.
inline DisjointCycleSet greedy_edge_disjoint(const Graph& g, std::size_t k) {
  DisjointCycleSet out;
  out.k = k;
  std::unordered_set<std::uint64_t> used;
  auto usable = [&](Vertex a, Vertex b) { return !used.count(edge_key(a, b)); };
  auto visit = [&](const std::vector<Vertex>& cycle) {
    for (std::size_t i = 0; i < k; ++i) {
      if (used.count(edge_key(cycle[i], cycle[(i + 1) % k]))) return true;
    }
    for (std::size_t i = 0; i < k; ++i) used.insert(edge_key(cycle[i], cycle[(i + 1) % k]));
    out.cycles.push_back(cycle);
    return true;
  };
  if (k < 3) throw Error("cycle length must be at least 3");
  detail::check_exact_limits(g, k, kExactMaxCycleLength);
  detail::CycleEnumerator(g, k, usable, visit).run();
  out.maximal = true;
  return out;
}

/// lower = |S|/m <= dist(G, C_k-free) <= upper = min(1, k|S|/m) for a
/// maximal edge-disjoint set S; both 0 when m = 0.
struct DistanceBounds {
  double lower = 0.0;
  double upper = 0.0;
};

inline DistanceBounds distance_bounds(const DisjointCycleSet& set, std::size_t m) {
  if (m == 0) return {};
  const double s = static_cast<double>(set.size());
  const double mm = static_cast<double>(m);
  return {s / mm, std::min(1.0, static_cast<double>(set.k) * s / mm)};
}

inline DistanceBounds distance_bounds(const Graph& g, std::size_t k) {
  return distance_bounds(greedy_edge_disjoint(g, k), g.num_edges());
}

/// {count, greedy_size, lower, upper} as reported by `verify`.
inline nlohmann::json verify_report(const Graph& g, std::size_t k) {
  const DisjointCycleSet set = greedy_edge_disjoint(g, k);
  const DistanceBounds bounds = distance_bounds(set, g.num_edges());
  return {{"k", k},
          {"n", g.num_vertices()},
          {"m", g.num_edges()},
          {"count", count_cycles(g, k)},
          {"greedy_size", set.size()},
          {"lower", bounds.lower},
          {"upper", bounds.upper}};
}

}  // namespace cktest
