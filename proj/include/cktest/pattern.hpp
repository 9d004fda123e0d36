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
#include <bit>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cktest/graph.hpp"

namespace cktest {

inline constexpr std::size_t kMaxPatternVertices = 12;

/// Small simple pattern graph F on vertices 0..k-1 without isolated vertices.
class PatternGraph {
 public:
  PatternGraph(std::size_t k, std::vector<Edge> edges) : k_(k) {
    if (k < 2 || k > kMaxPatternVertices) {
      throw SizeLimitError("pattern must have 2.." +
                           std::to_string(kMaxPatternVertices) +
                           " vertices, got " + std::to_string(k));
    }
    adj_.assign(k, 0);
    for (const Edge& e : edges) {
      if (e.u >= k || e.v >= k || e.u == e.v) {
        throw GraphError(GraphError::Kind::kOutOfRange,
                         "invalid pattern edge {" + std::to_string(e.u) +
                             ", " + std::to_string(e.v) + "}");
      }
      if (adj_[e.u] & bit(e.v)) {
        throw GraphError(GraphError::Kind::kDuplicate,
                         "duplicate pattern edge {" + std::to_string(e.u) +
                             ", " + std::to_string(e.v) + "}");
      }
      adj_[e.u] |= bit(e.v);
      adj_[e.v] |= bit(e.u);
      edges_.push_back(e);
    }
    for (std::size_t v = 0; v < k; ++v) {
      if (adj_[v] == 0) {
        throw GraphError(GraphError::Kind::kMalformed,
                         "pattern vertex " + std::to_string(v) + " is isolated");
      }
    }
  }

  static PatternGraph from_graph(const Graph& g) {
    return PatternGraph(g.num_vertices(),
                        std::vector<Edge>(g.edges().begin(), g.edges().end()));
  }

  std::size_t num_vertices() const { return k_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::uint32_t neighbor_mask(std::size_t v) const { return adj_[v]; }
  bool has_edge(std::size_t u, std::size_t v) const { return adj_[u] & bit(v); }
  std::size_t degree(std::size_t v) const { return std::popcount(adj_[v]); }

  /// True when every edge has an endpoint in `mask`.
  bool is_vertex_cover(std::uint32_t mask) const {
    for (const Edge& e : edges_) {
      if (!(mask & (bit(e.u) | bit(e.v)))) return false;
    }
    return true;
  }

  /// Vertex sequence when F is a simple cycle C_k, in cyclic order.
  std::optional<std::vector<Vertex>> as_cycle() const {
    if (edges_.size() != k_ || k_ < 3) return std::nullopt;
    for (std::size_t v = 0; v < k_; ++v) {
      if (degree(v) != 2) return std::nullopt;
    }
    std::vector<Vertex> order{0};
    std::uint32_t seen = 1;
    while (order.size() < k_) {
      const std::uint32_t next = adj_[order.back()] & ~seen;
      if (next == 0) return std::nullopt;  // disconnected union of cycles
      const auto w = static_cast<Vertex>(std::countr_zero(next));
      order.push_back(w);
      seen |= bit(w);
    }
    return order;
  }

 private:
  static std::uint32_t bit(std::size_t v) { return 1u << v; }

  std::size_t k_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> adj_;
};

inline PatternGraph cycle_pattern(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % k)});
  }
  return PatternGraph(k, std::move(edges));
}

/// Path on k vertices (k - 1 edges).
inline PatternGraph path_pattern(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  }
  return PatternGraph(k, std::move(edges));
}

/// Star K_{1,leaves} with center 0.
inline PatternGraph star_pattern(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) {
    edges.push_back({0, static_cast<Vertex>(i)});
  }
  return PatternGraph(leaves + 1, std::move(edges));
}

inline PatternGraph complete_pattern(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  return PatternGraph(k, std::move(edges));
}

/// Named patterns: "edge", "C<k>", "P<k>", "K<k>", "K1,<l>" / "S<l>".
inline PatternGraph named_pattern(std::string name) {
  std::string lower;
  for (char c : name) {
    lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  auto number = [&](std::size_t from) -> std::size_t {
    const std::string digits = lower.substr(from);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw Error("unknown pattern name '" + name + "'");
    }
    return std::stoul(digits);
  };
  if (lower == "edge") return complete_pattern(2);
  if (lower.rfind("k1,", 0) == 0) return star_pattern(number(3));
  switch (lower.empty() ? '\0' : lower[0]) {
    case 'c': return cycle_pattern(number(1));
    case 'p': return path_pattern(number(1));
    case 'k': return complete_pattern(number(1));
    case 's': return star_pattern(number(1));
    default: throw Error("unknown pattern name '" + name + "'");
  }
}

inline std::size_t min_vertex_cover_size(const PatternGraph& f) {
  const std::uint32_t full = 1u << f.num_vertices();
  std::size_t best = f.num_vertices();
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < best && f.is_vertex_cover(mask)) best = size;
  }
  return best;
}

/// Max over vertex covers Z of F of the smallest vertex cover B contained
/// in Z. Subsets of Z are visited by increasing popcount so the inner
/// minimum stops at the first cover found.
inline std::size_t ell_of(const PatternGraph& f) {
  const std::size_t k = f.num_vertices();
  const std::uint32_t full = 1u << k;
  std::vector<char> cover(full, 0);
  for (std::uint32_t mask = 0; mask < full; ++mask) cover[mask] = f.is_vertex_cover(mask);

  std::size_t best = 0;
  for (std::uint32_t z = 0; z < full; ++z) {
    if (!cover[z]) continue;
    const auto z_size = static_cast<std::size_t>(std::popcount(z));
    if (z_size <= best) continue;  // inner minimum cannot exceed |Z|
    std::size_t inner = z_size;
    for (std::size_t size = 1; size < z_size && inner == z_size; ++size) {
      // submask walk, keeping only size-element subsets
      for (std::uint32_t b = z; ; b = (b - 1) & z) {
        if (static_cast<std::size_t>(std::popcount(b)) == size && cover[b]) {
          inner = size;
          break;
        }
        if (b == 0) break;
      }
    }
    best = std::max(best, inner);
  }
  return best;
}

}  // namespace cktest
