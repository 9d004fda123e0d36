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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cktest/graph.hpp"

namespace cktest {

/// The part of the graph revealed by queries: vertices, edges and degrees
/// that some answer has disclosed. Grows monotonically.
///
/// Edges added since the last `take_new_edges()` are kept in a pending list
/// so witness search can restrict itself to cycles through fresh edges.
class ExploredGraph {
 public:
  bool add_vertex(Vertex v) {
    return nodes_.try_emplace(v).second;
  }

  /// Returns false if the edge was already known.
  bool add_edge(Vertex u, Vertex v) {
    if (!edges_.insert(edge_key(u, v)).second) return false;
    nodes_[u].neighbors.push_back(v);
    nodes_[v].neighbors.push_back(u);
    pending_.push_back({u, v});
    return true;
  }

  void set_degree(Vertex v, std::size_t degree) {
    nodes_[v].degree = static_cast<std::int64_t>(degree);
  }

  std::optional<std::size_t> known_degree(Vertex v) const {
    auto it = nodes_.find(v);
    if (it == nodes_.end() || it->second.degree < 0) return std::nullopt;
    return static_cast<std::size_t>(it->second.degree);
  }

  bool has_vertex(Vertex v) const { return nodes_.count(v) != 0; }
  bool has_edge(Vertex u, Vertex v) const { return edges_.count(edge_key(u, v)) != 0; }

  std::span<const Vertex> neighbors(Vertex v) const {
    auto it = nodes_.find(v);
    if (it == nodes_.end()) return {};
    return it->second.neighbors;
  }

  std::size_t degree_in_explored(Vertex v) const { return neighbors(v).size(); }

  std::size_t num_vertices() const { return nodes_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  /// Edges revealed since the previous call, in reveal order.
  std::vector<Edge> take_new_edges() {
    std::vector<Edge> out;
    out.swap(pending_);
    return out;
  }

  bool has_pending_edges() const { return !pending_.empty(); }

  /// Every revealed edge, unordered.
  std::vector<Edge> all_edges() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (std::uint64_t key : edges_) {
      out.push_back({static_cast<Vertex>(key >> 32), static_cast<Vertex>(key)});
    }
    return out;
  }

 private:
  struct Node {
    std::int64_t degree = -1;
    std::vector<Vertex> neighbors;
  };

  std::unordered_map<Vertex, Node> nodes_;
  std::unordered_set<std::uint64_t> edges_;
  std::vector<Edge> pending_;
};

}  // namespace cktest
