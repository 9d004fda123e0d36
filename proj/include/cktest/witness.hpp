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
#include <deque>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "cktest/explored.hpp"
#include "cktest/graph.hpp"
#include "cktest/pattern.hpp"

namespace cktest {

/// True when `cycle` lists k >= 3 distinct vertices and consecutive
/// entries (cyclically) are adjacent according to `has_edge`.
template <typename HasEdge>
bool is_valid_cycle(const std::vector<Vertex>& cycle, HasEdge&& has_edge) {
  const std::size_t k = cycle.size();
  if (k < 3) return false;
  std::unordered_set<Vertex> seen(cycle.begin(), cycle.end());
  if (seen.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (!has_edge(cycle[i], cycle[(i + 1) % k])) return false;
  }
  return true;
}

/// True when `image` (image[i] = host vertex of pattern vertex i) is an
/// injective map carrying every pattern edge onto a host edge.
template <typename HasEdge>
bool is_valid_embedding(const PatternGraph& f, const std::vector<Vertex>& image,
                        HasEdge&& has_edge) {
  if (image.size() != f.num_vertices()) return false;
  std::unordered_set<Vertex> seen(image.begin(), image.end());
  if (seen.size() != image.size()) return false;
  for (const Edge& e : f.edges()) {
    if (!has_edge(image[e.u], image[e.v])) return false;
  }
  return true;
}

namespace detail {

class CycleThroughEdge {
 public:
  CycleThroughEdge(const ExploredGraph& g, Vertex u, Vertex v, std::size_t k)
      : g_(g), u_(u), v_(v), k_(k) {}

  std::optional<std::vector<Vertex>> run() {
    // Any simple u..v path of length k-1 avoids the edge {u,v} and meets u
    // only at its start, so distances from v in G - u bound what is left.
    radius_ = (k_ - 1) / 2;
    bfs_from_v();
    path_.assign(1, u_);
    on_path_.insert(u_);
    if (extend(u_, k_ - 1)) return path_;
    return std::nullopt;
  }

 private:
  void bfs_from_v() {
    dist_[v_] = 0;
    std::deque<Vertex> queue{v_};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      const std::size_t dx = dist_[x];
      if (dx == radius_) continue;
      for (Vertex y : g_.neighbors(x)) {
        if (y == u_ || dist_.count(y)) continue;
        dist_[y] = dx + 1;
        queue.push_back(y);
      }
    }
  }

  // Lower bound on the length of a path from x to v avoiding u.
  std::size_t lower_bound(Vertex x) const {
    auto it = dist_.find(x);
    return it == dist_.end() ? radius_ + 1 : it->second;
  }

  bool extend(Vertex x, std::size_t remaining) {
    if (remaining == 1) {
      if (x != u_ && g_.has_edge(x, v_)) {
        path_.push_back(v_);
        return true;
      }
      return false;
    }
    for (Vertex y : g_.neighbors(x)) {
      if (y == v_ || on_path_.count(y)) continue;
      if (lower_bound(y) > remaining - 1) continue;
      path_.push_back(y);
      on_path_.insert(y);
      if (extend(y, remaining - 1)) return true;
      on_path_.erase(y);
      path_.pop_back();
    }
    return false;
  }

  const ExploredGraph& g_;
  Vertex u_;
  Vertex v_;
  std::size_t k_;
  std::size_t radius_ = 0;
  std::unordered_map<Vertex, std::size_t> dist_;
  std::vector<Vertex> path_;
  std::unordered_set<Vertex> on_path_;
};

class PatternThroughEdge {
 public:
  PatternThroughEdge(const ExploredGraph& g, const PatternGraph& f)
      : g_(g), f_(f), image_(f.num_vertices()), mapped_(f.num_vertices(), 0) {}

  std::optional<std::vector<Vertex>> run(Vertex a, Vertex b) {
    for (const Edge& pe : f_.edges()) {
      for (int flip = 0; flip < 2; ++flip) {
        const Vertex p = flip ? pe.v : pe.u;
        const Vertex q = flip ? pe.u : pe.v;
        order_ = search_order(p, q);
        std::fill(mapped_.begin(), mapped_.end(), 0);
        used_.clear();
        assign(p, a);
        assign(q, b);
        if (extend(2)) return image_;
      }
    }
    return std::nullopt;
  }

 private:
  // p, q first; then greedily a vertex adjacent to something already placed.
  std::vector<Vertex> search_order(Vertex p, Vertex q) const {
    const std::size_t k = f_.num_vertices();
    std::vector<Vertex> order{p, q};
    std::uint32_t placed = (1u << p) | (1u << q);
    while (order.size() < k) {
      Vertex next = 0;
      bool attached = false;
      for (Vertex w = 0; w < k; ++w) {
        if (placed & (1u << w)) continue;
        if (f_.neighbor_mask(w) & placed) {
          next = w;
          attached = true;
          break;
        }
      }
      if (!attached) {
        for (Vertex w = 0; w < k; ++w) {
          if (!(placed & (1u << w))) {
            next = w;
            break;
          }
        }
      }
      order.push_back(next);
      placed |= 1u << next;
    }
    return order;
  }

  void assign(Vertex pv, Vertex host) {
    image_[pv] = host;
    mapped_[pv] = 1;
    used_.insert(host);
  }

  void unassign(Vertex pv) {
    used_.erase(image_[pv]);
    mapped_[pv] = 0;
  }

  bool consistent(Vertex pv, Vertex host) const {
    if (used_.count(host)) return false;
    for (Vertex w = 0; w < f_.num_vertices(); ++w) {
      if (mapped_[w] && f_.has_edge(pv, w) && !g_.has_edge(host, image_[w])) {
        return false;
      }
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex pv = order_[depth];
    std::optional<Vertex> anchor;
    for (Vertex w = 0; w < f_.num_vertices(); ++w) {
      if (mapped_[w] && f_.has_edge(pv, w)) {
        anchor = w;
        break;
      }
    }
    auto attempt = [&](Vertex host) {
      if (!consistent(pv, host)) return false;
      assign(pv, host);
      if (extend(depth + 1)) return true;
      unassign(pv);
      return false;
    };
    if (anchor) {
      for (Vertex host : g_.neighbors(image_[*anchor])) {
        if (attempt(host)) return true;
      }
      return false;
    }
    // Component of F not yet touched: any explored vertex will do.
    if (!all_vertices_) {
      all_vertices_.emplace();
      for (const Edge& e : g_.all_edges()) {
        all_vertices_->push_back(e.u);
        all_vertices_->push_back(e.v);
      }
      std::sort(all_vertices_->begin(), all_vertices_->end());
      all_vertices_->erase(std::unique(all_vertices_->begin(), all_vertices_->end()),
                           all_vertices_->end());
    }
    for (Vertex host : *all_vertices_) {
      if (attempt(host)) return true;
    }
    return false;
  }

  const ExploredGraph& g_;
  const PatternGraph& f_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<char> mapped_;
  std::unordered_set<Vertex> used_;
  std::optional<std::vector<Vertex>> all_vertices_;
};

}  // namespace detail

/// Some k-cycle of `g` through the edge {u,v}, as a vertex sequence
/// starting u, ..., v. The edge must be present.
inline std::optional<std::vector<Vertex>> find_cycle_through(const ExploredGraph& g,
                                                             Vertex u, Vertex v,
                                                             std::size_t k) {
  if (k < 3 || !g.has_edge(u, v)) return std::nullopt;
  // Start the first half of the search on the sparser side.
  if (g.degree_in_explored(u) > g.degree_in_explored(v)) std::swap(u, v);
  return detail::CycleThroughEdge(g, u, v, k).run();
}

/// An F-copy using the edge {a,b}: image[i] is the host vertex of pattern
/// vertex i.
inline std::optional<std::vector<Vertex>> find_pattern_through(const ExploredGraph& g,
                                                               const PatternGraph& f,
                                                               Vertex a, Vertex b) {
  if (!g.has_edge(a, b)) return std::nullopt;
  return detail::PatternThroughEdge(g, f).run(a, b);
}

/// Searches for a C_k or an F-copy in the explored subgraph as it grows.
///
/// Every call to `scan` examines only edges revealed since the previous
/// call: a copy present now but absent before must use one of them, so the
/// search stays complete while its cost tracks the new part of the graph.
/// Witnesses are embeddings: entry i is the image of pattern vertex i, which
/// for a cycle pattern is the cycle in order.
class WitnessSearch {
 public:
  explicit WitnessSearch(std::size_t cycle_length)
      : target_(cycle_length), cycle_order_(identity(cycle_length)) {
    if (cycle_length < 3) throw Error("cycle length must be at least 3");
  }

  explicit WitnessSearch(PatternGraph pattern) : target_(pattern) {
    if (auto order = pattern.as_cycle()) {
      cycle_order_ = *order;
      target_ = pattern.num_vertices();
    }
  }

  std::size_t pattern_size() const {
    if (auto* k = std::get_if<std::size_t>(&target_)) return *k;
    return std::get<PatternGraph>(target_).num_vertices();
  }

  /// Checks a witness returned by `scan` against `g`.
  bool validate(const ExploredGraph& g, const std::vector<Vertex>& witness) const {
    return check([&](Vertex a, Vertex b) { return g.has_edge(a, b); }, witness);
  }

  /// Same check against the full graph.
  bool validate_against(const Graph& g, const std::vector<Vertex>& witness) const {
    for (Vertex v : witness) {
      if (v >= g.num_vertices()) return false;
    }
    return check([&](Vertex a, Vertex b) { return g.has_edge(a, b); }, witness);
  }

  std::optional<std::vector<Vertex>> scan(ExploredGraph& g) {
    for (const Edge& e : g.take_new_edges()) {
      if (!may_close_cycle(e)) continue;
      if (auto w = search_edge(g, e)) return w;
    }
    return std::nullopt;
  }

 private:
  template <typename HasEdge>
  bool check(HasEdge&& has_edge, const std::vector<Vertex>& witness) const {
    if (auto* k = std::get_if<std::size_t>(&target_)) {
      if (witness.size() != *k) return false;
      std::vector<Vertex> cycle(*k);
      for (std::size_t j = 0; j < *k; ++j) cycle[j] = witness[cycle_order_[j]];
      return is_valid_cycle(cycle, has_edge);
    }
    return is_valid_embedding(std::get<PatternGraph>(target_), witness, has_edge);
  }

  static std::vector<Vertex> identity(std::size_t k) {
    std::vector<Vertex> order(k);
    for (std::size_t i = 0; i < k; ++i) order[i] = static_cast<Vertex>(i);
    return order;
  }

  std::optional<std::vector<Vertex>> search_edge(const ExploredGraph& g, const Edge& e) const {
    if (auto* k = std::get_if<std::size_t>(&target_)) {
      auto cycle = find_cycle_through(g, e.u, e.v, *k);
      if (!cycle) return std::nullopt;
      std::vector<Vertex> image(*k);
      for (std::size_t j = 0; j < *k; ++j) image[cycle_order_[j]] = (*cycle)[j];
      return image;
    }
    return find_pattern_through(g, std::get<PatternGraph>(target_), e.u, e.v);
  }

  // Union-find with parity over every edge seen by scan. Cycle targets
  // only: a cycle through e needs another u..v path, and an odd one needs a
  // non-bipartite component.
  struct Component {
    Vertex parent;
    bool parity;  // relative to parent
    bool odd_cycle = false;
    std::size_t size = 1;
  };

  std::pair<Vertex, bool> find(Vertex x) {
    std::vector<Vertex> trail;
    Vertex root = x;
    for (;;) {
      auto [it, fresh] = components_.try_emplace(root, Component{root, false});
      if (fresh || it->second.parent == root) break;
      trail.push_back(root);
      root = it->second.parent;
    }
    // Compress from the top so each parity is relative to the root.
    bool parity = false;
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      Component& c = components_[*it];
      parity = parity != c.parity;
      c.parity = parity;
      c.parent = root;
    }
    return {root, trail.empty() ? false : components_[x].parity};
  }

  bool may_close_cycle(const Edge& e) {
    auto* k = std::get_if<std::size_t>(&target_);
    if (!k) return true;
    auto [ru, pu] = find(e.u);
    auto [rv, pv] = find(e.v);
    if (ru != rv) {
      if (components_[ru].size > components_[rv].size) std::swap(ru, rv);
      Component& child = components_[ru];
      Component& root = components_[rv];
      child.parent = rv;
      child.parity = pu == pv;
      root.size += child.size;
      root.odd_cycle = root.odd_cycle || child.odd_cycle;
      return false;
    }
    Component& root = components_[ru];
    if (pu == pv) root.odd_cycle = true;
    return *k % 2 == 0 || root.odd_cycle;
  }

  std::variant<std::size_t, PatternGraph> target_;
  std::vector<Vertex> cycle_order_;
  std::unordered_map<Vertex, Component> components_;
};

}  // namespace cktest
