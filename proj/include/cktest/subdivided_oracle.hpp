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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cktest/explored.hpp"
#include "cktest/generators.hpp"
#include "cktest/graph.hpp"
#include "cktest/oracle.hpp"
#include "cktest/rng.hpp"

namespace cktest {

/// Raised when a path vertex resolves to a base edge that is already bound
/// elsewhere; the simulated run stops and the tester accepts.
class SimulationAborted : public SessionTerminated {
 public:
  using SessionTerminated::SessionTerminated;
};

/// Answers queries on the subdivision of a d-regular tripartite G' while
/// looking at G' only through a base session.
///
/// G' must have parts P0, P1, P2 of n_part vertices each, stored as id
/// blocks [p * n_part, (p + 1) * n_part), with d/2 neighbors of every vertex
/// in each other part. Ids of the simulated graph: the n' originals, then
/// one block per part pair (01, 12, 02) of n_part * d/2 slots, each slot
/// holding the L - 1 internal vertices of one path, listed from the lower
/// part. Which base edge owns a slot is decided on first contact:
///  - neighbor i of an original v: base query neighbor(v, i), then the edge
///    takes the next free slot of its block;
///  - a path vertex in a free slot: draw w uniform in the lower part and a
///    uniform neighbor of w, repeating until it lies in the upper part; the
///    edge takes this slot unless it already owns one, in which case the
///    run is aborted (SimulationAborted).
/// Either way the whole path is revealed, internal degrees included.
/// `materialize()` binds the rest in base edge order and returns the graph
/// all answers are consistent with.
class SubdividedOracle {
 public:
  SubdividedOracle(OracleSession& base, std::size_t n_part, std::size_t d, std::size_t k,
                   SeedPair seed)
      : base_(&base), n_part_(n_part), d_(d), k_(k), lengths_(subdivision_lengths(k)),
        rng_(seed), sampler_(Rng(seed).substream(0x5d, 0)) {
    if (base.num_vertices() != 3 * n_part) {
      throw Error("subdivided session: base graph must have 3 * n_part vertices");
    }
    if (d == 0 || d % 2 != 0 || d / 2 > n_part) {
      throw Error("subdivided session: d must be even with d/2 <= n_part");
    }
    const std::size_t per_block = n_part * (d / 2);
    std::size_t next = 3 * n_part;
    for (std::size_t b = 0; b < 3; ++b) {
      Block& blk = blocks_[b];
      blk.lo = kPairs[b][0];
      blk.hi = kPairs[b][1];
      blk.internal = lengths_.between(blk.lo, blk.hi) - 1;
      blk.first_id = next;
      blk.slots = per_block;
      blk.owner.assign(per_block, kUnbound);
      next += per_block * blk.internal;
    }
    n_ = next;
  }

  SubdividedOracle(OracleSession& base, std::size_t n_part, std::size_t d, std::size_t k,
                   std::uint64_t seed)
      : SubdividedOracle(base, n_part, d, k, SeedPair{seed, 0}) {}

  std::size_t num_vertices() const { return n_; }
  std::size_t num_original() const { return 3 * n_part_; }
  std::size_t cycle_length() const { return k_; }

  std::size_t degree(Vertex v) {
    check_vertex(v);
    ++stats_.degree;
    std::size_t deg = 2;
    if (is_original(v)) deg = base_->degree(v);
    explored_.add_vertex(v);
    explored_.set_degree(v, deg);
    record({QueryRecord::Type::kDegree, v, 0, deg});
    return deg;
  }

  Vertex neighbor(Vertex v, std::size_t i) {
    check_vertex(v);
    if (i < 1 || (!is_original(v) && i > 2) || (is_original(v) && i > d_)) {
      throw QueryError("neighbor(" + std::to_string(v) + ", " + std::to_string(i) +
                       "): index out of range");
    }
    ++stats_.neighbor;
    Vertex answer;
    if (is_original(v)) {
      const Vertex x = base_->neighbor(v, i);
      const Path& p = path_for_edge(v, x);
      answer = v < x ? p.vertices[1] : p.vertices[p.vertices.size() - 2];
    } else {
      const Path& p = path_for_slot(v);
      const std::size_t pos = position_in_path(v);
      answer = p.vertices[i == 1 ? pos - 1 : pos + 1];
    }
    record({QueryRecord::Type::kNeighbor, v, i, answer});
    return answer;
  }

  bool pair(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw QueryError("pair: vertices must differ");
    ++stats_.pair;
    bool present = false;
    if (!is_original(u) || !is_original(v)) {
      const Vertex inner = is_original(u) ? v : u;
      const Vertex other = inner == u ? v : u;
      const Path& p = path_for_slot(inner);
      const std::size_t pos = position_in_path(inner);
      present = p.vertices[pos - 1] == other || p.vertices[pos + 1] == other;
    }
    explored_.add_vertex(u);
    explored_.add_vertex(v);
    record({QueryRecord::Type::kPair, u, v, present ? 1u : 0u});
    return present;
  }

  Rng& rng() { return rng_; }
  ExploredGraph& explored() { return explored_; }
  const ExploredGraph& explored() const { return explored_; }
  /// Simulated queries.
  const QueryStats& stats() const { return stats_; }
  /// Queries spent on G'.
  const QueryStats& base_stats() const { return base_->stats(); }

  void enable_transcript() { recording_ = true; }
  const std::vector<QueryRecord>& transcript() const { return transcript_; }

  /// Binds every remaining base edge (in edge order, to the lowest free
  /// slot of its block) and returns the subdivided graph. Reads G'
  /// directly; no queries are charged.
  Graph materialize() {
    const Graph& g = base_->graph();
    std::array<std::size_t, 3> count{};
    for (const Edge& e : g.edges()) {
      const Vertex lo = std::min(e.u, e.v);
      const Vertex hi = std::max(e.u, e.v);
      ++count[block_of(part(lo), part(hi))];
    }
    for (std::size_t b = 0; b < 3; ++b) {
      if (count[b] != blocks_[b].slots) {
        throw Error("subdivided session: base graph is not d-regular tripartite");
      }
    }
    std::vector<std::vector<Vertex>> path_ids(g.num_edges());
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const Vertex lo = std::min(g.edges()[e].u, g.edges()[e].v);
      const Vertex hi = std::max(g.edges()[e].u, g.edges()[e].v);
      const std::size_t slot = slot_of_edge(lo, hi);
      const Block& blk = blocks_[block_of(part(lo), part(hi))];
      for (std::size_t j = 0; j < blk.internal; ++j) {
        path_ids[e].push_back(static_cast<Vertex>(blk.first_id + slot * blk.internal + j));
      }
    }
    return subdivide_with_layout(g, n_, path_ids);
  }

 private:
  static constexpr std::size_t kUnbound = static_cast<std::size_t>(-1);
  static constexpr std::size_t kPairs[3][2] = {{0, 1}, {1, 2}, {0, 2}};

  struct Block {
    std::size_t lo = 0;
    std::size_t hi = 0;
    std::size_t internal = 0;
    std::size_t first_id = 0;
    std::size_t slots = 0;
    std::size_t cursor = 0;
    std::vector<std::size_t> owner;  // slot -> index into paths_
  };

  struct Path {
    std::vector<Vertex> vertices;  // lower-part endpoint, internals, upper endpoint
  };

  bool is_original(Vertex v) const { return v < 3 * n_part_; }
  std::size_t part(Vertex v) const { return v / n_part_; }

  static std::size_t block_of(std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    if (a == 0 && b == 1) return 0;
    if (a == 1 && b == 2) return 1;
    if (a == 0 && b == 2) return 2;
    throw Error("subdivided session: base edge inside one part");
  }

  std::size_t block_of_id(Vertex v) const {
    for (std::size_t b = 0; b < 3; ++b) {
      const Block& blk = blocks_[b];
      if (v >= blk.first_id && v < blk.first_id + blk.slots * blk.internal) return b;
    }
    throw Error("subdivided session: vertex outside every block");
  }

  // 1-based position of a path vertex along its path.
  std::size_t position_in_path(Vertex v) const {
    const Block& blk = blocks_[block_of_id(v)];
    return (v - blk.first_id) % blk.internal + 1;
  }

  void check_vertex(Vertex v) const {
    if (v >= n_) {
      throw QueryError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) +
                       ")");
    }
  }

  void record(const QueryRecord& r) {
    if (recording_) transcript_.push_back(r);
  }

  std::size_t slot_of_edge(Vertex lo, Vertex hi) {
    auto it = edge_slot_.find(edge_key(lo, hi));
    if (it != edge_slot_.end()) return it->second;
    Block& blk = blocks_[block_of(part(lo), part(hi))];
    while (blk.cursor < blk.slots && blk.owner[blk.cursor] != kUnbound) ++blk.cursor;
    if (blk.cursor == blk.slots) throw Error("subdivided session: block has no free slot");
    bind(lo, hi, blk.cursor);
    return blk.cursor;
  }

  const Path& path_for_edge(Vertex a, Vertex b) {
    const Vertex lo = std::min(a, b);
    const Vertex hi = std::max(a, b);
    const std::size_t slot = slot_of_edge(lo, hi);
    return paths_[blocks_[block_of(part(lo), part(hi))].owner[slot]];
  }

  const Path& path_for_slot(Vertex v) {
    const std::size_t b = block_of_id(v);
    Block& blk = blocks_[b];
    const std::size_t slot = (v - blk.first_id) / blk.internal;
    if (blk.owner[slot] == kUnbound) {
      Vertex w;
      Vertex x;
      do {
        w = static_cast<Vertex>(blk.lo * n_part_ + sampler_.below(n_part_));
        x = base_->neighbor(w, sampler_.between(1, d_));
      } while (part(x) != blk.hi);
      if (edge_slot_.count(edge_key(w, x))) {
        throw SimulationAborted("subdivided session: sampled base edge {" +
                                std::to_string(w) + ", " + std::to_string(x) +
                                "} already bound");
      }
      bind(w, x, slot);
    }
    return paths_[blk.owner[slot]];
  }

  // Assigns base edge {lo, hi} to `slot` and reveals its path.
  void bind(Vertex lo, Vertex hi, std::size_t slot) {
    Block& blk = blocks_[block_of(part(lo), part(hi))];
    Path p;
    p.vertices.push_back(lo);
    for (std::size_t j = 0; j < blk.internal; ++j) {
      p.vertices.push_back(static_cast<Vertex>(blk.first_id + slot * blk.internal + j));
    }
    p.vertices.push_back(hi);
    blk.owner[slot] = paths_.size();
    edge_slot_[edge_key(lo, hi)] = slot;
    for (std::size_t j = 0; j + 1 < p.vertices.size(); ++j) {
      explored_.add_vertex(p.vertices[j]);
      explored_.add_vertex(p.vertices[j + 1]);
      explored_.add_edge(p.vertices[j], p.vertices[j + 1]);
    }
    for (std::size_t j = 1; j + 1 < p.vertices.size(); ++j) explored_.set_degree(p.vertices[j], 2);
    paths_.push_back(std::move(p));
  }

  OracleSession* base_;
  std::size_t n_part_;
  std::size_t d_;
  std::size_t k_;
  SubdivisionLengths lengths_;
  std::size_t n_ = 0;
  std::array<Block, 3> blocks_;
  std::vector<Path> paths_;
  std::unordered_map<std::uint64_t, std::size_t> edge_slot_;
  Rng rng_;
  Rng sampler_;
  QueryStats stats_;
  ExploredGraph explored_;
  bool recording_ = false;
  std::vector<QueryRecord> transcript_;
};

static_assert(QueryOracle<SubdividedOracle>);

}  // namespace cktest
