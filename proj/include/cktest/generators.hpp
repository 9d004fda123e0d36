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
#include <deque>
#include <fstream>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cktest/exact.hpp"
#include "cktest/graph.hpp"
#include "cktest/params.hpp"
#include "cktest/rng.hpp"

namespace cktest {

/// A generated graph plus what the generator knows about it.
struct Instance {
  Graph graph;
  std::string family;
  std::uint64_t seed = 0;
  nlohmann::json parameters = nlohmann::json::object();
  std::optional<DisjointCycleSet> certificate;
  std::vector<std::string> part_names;
  std::vector<std::uint8_t> part;  // part index per vertex; empty if unpartitioned
};

/// Accumulates a simple edge list.
class EdgeBuilder {
 public:
  explicit EdgeBuilder(std::size_t n) : n_(n) {}

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has(Vertex u, Vertex v) const { return keys_.count(edge_key(u, v)) != 0; }

  /// Returns false (and adds nothing) for self-loops and known edges.
  bool add(Vertex u, Vertex v) {
    if (u == v || !keys_.insert(edge_key(u, v)).second) return false;
    edges_.push_back({u, v});
    return true;
  }

  void add_path(const std::vector<Vertex>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) require(path[i], path[i + 1]);
  }

  void add_cycle(const std::vector<Vertex>& cycle) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      require(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
  }

  Graph build() const { return Graph::from_edges(n_, edges_); }

 private:
  void require(Vertex u, Vertex v) {
    if (!add(u, v)) {
      throw Error("generator produced a repeated edge {" + std::to_string(u) + ", " +
                  std::to_string(v) + "}");
    }
  }

  std::size_t n_;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> keys_;
};

/// Renames vertex v to perm[v] everywhere in the instance, keeping the edge
/// insertion order.
inline void relabel(Instance& inst, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  edges.reserve(inst.graph.num_edges());
  for (const Edge& e : inst.graph.edges()) edges.push_back({perm[e.u], perm[e.v]});
  inst.graph = Graph::from_edges(inst.graph.num_vertices(), edges);
  if (inst.certificate) {
    for (auto& cycle : inst.certificate->cycles) {
      for (Vertex& v : cycle) v = perm[v];
    }
  }
  if (!inst.part.empty()) {
    std::vector<std::uint8_t> part(inst.part.size());
    for (std::size_t v = 0; v < part.size(); ++v) part[perm[v]] = inst.part[v];
    inst.part = std::move(part);
  }
}

inline std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// ---------------------------------------------------------------------------
// Two-sided lower-bound pairs

struct LowerBoundPair {
  Instance g0;
  Instance g1;
};

namespace detail {

inline Instance with_parts(Graph g, std::string family, nlohmann::json params,
                           std::vector<std::string> names, std::vector<std::uint8_t> part) {
  Instance inst;
  inst.graph = std::move(g);
  inst.family = std::move(family);
  inst.parameters = std::move(params);
  inst.part_names = std::move(names);
  inst.part = std::move(part);
  return inst;
}

}  // namespace detail

/// C4 pair on n >= 13 vertices.
///
/// G0: Y0 of size y0 (largest odd with y0(y0+1)/2 <= n), one X0 vertex per
/// pair of Y0 adjacent to exactly that pair, the rest isolated (Z0). G0 is
/// C4-free. G1: Y1 of size y1 = y0 - 1 split in halves, and each cross pair
/// served by one vertex from each half of X1 (x1 = y1^2/2), giving x1/2
/// edge-disjoint C4s. X-degrees are 2 and Y-degrees y0 - 1 in both.
/// Ids: Y first, then X, then Z.
inline LowerBoundPair gen_c4_lb_pair(std::size_t n) {
  if (n < 13) throw Error("gen_c4_lb_pair needs n >= 13");
  std::size_t y0 = 1;
  while ((y0 + 2) * (y0 + 3) / 2 <= n) y0 += 2;
  const std::size_t x0 = y0 * (y0 - 1) / 2;

  EdgeBuilder b0(n);
  std::vector<std::uint8_t> part0(n, 2);
  for (std::size_t i = 0; i < y0; ++i) part0[i] = 0;
  Vertex x = static_cast<Vertex>(y0);
  for (Vertex i = 0; i < y0; ++i) {
    for (Vertex j = i + 1; j < y0; ++j) {
      part0[x] = 1;
      b0.add(x, i);
      b0.add(x, j);
      ++x;
    }
  }

  const std::size_t y1 = y0 - 1;
  const std::size_t half = y1 / 2;
  const std::size_t x1 = y1 * y1 / 2;
  EdgeBuilder b1(n);
  std::vector<std::uint8_t> part1(n, 4);
  DisjointCycleSet cert;
  cert.k = 4;
  for (std::size_t i = 0; i < y1; ++i) part1[i] = i < half ? 0 : 1;
  for (std::size_t i = 0; i < x1; ++i) part1[y1 + i] = i < x1 / 2 ? 2 : 3;
  Vertex next = static_cast<Vertex>(y1);
  for (Vertex a = 0; a < half; ++a) {
    for (Vertex c = 0; c < half; ++c) {
      const Vertex u1 = a;
      const Vertex u2 = static_cast<Vertex>(half + c);
      const Vertex p = next;
      const Vertex q = static_cast<Vertex>(next + x1 / 2);
      ++next;
      b1.add(p, u1);
      b1.add(p, u2);
      b1.add(q, u1);
      b1.add(q, u2);
      cert.cycles.push_back({u1, p, u2, q});
    }
  }

  const nlohmann::json common = {{"n", n}, {"y0", y0}, {"x0", x0}, {"y1", y1}, {"x1", x1}};
  LowerBoundPair out{
      detail::with_parts(b0.build(), "c4_lb_g0", common, {"Y", "X", "Z"}, part0),
      detail::with_parts(b1.build(), "c4_lb_g1", common, {"Y1a", "Y1b", "X1a", "X1b", "Z"},
                         part1)};
  out.g1.certificate = std::move(cert);
  return out;
}

/// C5 pair on n >= 7 vertices (one concrete completion of the construction).
///
/// G0: Y0 of odd size y0; the pairs of Y0, in lexicographic order,
/// alternate between being served by one common X neighbor (u-x-v) and by
/// one X edge (u-x-x'-v). G0 subdivides K_{y0} with paths of length 2 or 3,
/// so its shortest cycle has length 6: it is C4- and C5-free.
/// G1: Y1 of size y0 - 1 split in halves; every cross pair (u, w) gets both
/// a common neighbor c and an X edge a-b, closing the C5 (u, c, w, b, a).
/// These C5s are edge-disjoint. All X vertices have degree 2; Y-degrees are
/// y0 - 1 in both graphs. y0 is the largest odd value for which G0 fits.
inline LowerBoundPair gen_c5_lb_pair(std::size_t n) {
  auto x_count = [](std::size_t y) {
    const std::size_t pairs = y * (y - 1) / 2;
    return (pairs + 1) / 2 + 2 * (pairs / 2);
  };
  if (n < 7) throw Error("gen_c5_lb_pair needs n >= 7");
  std::size_t y0 = 3;
  while (y0 + 2 + x_count(y0 + 2) <= n) y0 += 2;
  const std::size_t x0 = x_count(y0);

  EdgeBuilder b0(n);
  std::vector<std::uint8_t> part0(n, 2);
  for (std::size_t i = 0; i < y0; ++i) part0[i] = 0;
  Vertex next = static_cast<Vertex>(y0);
  std::size_t pair_index = 0;
  for (Vertex i = 0; i < y0; ++i) {
    for (Vertex j = i + 1; j < y0; ++j, ++pair_index) {
      if (pair_index % 2 == 0) {
        part0[next] = 1;
        b0.add_path({i, next, j});
        next += 1;
      } else {
        part0[next] = 1;
        part0[next + 1] = 1;
        b0.add_path({i, next, static_cast<Vertex>(next + 1), j});
        next += 2;
      }
    }
  }

  const std::size_t y1 = y0 - 1;
  const std::size_t half = y1 / 2;
  const std::size_t x1 = 3 * half * half;
  EdgeBuilder b1(n);
  std::vector<std::uint8_t> part1(n, 3);
  for (std::size_t i = 0; i < y1; ++i) part1[i] = i < half ? 0 : 1;
  for (std::size_t i = 0; i < x1; ++i) part1[y1 + i] = 2;
  DisjointCycleSet cert;
  cert.k = 5;
  next = static_cast<Vertex>(y1);
  for (Vertex a = 0; a < half; ++a) {
    for (Vertex c = 0; c < half; ++c) {
      const Vertex u = a;
      const Vertex w = static_cast<Vertex>(half + c);
      const Vertex common = next;
      const Vertex xa = next + 1;
      const Vertex xb = next + 2;
      next += 3;
      b1.add_path({u, common, w});
      b1.add_path({u, xa, xb, w});
      cert.cycles.push_back({u, common, w, xb, xa});
    }
  }

  const nlohmann::json common = {{"n", n}, {"y0", y0}, {"x0", x0}, {"y1", y1}, {"x1", x1}};
  LowerBoundPair out{
      detail::with_parts(b0.build(), "c5_lb_g0", common, {"Y", "X", "Z"}, part0),
      detail::with_parts(b1.build(), "c5_lb_g1", common, {"Y1a", "Y1b", "X", "Z"}, part1)};
  out.g1.certificate = std::move(cert);
  return out;
}

// ---------------------------------------------------------------------------
// Random bipartite blocks

namespace detail {

/// Simple bipartite graph where each left vertex has degree dl and each
/// right vertex degree dr: configuration-model pairing of stubs, then
/// edge switches to remove parallel edges, restarting when the switch
/// budget runs out.
inline std::vector<Edge> sample_biregular(const std::vector<Vertex>& left, std::size_t dl,
                                          const std::vector<Vertex>& right, std::size_t dr,
                                          Rng& rng) {
  const std::size_t m = left.size() * dl;
  if (m != right.size() * dr) throw Error("biregular block: stub counts differ");
  if (dl > right.size() || dr > left.size()) throw Error("biregular block: degree too large");
  constexpr int kRestarts = 50;
  for (int attempt = 0; attempt < kRestarts; ++attempt) {
    std::vector<Vertex> ls;
    std::vector<Vertex> rs;
    ls.reserve(m);
    rs.reserve(m);
    for (Vertex v : left) ls.insert(ls.end(), dl, v);
    for (Vertex v : right) rs.insert(rs.end(), dr, v);
    shuffle(rs.begin(), rs.end(), rng);
    std::vector<Edge> edges(m);
    std::unordered_map<std::uint64_t, std::uint32_t> count;
    count.reserve(2 * m);
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < m; ++i) {
      edges[i] = {ls[i], rs[i]};
      if (++count[edge_key(ls[i], rs[i])] > 1) bad.push_back(i);
    }
    const std::size_t budget = 100 * m + 1000;
    for (std::size_t tries = 0; !bad.empty() && tries < budget; ++tries) {
      const std::size_t i = bad.back();
      const std::uint64_t ki = edge_key(edges[i].u, edges[i].v);
      if (count[ki] < 2) {
        bad.pop_back();
        continue;
      }
      const std::size_t j = rng.below(m);
      const Edge a = edges[i];
      const Edge b = edges[j];
      if (a.u == b.u || a.v == b.v) continue;
      const std::uint64_t k1 = edge_key(a.u, b.v);
      const std::uint64_t k2 = edge_key(b.u, a.v);
      if (count.count(k1) && count[k1] > 0) continue;
      if (count.count(k2) && count[k2] > 0) continue;
      --count[ki];
      --count[edge_key(b.u, b.v)];
      ++count[k1];
      ++count[k2];
      edges[i] = {a.u, b.v};
      edges[j] = {b.u, a.v};
      bad.pop_back();
    }
    if (bad.empty()) return edges;
  }
  throw Error("biregular block: repair budget exhausted after restarts");
}

inline std::vector<Vertex> id_range(std::size_t first, std::size_t count) {
  std::vector<Vertex> ids(count);
  std::iota(ids.begin(), ids.end(), static_cast<Vertex>(first));
  return ids;
}

}  // namespace detail

/// Part sizes of the distribution D at (n, alpha).
struct DistDLayout {
  std::size_t d = 0;            // Y-vertex degree, even
  std::size_t x_part = 0;       // |X1| = |X2|
  std::size_t y_part = 0;       // |Y1| = |Y2|
  std::size_t block_edges = 0;  // edges between each X part and each Y part
  std::size_t z = 0;            // isolated vertices
};

/// d is floor(sqrt(n)/c2) rounded down to even. Each of the four X-Y
/// blocks gets E edges, the largest multiple of lcm(alpha/2, d/2) with
/// E <= (n/4)(alpha/2); then |X_b| = E/(alpha/2) and |Y_b| = E/(d/2), and
/// leftover vertices go to Z.
inline DistDLayout dist_d_layout(std::size_t n, std::size_t alpha, double c2 = 4.0) {
  if (alpha < 2 || alpha % 2 != 0) throw Error("gen_dist_D needs an even alpha >= 2");
  std::size_t d = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n)) / c2));
  d -= d % 2;
  if (d < 2) throw Error("gen_dist_D: n too small for d >= 2");
  if (alpha > d) throw Error("gen_dist_D needs alpha <= d = " + std::to_string(d));
  const std::size_t ax = alpha / 2;
  const std::size_t dy = d / 2;
  const std::size_t step = std::lcm(ax, dy);
  const std::size_t limit = (n / 4) * ax;
  DistDLayout layout;
  layout.d = d;
  layout.block_edges = limit / step * step;
  if (layout.block_edges == 0) throw Error("gen_dist_D: n too small for one block");
  layout.x_part = layout.block_edges / ax;
  layout.y_part = layout.block_edges / dy;
  layout.z = n - 2 * layout.x_part - 2 * layout.y_part;
  return layout;
}

/// Sample from D: parts X1, X2, Y1, Y2, Z (ids in that order); each X
/// vertex has alpha/2 neighbors in each Y part, each Y vertex d/2 in each X
/// part, no parallel edges.
inline Instance gen_dist_D(std::size_t n, std::size_t alpha, std::uint64_t seed,
                           double c2 = 4.0) {
  const DistDLayout L = dist_d_layout(n, alpha, c2);
  Rng rng(seed, 0);
  const std::size_t x1 = 0;
  const std::size_t x2 = L.x_part;
  const std::size_t y1 = 2 * L.x_part;
  const std::size_t y2 = y1 + L.y_part;
  EdgeBuilder b(n);
  for (std::size_t xs : {x1, x2}) {
    for (std::size_t ys : {y1, y2}) {
      for (const Edge& e : detail::sample_biregular(detail::id_range(xs, L.x_part), alpha / 2,
                                                    detail::id_range(ys, L.y_part), L.d / 2,
                                                    rng)) {
        if (!b.add(e.u, e.v)) throw Error("gen_dist_D: duplicate edge across blocks");
      }
    }
  }
  std::vector<std::uint8_t> part(n, 4);
  for (std::size_t v = 0; v < y2 + L.y_part; ++v) {
    part[v] = v < x2 ? 0 : v < y1 ? 1 : v < y2 ? 2 : 3;
  }
  Instance inst = detail::with_parts(
      b.build(), "dist_d",
      {{"n", n}, {"alpha", alpha}, {"c2", c2}, {"d", L.d}, {"x_part", L.x_part},
       {"y_part", L.y_part}, {"block_edges", L.block_edges}, {"z", L.z}},
      {"X1", "X2", "Y1", "Y2", "Z"}, std::move(part));
  inst.seed = seed;
  return inst;
}

// ---------------------------------------------------------------------------
// Planted instances

enum class PlantedProfile { kAllLight, kOneHeavy, kTwoHeavy, kThreeHeavy };

inline std::string profile_name(PlantedProfile p) {
  switch (p) {
    case PlantedProfile::kAllLight: return "all-light";
    case PlantedProfile::kOneHeavy: return "one-heavy";
    case PlantedProfile::kTwoHeavy: return "two-heavy";
    case PlantedProfile::kThreeHeavy: return "three-heavy";
  }
  return "?";
}

inline PlantedProfile parse_profile(const std::string& name) {
  if (name == "all-light") return PlantedProfile::kAllLight;
  if (name == "one-heavy") return PlantedProfile::kOneHeavy;
  if (name == "two-heavy") return PlantedProfile::kTwoHeavy;
  if (name == "three-heavy") return PlantedProfile::kThreeHeavy;
  throw Error("unknown planted profile '" + name + "'");
}

struct PlantedSpec {
  std::size_t n = 0;
  std::size_t k = 4;
  double alpha_target = 2.0;
  double eps_target = 0.1;  // fraction of edges inside planted cycles
  PlantedProfile profile = PlantedProfile::kAllLight;
  /// Hub degree for heavy profiles. Default: the smallest even value above
  /// theta1 = sqrt(n)/eps (k = 4, 5) or above theta0 = 4 alpha/eps (k = 6
  /// and one-heavy for other k), with eps = eps_target and c1 = 1.
  std::optional<std::size_t> hub_degree;
};

/// Vertices sharing the planted cycles of one hub group, and the cycles.
namespace detail {

struct PlantedShape {
  std::size_t hubs_per_group = 0;
  std::size_t light_per_cycle = 0;
  std::size_t cycles_per_group = 0;  // 0: no hubs
};

inline PlantedShape planted_shape(const PlantedSpec& s, std::size_t hub_degree) {
  const std::size_t per_group = hub_degree / 2;
  switch (s.profile) {
    case PlantedProfile::kAllLight: return {0, s.k, 0};
    case PlantedProfile::kOneHeavy: return {1, s.k - 1, per_group};
    case PlantedProfile::kTwoHeavy: return {2, s.k - 2, per_group};
    case PlantedProfile::kThreeHeavy: return {3, 3, per_group};
  }
  return {};
}

}  // namespace detail

inline std::size_t default_hub_degree(const PlantedSpec& s) {
  TesterParams p;
  p.eps = s.eps_target;
  p.alpha = s.alpha_target;
  const bool above_theta1 =
      (s.k == 4 || s.k == 5) && s.profile != PlantedProfile::kOneHeavy;
  const double threshold = above_theta1 ? p.theta1_c4(s.n) : p.theta0();
  auto d = static_cast<std::size_t>(std::floor(threshold)) + 1;
  return d + d % 2;
}

/// Edge-disjoint C_k copies in the requested degree profile, with the
/// remaining vertices on one filler path. The copy count t is the smallest
/// with k*t >= eps_target * m (hub profiles round t up to whole hub
/// groups when room allows). Vertex labels are shuffled with `seed`.
///
///  all-light    disjoint C_k copies
///  one-heavy    each hub closes hub_degree/2 cycles through light paths
///  two-heavy    k = 4: hub pairs h1, h2 with cycles h1-a-h2-b (a K_{2,D});
///               k = 5: cycles h1-a-h2-b-c
///  three-heavy  k = 6: hub triples with cycles h1-a-h2-b-h3-c
///
/// Minimum n: k for all-light; one hub group plus its light vertices
/// otherwise.
inline Instance gen_planted(const PlantedSpec& spec, std::uint64_t seed) {
  const std::size_t k = spec.k;
  if (k < 3 || k > kExactMaxCycleLength) throw Error("gen_planted: k out of range");
  if (!(spec.eps_target > 0.0 && spec.eps_target <= 1.0)) {
    throw Error("gen_planted: eps_target must be in (0, 1]");
  }
  if (spec.profile == PlantedProfile::kTwoHeavy && k != 4 && k != 5) {
    throw Error("gen_planted: two-heavy profile needs k = 4 or 5");
  }
  if (spec.profile == PlantedProfile::kThreeHeavy && k != 6) {
    throw Error("gen_planted: three-heavy profile needs k = 6");
  }
  const bool hubs = spec.profile != PlantedProfile::kAllLight;
  const std::size_t hub_degree = hubs ? spec.hub_degree.value_or(default_hub_degree(spec)) : 0;
  if (hubs && hub_degree < 2) throw Error("gen_planted: hub degree must be >= 2");
  const detail::PlantedShape shape = detail::planted_shape(spec, hub_degree);
  const std::size_t n = spec.n;

  auto vertices_for = [&](std::size_t t) {
    std::size_t used = t * shape.light_per_cycle;
    if (hubs) {
      used += (t + shape.cycles_per_group - 1) / shape.cycles_per_group * shape.hubs_per_group;
    }
    return used;
  };
  auto enough = [&](std::size_t t) {
    const std::size_t rest = n - vertices_for(t);
    const double m = static_cast<double>(k * t + (rest >= 2 ? rest - 1 : 0));
    return static_cast<double>(k * t) >= spec.eps_target * m;
  };
  std::size_t t = 1;
  if (vertices_for(1) > n) throw Error("gen_planted: n too small for the profile");
  while (!enough(t)) {
    if (vertices_for(t + 1) > n) throw Error("gen_planted: infeasible eps_target");
    ++t;
  }
  if (hubs) {
    const std::size_t full =
        (t + shape.cycles_per_group - 1) / shape.cycles_per_group * shape.cycles_per_group;
    if (vertices_for(full) <= n) t = full;
  }

  EdgeBuilder b(n);
  DisjointCycleSet cert;
  cert.k = k;
  std::vector<std::uint8_t> part(n, 2);  // 0 hub, 1 planted light, 2 filler
  Vertex next = 0;
  auto fresh = [&](std::uint8_t label) {
    part[next] = label;
    return next++;
  };
  std::vector<Vertex> group_hubs;
  for (std::size_t c = 0; c < t; ++c) {
    if (hubs && c % shape.cycles_per_group == 0) {
      group_hubs.clear();
      for (std::size_t h = 0; h < shape.hubs_per_group; ++h) group_hubs.push_back(fresh(0));
    }
    std::vector<Vertex> cycle;
    switch (spec.profile) {
      case PlantedProfile::kAllLight:
        for (std::size_t i = 0; i < k; ++i) cycle.push_back(fresh(1));
        break;
      case PlantedProfile::kOneHeavy:
        cycle.push_back(group_hubs[0]);
        for (std::size_t i = 1; i < k; ++i) cycle.push_back(fresh(1));
        break;
      case PlantedProfile::kTwoHeavy:
        cycle = {group_hubs[0], fresh(1), group_hubs[1], fresh(1)};
        if (k == 5) cycle.push_back(fresh(1));
        break;
      case PlantedProfile::kThreeHeavy:
        cycle = {group_hubs[0], fresh(1), group_hubs[1], fresh(1), group_hubs[2], fresh(1)};
        break;
    }
    b.add_cycle(cycle);
    cert.cycles.push_back(cycle);
  }
  std::vector<Vertex> filler;
  while (next < n) filler.push_back(fresh(2));
  b.add_path(filler);

  Instance inst;
  inst.graph = b.build();
  inst.family = "planted";
  inst.seed = seed;
  inst.parameters = {{"n", n},
                     {"k", k},
                     {"alpha_target", spec.alpha_target},
                     {"eps_target", spec.eps_target},
                     {"profile", profile_name(spec.profile)},
                     {"hub_degree", hub_degree},
                     {"planted_cycles", t}};
  inst.certificate = std::move(cert);
  inst.part_names = {"hub", "planted", "filler"};
  inst.part = std::move(part);
  Rng rng(seed, 0);
  relabel(inst, random_permutation(n, rng));
  return inst;
}

// ---------------------------------------------------------------------------
// Pattern-free controls

/// Random forest: each vertex after the first attaches to a uniform earlier
/// vertex, or starts a new tree with probability `new_tree`. Labels shuffled.
inline Instance gen_forest(std::size_t n, std::uint64_t seed, double new_tree = 0.02) {
  Rng rng(seed, 0);
  EdgeBuilder b(n);
  for (Vertex v = 1; v < n; ++v) {
    if (rng.bernoulli(new_tree)) continue;
    b.add(v, static_cast<Vertex>(rng.below(v)));
  }
  Instance inst;
  inst.graph = b.build();
  inst.family = "forest";
  inst.seed = seed;
  inst.parameters = {{"n", n}, {"new_tree", new_tree}};
  relabel(inst, random_permutation(n, rng));
  return inst;
}

/// Random graph with no cycle shorter than `girth`: random pairs are joined
/// only when they are at distance >= girth - 1. With `bipartite`, edges run
/// between the halves [0, n/2) and [n/2, n), so odd cycles are absent too.
/// Stops at m_target edges or after 50 * m_target proposals.
inline Instance gen_high_girth(std::size_t n, std::size_t m_target, std::size_t girth,
                               bool bipartite, std::uint64_t seed) {
  if (n < 2) throw Error("gen_high_girth needs n >= 2");
  if (girth < 3) throw Error("gen_high_girth needs girth >= 3");
  Rng rng(seed, 0);
  EdgeBuilder b(n);
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<std::uint32_t> mark(n, 0);
  std::uint32_t stamp = 0;
  // True when v is within `radius` of u.
  auto near = [&](Vertex u, Vertex v, std::size_t radius) {
    ++stamp;
    std::vector<Vertex> frontier{u};
    mark[u] = stamp;
    for (std::size_t r = 0; r < radius && !frontier.empty(); ++r) {
      std::vector<Vertex> next;
      for (Vertex x : frontier) {
        for (Vertex y : adj[x]) {
          if (mark[y] == stamp) continue;
          if (y == v) return true;
          mark[y] = stamp;
          next.push_back(y);
        }
      }
      frontier = std::move(next);
    }
    return false;
  };
  const std::size_t half = n / 2;
  const std::size_t proposals = 50 * m_target + 100;
  for (std::size_t i = 0; i < proposals && b.num_edges() < m_target; ++i) {
    Vertex u;
    Vertex v;
    if (bipartite) {
      u = static_cast<Vertex>(rng.below(half));
      v = static_cast<Vertex>(half + rng.below(n - half));
    } else {
      u = static_cast<Vertex>(rng.below(n));
      v = static_cast<Vertex>(rng.below(n));
    }
    if (u == v || b.has(u, v) || near(u, v, girth - 2)) continue;
    b.add(u, v);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Instance inst;
  inst.graph = b.build();
  inst.family = "high_girth";
  inst.seed = seed;
  inst.parameters = {{"n", n}, {"m_target", m_target}, {"girth", girth},
                     {"bipartite", bipartite}};
  if (bipartite) {
    inst.part_names = {"L", "R"};
    inst.part.assign(n, 1);
    std::fill(inst.part.begin(), inst.part.begin() + static_cast<std::ptrdiff_t>(half), 0);
  }
  return inst;
}

/// `stars` disjoint copies of K_{1,leaves}; centers first.
inline Instance gen_star_forest(std::size_t stars, std::size_t leaves) {
  const std::size_t n = stars * (leaves + 1);
  EdgeBuilder b(n);
  for (std::size_t s = 0; s < stars; ++s) {
    for (std::size_t l = 0; l < leaves; ++l) {
      b.add(static_cast<Vertex>(s), static_cast<Vertex>(stars + s * leaves + l));
    }
  }
  Instance inst;
  inst.graph = b.build();
  inst.family = "star_forest";
  inst.parameters = {{"stars", stars}, {"leaves", leaves}};
  return inst;
}

/// Balanced d-regular tripartite graph: parts P0, P1, P2 of n_part vertices
/// each (ids part * n_part + i) and a random (d/2)-regular bipartite graph
/// between every two parts, so every vertex has d/2 neighbors in each
/// other part.
inline Instance gen_regular_tripartite(std::size_t n_part, std::size_t d, std::uint64_t seed) {
  if (d % 2 != 0 || d == 0) throw Error("gen_regular_tripartite needs an even d >= 2");
  if (d / 2 > n_part) throw Error("gen_regular_tripartite needs d/2 <= n_part");
  Rng rng(seed, 0);
  EdgeBuilder b(3 * n_part);
  const std::pair<std::size_t, std::size_t> blocks[] = {{0, 1}, {1, 2}, {0, 2}};
  for (auto [a, c] : blocks) {
    for (const Edge& e : detail::sample_biregular(detail::id_range(a * n_part, n_part), d / 2,
                                                  detail::id_range(c * n_part, n_part), d / 2,
                                                  rng)) {
      b.add(e.u, e.v);
    }
  }
  Instance inst;
  inst.graph = b.build();
  inst.family = "tripartite_regular";
  inst.seed = seed;
  inst.parameters = {{"n_part", n_part}, {"d", d}};
  inst.part_names = {"P0", "P1", "P2"};
  inst.part.resize(3 * n_part);
  for (std::size_t v = 0; v < 3 * n_part; ++v) inst.part[v] = static_cast<std::uint8_t>(v / n_part);
  return inst;
}

/// Triangle-free d-regular tripartite graph on Z_N per part (N = n_part):
/// x in P0 joins x + a in P1 and y in P1 joins y + b in P2 for a, b in
/// [0, d/2); x in P0 joins x + c in P2 for c in [d - 1, 3d/2 - 1). A
/// triangle would need a + b = c mod N, impossible once N > 3d/2 - 2.
/// `seed` permutes ids inside each part.
inline Instance gen_triangle_free_tripartite(std::size_t n_part, std::size_t d,
                                             std::uint64_t seed) {
  if (d % 2 != 0 || d == 0) throw Error("gen_triangle_free_tripartite needs an even d >= 2");
  const std::size_t r = d / 2;
  if (n_part + 2 <= 3 * r) {
    throw Error("gen_triangle_free_tripartite needs n_part > 3d/2 - 2");
  }
  Rng rng(seed, 0);
  std::vector<Vertex> perm(3 * n_part);
  for (std::size_t p = 0; p < 3; ++p) {
    std::vector<Vertex> local = random_permutation(n_part, rng);
    for (std::size_t i = 0; i < n_part; ++i) {
      perm[p * n_part + i] = static_cast<Vertex>(p * n_part + local[i]);
    }
  }
  auto id = [&](std::size_t p, std::size_t x) { return perm[p * n_part + x % n_part]; };
  EdgeBuilder b(3 * n_part);
  for (std::size_t x = 0; x < n_part; ++x) {
    for (std::size_t a = 0; a < r; ++a) b.add(id(0, x), id(1, x + a));
  }
  for (std::size_t y = 0; y < n_part; ++y) {
    for (std::size_t a = 0; a < r; ++a) b.add(id(1, y), id(2, y + a));
  }
  for (std::size_t x = 0; x < n_part; ++x) {
    for (std::size_t c = 2 * r - 1; c < 3 * r - 1; ++c) b.add(id(0, x), id(2, x + c));
  }
  Instance inst;
  inst.graph = b.build();
  inst.family = "tripartite_triangle_free";
  inst.seed = seed;
  inst.parameters = {{"n_part", n_part}, {"d", d}};
  inst.part_names = {"P0", "P1", "P2"};
  inst.part.resize(3 * n_part);
  for (std::size_t v = 0; v < 3 * n_part; ++v) inst.part[v] = static_cast<std::uint8_t>(v / n_part);
  return inst;
}

// ---------------------------------------------------------------------------
// Path subdivision

/// Path lengths replacing P0-P1, P1-P2 and P0-P2 edges; they sum to k and
/// differ by at most one.
struct SubdivisionLengths {
  std::size_t l01 = 0;
  std::size_t l12 = 0;
  std::size_t l02 = 0;

  std::size_t between(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    if (a == 0 && b == 1) return l01;
    if (a == 1 && b == 2) return l12;
    if (a == 0 && b == 2) return l02;
    throw Error("subdivision: edge inside one part");
  }
};

inline SubdivisionLengths subdivision_lengths(std::size_t k) {
  if (k < 6) throw Error("subdivision needs k >= 6");
  const std::size_t base = k / 3;
  const std::size_t rem = k % 3;
  return {base + (rem >= 1 ? 1 : 0), base + (rem >= 2 ? 1 : 0), base};
}

/// Checks that `part` labels every vertex of g with 0, 1 or 2 and that no
/// edge stays inside a part.
inline void check_tripartite(const Graph& g, const std::vector<std::uint8_t>& part) {
  if (part.size() != g.num_vertices()) throw Error("subdivision: part labels do not match n");
  for (std::uint8_t p : part) {
    if (p > 2) throw Error("subdivision: part labels must be 0, 1 or 2");
  }
  for (const Edge& e : g.edges()) {
    if (part[e.u] == part[e.v]) {
      throw Error("subdivision: input is not tripartite (edge {" + std::to_string(e.u) + ", " +
                  std::to_string(e.v) + "})");
    }
  }
}

/// Subdivided graph for a given id layout: `path_ids[e]` lists the internal
/// vertices of edge e of g (insertion index), walking from its smaller-id
/// endpoint. Original vertices keep their ids and the neighbor order of g;
/// an internal vertex lists its neighbor toward the smaller endpoint first.
inline Graph subdivide_with_layout(const Graph& g, std::size_t total_vertices,
                                   const std::vector<std::vector<Vertex>>& path_ids) {
  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    index[edge_key(g.edges()[e].u, g.edges()[e].v)] = e;
  }
  std::vector<std::vector<Vertex>> adj(total_vertices);
  for (Vertex w = 0; w < g.num_vertices(); ++w) {
    for (Vertex x : g.neighbors(w)) {
      const auto& ids = path_ids[index.at(edge_key(w, x))];
      adj[w].push_back(w < x ? ids.front() : ids.back());
    }
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Vertex lo = std::min(g.edges()[e].u, g.edges()[e].v);
    const Vertex hi = std::max(g.edges()[e].u, g.edges()[e].v);
    const auto& ids = path_ids[e];
    for (std::size_t j = 0; j < ids.size(); ++j) {
      adj[ids[j]] = {j == 0 ? lo : ids[j - 1], j + 1 == ids.size() ? hi : ids[j + 1]};
    }
  }
  return Graph::from_adjacency(adj);
}

/// Replaces every edge of the tripartite g' by a path whose length depends
/// on the pair of parts it joins (see subdivision_lengths), so that each
/// triangle becomes a C_k. Internal vertices take ids n', n'+1, ... in
/// (edge index, position) order.
inline Instance subdivide_for_ck(const Graph& g, const std::vector<std::uint8_t>& part,
                                 std::size_t k) {
  check_tripartite(g, part);
  const SubdivisionLengths lengths = subdivision_lengths(k);
  std::vector<std::vector<Vertex>> path_ids(g.num_edges());
  auto next = static_cast<Vertex>(g.num_vertices());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const std::size_t len = lengths.between(part[g.edges()[e].u], part[g.edges()[e].v]);
    for (std::size_t j = 1; j < len; ++j) path_ids[e].push_back(next++);
  }
  Instance inst;
  inst.graph = subdivide_with_layout(g, next, path_ids);
  inst.family = "subdivided";
  inst.parameters = {{"k", k},
                     {"base_n", g.num_vertices()},
                     {"base_m", g.num_edges()},
                     {"lengths", {lengths.l01, lengths.l12, lengths.l02}}};
  inst.part_names = {"P0", "P1", "P2", "path"};
  inst.part.assign(next, 3);
  std::copy(part.begin(), part.end(), inst.part.begin());
  return inst;
}

// ---------------------------------------------------------------------------
// Metadata sidecar

/// Light/heavy split of the instance's vertices under `p`: ids of vertices
/// above theta0, above theta1 (C4/C5 form) and above theta1 (C6 form).
inline nlohmann::json degree_classification(const Graph& g, const TesterParams& p) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> heavy;
  std::vector<Vertex> above_c4;
  std::vector<Vertex> above_c6;
  for (Vertex v = 0; v < n; ++v) {
    const auto d = static_cast<double>(g.degree(v));
    if (d > p.theta0()) heavy.push_back(v);
    if (d > p.theta1_c4(n)) above_c4.push_back(v);
    if (d > p.theta1_c6(n)) above_c6.push_back(v);
  }
  return {{"eps", p.eps},
          {"alpha", p.alpha},
          {"theta0", p.theta0()},
          {"theta1_c4", p.theta1_c4(n)},
          {"theta1_c6", p.theta1_c6(n)},
          {"light_count", n - heavy.size()},
          {"heavy", heavy},
          {"above_theta1_c4", above_c4},
          {"above_theta1_c6", above_c6}};
}

/// {family, seed, parameters, certificate?, parts?, degree_classes}
inline nlohmann::json instance_metadata(const Instance& inst, const TesterParams& p) {
  nlohmann::json meta = {{"family", inst.family},
                         {"seed", inst.seed},
                         {"n", inst.graph.num_vertices()},
                         {"m", inst.graph.num_edges()},
                         {"parameters", inst.parameters},
                         {"degree_classes", degree_classification(inst.graph, p)}};
  if (inst.certificate) {
    meta["certificate"] = {{"k", inst.certificate->k}, {"cycles", inst.certificate->cycles}};
  }
  if (!inst.part.empty()) {
    meta["parts"] = {{"names", inst.part_names}, {"labels", inst.part}};
  }
  return meta;
}

/// Writes `path` (edge list) and `path + ".meta.json"`.
inline void write_instance(const Instance& inst, const std::string& path,
                           const TesterParams& p) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  save_edge_list(inst.graph, out);
  std::ofstream meta(path + ".meta.json");
  if (!meta) throw Error("cannot open '" + path + ".meta.json' for writing");
  meta << instance_metadata(inst, p).dump(2) << '\n';
  if (!out || !meta) throw Error("write to '" + path + "' failed");
}

}  // namespace cktest
