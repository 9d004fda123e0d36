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
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cktest/explored.hpp"
#include "cktest/graph.hpp"
#include "cktest/oracle.hpp"
#include "cktest/params.hpp"
#include "cktest/pattern.hpp"
#include "cktest/rng.hpp"
#include "cktest/verdict.hpp"
#include "cktest/witness.hpp"

namespace cktest {

/// Substream purposes. Each tester iteration reads its randomness from
/// rng.substream(purpose, iteration), so raising a sample size only appends
/// draws and never reshuffles what other iterations see.
enum StreamPurpose : std::uint32_t {
  kStreamSelect = 1,
  kStreamNeighbors = 2,
  kStreamWalks = 3,
  kStreamC6 = 4,
  kStreamVertices = 5,
  kStreamEdges = 6,
};

inline QueryStats operator-(const QueryStats& a, const QueryStats& b) {
  return {a.degree - b.degree, a.neighbor - b.neighbor, a.pair - b.pair};
}

namespace detail {

/// Bookkeeping shared by all testers: witness search, memoized full
/// expansions, and translation of session termination into Accept.
template <QueryOracle O>
class TesterRun {
 public:
  TesterRun(O& oracle, WitnessSearch search)
      : oracle_(oracle), search_(std::move(search)), start_(oracle.stats()),
        seed_(oracle.rng().seed()) {}

  /// Every neighbor of v. A vertex already expanded in this run is served
  /// from the explored subgraph, which then holds its full neighborhood.
  std::vector<Vertex> expand(Vertex v) {
    if (!expanded_.count(v)) {
      expand_all(oracle_, v);
      expanded_.insert(v);
    }
    auto nb = std::as_const(oracle_).explored().neighbors(v);
    return {nb.begin(), nb.end()};
  }

  /// Runs the witness search over edges revealed since the last check.
  bool check() {
    if (witness_) return true;
    auto found = search_.scan(oracle_.explored());
    if (!found) return false;
    if (!search_.validate(std::as_const(oracle_).explored(), *found)) {
      throw Error("internal error: witness failed validation");
    }
    witness_ = std::move(found);
    return true;
  }

  void terminate() { terminated_ = true; }

  std::uint64_t spent() const { return oracle_.stats().total() - start_.total(); }

  template <typename Body>
  Verdict execute(Body&& body) {
    try {
      body();
      check();
    } catch (const SessionTerminated&) {
      terminated_ = true;
    }
    const QueryStats used = oracle_.stats() - start_;
    if (witness_) return Verdict::reject(*witness_, used, seed_);
    return Verdict::accept(used, seed_, terminated_);
  }

 private:
  O& oracle_;
  WitnessSearch search_;
  QueryStats start_;
  SeedPair seed_;
  std::unordered_set<Vertex> expanded_;
  std::optional<std::vector<Vertex>> witness_;
  bool terminated_ = false;
};

inline double effective_theta0(std::size_t n, const TesterParams& p) {
  return std::min(p.theta0(), n == 0 ? 0.0 : static_cast<double>(n - 1));
}

}  // namespace detail

/// Rounds used by Select-an-Edge at this n.
inline std::size_t select_rounds(std::size_t n, const TesterParams& p) {
  return TesterParams::ceil_count(p.select_mult * detail::effective_theta0(n, p));
}

/// Select-an-Edge: up to select_rounds(n) rounds of "uniform u; if
/// d(u) <= theta0, with probability d(u)/theta0 return a uniform edge at u".
/// The returned edge is {u, w} with u the sampled light endpoint.
///
/// When theta0 exceeds n - 1 it is clamped to n - 1 for both the round
/// count and the acceptance probability; the conditional distribution of
/// the returned edge does not change.
template <QueryOracle O>
std::optional<Edge> select_an_edge(O& oracle, const TesterParams& p, Rng& rng) {
  const std::size_t n = oracle.num_vertices();
  const double theta0 = p.theta0();
  const double theta_eff = detail::effective_theta0(n, p);
  if (theta_eff <= 0.0) return std::nullopt;
  const std::size_t rounds = select_rounds(n, p);
  for (std::size_t r = 0; r < rounds; ++r) {
    const auto u = static_cast<Vertex>(rng.below(n));
    const std::size_t d = degree_of(oracle, u);
    if (d == 0 || static_cast<double>(d) > theta0) continue;
    if (rng.bernoulli(static_cast<double>(d) / theta_eff)) {
      return Edge{u, random_neighbor(oracle, u, rng)};
    }
  }
  return std::nullopt;
}

template <QueryOracle O>
std::optional<Edge> select_an_edge(O& oracle, const TesterParams& p) {
  return select_an_edge(oracle, p, oracle.rng());
}

/// Uniform edge of G_{<= theta0}, the edges with at least one endpoint of
/// degree <= theta0. Each round picks v, j in [floor(theta0)] and a coin;
/// a light-heavy edge is returned outright, a light-light edge only on
/// heads, which evens out its two chances of being proposed. Gives up after
/// ceil(loop_mult * n * theta0 / m_hint) rounds. Returns {light v, u}.
template <QueryOracle O>
std::optional<Edge> select_uniform_edge_low(O& oracle, double theta0, std::uint64_t m_hint,
                                            double loop_mult, Rng& rng) {
  const std::size_t n = oracle.num_vertices();
  if (n < 2) return std::nullopt;
  const auto slots = static_cast<std::size_t>(
      std::min(std::floor(theta0), static_cast<double>(n - 1)));
  if (slots == 0) return std::nullopt;
  const std::size_t cap = std::max<std::size_t>(
      1, TesterParams::ceil_count(loop_mult * static_cast<double>(n) *
                                  static_cast<double>(slots) /
                                  static_cast<double>(std::max<std::uint64_t>(m_hint, 1))));
  for (std::size_t r = 0; r < cap; ++r) {
    const auto v = static_cast<Vertex>(rng.below(n));
    const std::size_t j = rng.between(1, slots);
    const bool heads = rng.coin();
    const std::size_t dv = degree_of(oracle, v);
    if (static_cast<double>(dv) > theta0 || j > dv) continue;
    const Vertex u = oracle.neighbor(v, j);
    const std::size_t du = degree_of(oracle, u);
    if (static_cast<double>(du) > theta0 || heads) return Edge{v, u};
  }
  return std::nullopt;
}

template <QueryOracle O>
std::optional<Edge> select_uniform_edge_low(O& oracle, double theta0, std::uint64_t m_hint,
                                            double loop_mult = 20.0) {
  return select_uniform_edge_low(oracle, theta0, m_hint, loop_mult, oracle.rng());
}

/// Upper bound on the queries test_c4 may issue at this n; the tester
/// never exceeds it.
inline std::uint64_t c4_query_bound(std::size_t n, const TesterParams& p) {
  const double theta1 = p.theta1_c4(n);
  const auto max_deg = static_cast<std::size_t>(
      std::min(std::floor(theta1), n == 0 ? 0.0 : static_cast<double>(n - 1)));
  const std::size_t s1_max = std::min(p.s1(max_deg), max_deg);
  const auto theta_min = static_cast<std::uint64_t>(std::floor(p.theta_min_c4(n)));
  const std::uint64_t low = s1_max * (2 + theta_min);
  const std::uint64_t high = 3 * static_cast<std::uint64_t>(p.s2_c4(n));
  const std::uint64_t per_iteration = select_rounds(n, p) + 2 + std::max(low, high);
  return p.repetitions_c4() * per_iteration;
}

/// C4-freeness tester. Repeats t times: Select-an-Edge, fair-coin endpoint
/// v; if d(v) <= theta1 sample s1 neighbors of v and expand those of degree
/// <= theta_min, else take s2 length-2 random walks from v. Rejects as soon
/// as the explored subgraph contains a C4.
template <QueryOracle O>
Verdict test_c4(O& oracle, const TesterParams& p) {
  p.validate();
  const std::size_t n = oracle.num_vertices();
  const double theta1 = p.theta1_c4(n);
  const double theta_min = p.theta_min_c4(n);
  const std::size_t t = p.repetitions_c4();
  const std::size_t s2 = p.s2_c4(n);
  const Rng base = oracle.rng();
  detail::TesterRun<O> run(oracle, WitnessSearch(4));
  return run.execute([&] {
    for (std::size_t it = 0; it < t; ++it) {
      Rng select_rng = base.substream(kStreamSelect, it);
      const auto e = select_an_edge(oracle, p, select_rng);
      if (!e) continue;
      const Vertex v = select_rng.coin() ? e->u : e->v;
      const std::size_t dv = degree_of(oracle, v);
      if (static_cast<double>(dv) <= theta1) {
        Rng sample_rng = base.substream(kStreamNeighbors, it);
        for (Vertex u : sample_distinct_neighbors(oracle, v, p.s1(dv), sample_rng)) {
          if (static_cast<double>(degree_of(oracle, u)) <= theta_min) run.expand(u);
        }
      } else {
        Rng walk_rng = base.substream(kStreamWalks, it);
        for (std::size_t j = 0; j < s2; ++j) {
          const Vertex a = random_neighbor(oracle, v, walk_rng);
          random_neighbor(oracle, a, walk_rng);
        }
      }
      if (run.check()) return;
    }
  });
}

/// C5-freeness tester: as test_c4, with a depth-2 BFS restricted to
/// vertices of degree <= theta0 from each sampled neighbor, and s2
/// length-3 walks in the high-degree branch.
template <QueryOracle O>
Verdict test_c5(O& oracle, const TesterParams& p) {
  p.validate();
  const std::size_t n = oracle.num_vertices();
  const double theta0 = p.theta0();
  const double theta1 = p.theta1_c4(n);
  const std::size_t t = p.repetitions_c4();
  const std::size_t s2 = p.s2_c5(n);
  const Rng base = oracle.rng();
  detail::TesterRun<O> run(oracle, WitnessSearch(5));
  auto light = [&](Vertex x) { return static_cast<double>(degree_of(oracle, x)) <= theta0; };
  return run.execute([&] {
    for (std::size_t it = 0; it < t; ++it) {
      Rng select_rng = base.substream(kStreamSelect, it);
      const auto e = select_an_edge(oracle, p, select_rng);
      if (!e) continue;
      const Vertex v = select_rng.coin() ? e->u : e->v;
      const std::size_t dv = degree_of(oracle, v);
      if (static_cast<double>(dv) <= theta1) {
        Rng sample_rng = base.substream(kStreamNeighbors, it);
        for (Vertex u : sample_distinct_neighbors(oracle, v, p.s1(dv), sample_rng)) {
          if (!light(u)) continue;
          for (Vertex w : run.expand(u)) {
            if (light(w)) run.expand(w);
          }
        }
      } else {
        Rng walk_rng = base.substream(kStreamWalks, it);
        for (std::size_t j = 0; j < s2; ++j) {
          const Vertex a = random_neighbor(oracle, v, walk_rng);
          const Vertex b = random_neighbor(oracle, a, walk_rng);
          random_neighbor(oracle, b, walk_rng);
        }
      }
      if (run.check()) return;
    }
  });
}

/// C6-freeness tester. Repeats t times: uniform v, skipped unless
/// d(v) <= theta0, then a BFS from v to depth 4 where
///  - a vertex of degree <= theta0 is expanded fully;
///  - a heavier vertex reached from some light vertex is expanded fully if
///    its degree is <= theta1, else ceil(theta1) distinct random neighbors
///    are queried;
///  - a heavy vertex reached only from heavy vertices is not expanded.
template <QueryOracle O>
Verdict test_c6(O& oracle, const TesterParams& p) {
  p.validate();
  const std::size_t n = oracle.num_vertices();
  const double theta0 = p.theta0();
  const double theta1 = p.theta1_c6(n);
  const std::size_t t = p.repetitions_c6(n);
  const std::size_t sample = TesterParams::ceil_count(theta1);
  const Rng base = oracle.rng();
  detail::TesterRun<O> run(oracle, WitnessSearch(6));
  return run.execute([&] {
    if (n == 0) return;
    for (std::size_t rep = 0; rep < t; ++rep) {
      Rng rng = base.substream(kStreamC6, rep);
      const auto v = static_cast<Vertex>(rng.below(n));
      if (static_cast<double>(degree_of(oracle, v)) > theta0) continue;

      std::unordered_set<Vertex> visited{v};
      std::vector<Vertex> frontier{v};
      std::unordered_map<Vertex, bool> from_light{{v, true}};
      for (int depth = 0; depth < 4; ++depth) {
        std::vector<Vertex> next;
        std::unordered_map<Vertex, bool> next_from_light;
        for (Vertex x : frontier) {
          const std::size_t dx = degree_of(oracle, x);
          const bool x_light = static_cast<double>(dx) <= theta0;
          std::vector<Vertex> reached;
          if (x_light) {
            reached = run.expand(x);
          } else if (from_light[x]) {
            reached = static_cast<double>(dx) <= theta1
                          ? run.expand(x)
                          : sample_distinct_neighbors(oracle, x, sample, rng);
          } else {
            continue;
          }
          for (Vertex y : reached) {
            if (visited.insert(y).second) {
              next.push_back(y);
              next_from_light[y] = x_light;
            } else if (auto it = next_from_light.find(y); it != next_from_light.end()) {
              it->second = it->second || x_light;
            }
          }
        }
        frontier = std::move(next);
        from_light = std::move(next_from_light);
      }
      if (run.check()) return;
    }
  });
}

/// Vertex sample size of the general F tester.
inline std::size_t f_general_samples(std::size_t k, std::size_t ell, std::uint64_t m,
                                     const TesterParams& p) {
  const double l = static_cast<double>(ell);
  const double mm = static_cast<double>(m);
  return TesterParams::ceil_count(p.s_mult * std::pow(static_cast<double>(k), 2.0 + 1.0 / l) *
                                  mm * std::pow(p.alpha / mm, 1.0 / l) *
                                  std::pow(1.0 / p.eps, 1.0 + 2.0 / l));
}

/// F-freeness tester: s uniform vertices (all of them when s >= n), every
/// light one expanded; rejects on an F-copy in the explored subgraph.
/// Accepts once the queries would pass s * (1 + 2 * cap_mult * avg_degree),
/// with avg_degree = 2 m_hint / n.
template <QueryOracle O>
Verdict test_f_general(O& oracle, const PatternGraph& f, const TesterParams& p,
                       std::uint64_t m_hint) {
  p.validate();
  const std::size_t n = oracle.num_vertices();
  const double theta0 = p.theta0();
  const Rng base = oracle.rng();
  detail::TesterRun<O> run(oracle, WitnessSearch(f));
  return run.execute([&] {
    if (n == 0 || m_hint == 0) return;
    const std::size_t s = f_general_samples(f.num_vertices(), ell_of(f), m_hint, p);
    const bool enumerate = s >= n;
    const std::size_t count = enumerate ? n : s;
    const double avg_degree = 2.0 * static_cast<double>(m_hint) / static_cast<double>(n);
    const double cap = static_cast<double>(count) * (1.0 + 2.0 * p.cap_mult * avg_degree);
    Rng rng = base.substream(kStreamVertices, 0);
    for (std::size_t i = 0; i < count; ++i) {
      const auto x = static_cast<Vertex>(enumerate ? i : rng.below(n));
      if (static_cast<double>(run.spent() + 1) > cap) return run.terminate();
      const std::size_t dx = degree_of(oracle, x);
      if (static_cast<double>(dx) > theta0) continue;
      if (static_cast<double>(run.spent() + dx) > cap) return run.terminate();
      run.expand(x);
      if (run.check()) return;
    }
  });
}

/// Edge and vertex sample sizes of the odd-k C_k tester.
inline std::size_t ck_odd_edge_samples(std::size_t k, std::uint64_t m, const TesterParams& p) {
  const double e = 1.0 / (static_cast<double>(k) - 1.0);
  return TesterParams::ceil_count(
      p.s_mult * static_cast<double>(k) * std::pow(static_cast<double>(m), 1.0 - 2.0 * e) *
      std::pow(1.0 / p.alpha, 1.0 - 4.0 * e) * std::pow(p.eps, 1.0 - 6.0 * e));
}

inline std::size_t ck_odd_vertex_samples(std::size_t k, std::size_t n, std::uint64_t m,
                                         const TesterParams& p) {
  const double e = 1.0 / (static_cast<double>(k) - 1.0);
  return TesterParams::ceil_count(
      p.s_mult * static_cast<double>(k) * static_cast<double>(n) *
      std::pow(p.alpha * p.alpha / static_cast<double>(m), 2.0 * e) *
      std::pow(1.0 / p.eps, 6.0 * e));
}

/// C_k-freeness for odd k: s1 uniform edges of G_{<= theta0}, both
/// endpoints expanded when both are light; for k > 3 also s2 uniform
/// vertices, light ones expanded.
template <QueryOracle O>
Verdict test_ck_odd(O& oracle, std::size_t k, const TesterParams& p, std::uint64_t m_hint) {
  p.validate();
  if (k < 3 || k % 2 == 0) throw Error("test_ck_odd needs an odd k >= 3");
  if (k > kMaxPatternVertices) throw SizeLimitError("cycle length above pattern limit");
  const std::size_t n = oracle.num_vertices();
  const double theta0 = p.theta0();
  const Rng base = oracle.rng();
  detail::TesterRun<O> run(oracle, WitnessSearch(k));
  auto light = [&](Vertex x) { return static_cast<double>(degree_of(oracle, x)) <= theta0; };
  return run.execute([&] {
    if (n == 0 || m_hint == 0) return;
    const std::size_t s1 = ck_odd_edge_samples(k, m_hint, p);
    Rng edge_rng = base.substream(kStreamEdges, 0);
    for (std::size_t i = 0; i < s1; ++i) {
      const auto e = select_uniform_edge_low(oracle, theta0, m_hint, p.edge_loop_mult, edge_rng);
      if (!e) continue;
      if (light(e->u) && light(e->v)) {
        run.expand(e->u);
        run.expand(e->v);
        if (run.check()) return;
      }
    }
    if (k > 3) {
      const std::size_t s2 = ck_odd_vertex_samples(k, n, m_hint, p);
      const bool enumerate = s2 >= n;
      const std::size_t count = enumerate ? n : s2;
      Rng vertex_rng = base.substream(kStreamVertices, 0);
      for (std::size_t i = 0; i < count; ++i) {
        const auto x = static_cast<Vertex>(enumerate ? i : vertex_rng.below(n));
        if (!light(x)) continue;
        run.expand(x);
        if (run.check()) return;
      }
    }
  });
}

/// Sample size ceil(16 * ell * |X| / |T|^(1/ell)) for the tuple-hitting
/// experiment.
inline std::size_t tuple_hitting_samples(std::size_t universe, std::size_t tuples,
                                         std::size_t ell) {
  return TesterParams::ceil_count(16.0 * static_cast<double>(ell) *
                                  static_cast<double>(universe) /
                                  std::pow(static_cast<double>(tuples),
                                           1.0 / static_cast<double>(ell)));
}

/// One trial: draw s elements of [0, universe) with replacement and report
/// whether every element of some tuple was drawn. Tuples must be disjoint.
inline bool tuple_hitting_trial(std::size_t universe,
                                const std::vector<std::vector<std::uint32_t>>& tuples,
                                std::size_t s, Rng& rng) {
  constexpr std::uint32_t kNone = 0xFFFFFFFFu;
  std::vector<std::uint32_t> owner(universe, kNone);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    for (std::uint32_t x : tuples[t]) {
      if (x >= universe || owner[x] != kNone) {
        throw Error("tuples must be disjoint subsets of the universe");
      }
      owner[x] = static_cast<std::uint32_t>(t);
    }
  }
  std::vector<char> drawn(universe, 0);
  std::vector<std::size_t> hits(tuples.size(), 0);
  for (std::size_t i = 0; i < s; ++i) {
    const std::uint64_t x = rng.below(universe);
    if (drawn[x]) continue;
    drawn[x] = 1;
    if (owner[x] == kNone) continue;
    if (++hits[owner[x]] == tuples[owner[x]].size()) return true;
  }
  return false;
}

}  // namespace cktest
