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
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "cktest/exact.hpp"
#include "cktest/generators.hpp"
#include "cktest/oracle.hpp"
#include "cktest/params.hpp"
#include "cktest/pattern.hpp"
#include "cktest/rng.hpp"
#include "cktest/testers.hpp"
#include "cktest/verdict.hpp"

namespace cktest {

inline constexpr int kSpecSchemaVersion = 1;
inline constexpr int kCsvFormatVersion = 1;

namespace detail {

template <typename T>
T param_or(const nlohmann::json& params, const char* key, T fallback) {
  if (!params.is_object() || !params.contains(key) || params[key].is_null()) return fallback;
  try {
    return params[key].get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(std::string("parameter '") + key + "' has the wrong type");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Registries

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "c4_lb_g0", "c4_lb_g1",           "c5_lb_g0",
      "c5_lb_g1", "dist_d",             "planted",
      "forest",   "high_girth",         "tripartite_regular",
      "tripartite_triangle_free", "subdivided", "star_forest"};
  return names;
}

/// Builds family `family` at size n. Size-driven families interpret n
/// directly; tripartite families use n / 3 vertices per part; star_forest
/// uses n / (leaves + 1) stars; subdivided builds its base tripartite graph
/// at n / 3 per part, so its own vertex count is larger than n.
///
/// Parameters (all optional):
///   dist_d                    alpha (2), c2 (4)
///   planted                   k (4), profile ("all-light"), eps_target (0.1),
///                             alpha_target (2), hub_degree
///   forest                    new_tree (0.02)
///   high_girth                avg_degree (3), girth (8), bipartite (true)
///   tripartite_*              d (4)
///   subdivided                k (6), d (4), base ("triangle_free" | "regular")
///   star_forest               leaves (3)
inline Instance make_instance(const std::string& family, std::size_t n,
                              const nlohmann::json& params, std::uint64_t seed) {
  using detail::param_or;
  Instance inst;
  if (family == "c4_lb_g0" || family == "c4_lb_g1") {
    auto pair = gen_c4_lb_pair(n);
    inst = family == "c4_lb_g0" ? std::move(pair.g0) : std::move(pair.g1);
  } else if (family == "c5_lb_g0" || family == "c5_lb_g1") {
    auto pair = gen_c5_lb_pair(n);
    inst = family == "c5_lb_g0" ? std::move(pair.g0) : std::move(pair.g1);
  } else if (family == "dist_d") {
    inst = gen_dist_D(n, param_or<std::size_t>(params, "alpha", 2), seed,
                      param_or<double>(params, "c2", 4.0));
  } else if (family == "planted") {
    PlantedSpec spec;
    spec.n = n;
    spec.k = param_or<std::size_t>(params, "k", 4);
    spec.profile = parse_profile(param_or<std::string>(params, "profile", "all-light"));
    spec.eps_target = param_or<double>(params, "eps_target", 0.1);
    spec.alpha_target = param_or<double>(params, "alpha_target", 2.0);
    if (params.is_object() && params.contains("hub_degree")) {
      spec.hub_degree = params["hub_degree"].get<std::size_t>();
    }
    inst = gen_planted(spec, seed);
  } else if (family == "forest") {
    inst = gen_forest(n, seed, param_or<double>(params, "new_tree", 0.02));
  } else if (family == "high_girth") {
    const double avg = param_or<double>(params, "avg_degree", 3.0);
    inst = gen_high_girth(n, static_cast<std::size_t>(avg * static_cast<double>(n) / 2.0),
                          param_or<std::size_t>(params, "girth", 8),
                          param_or<bool>(params, "bipartite", true), seed);
  } else if (family == "tripartite_regular") {
    inst = gen_regular_tripartite(n / 3, param_or<std::size_t>(params, "d", 4), seed);
  } else if (family == "tripartite_triangle_free") {
    inst = gen_triangle_free_tripartite(n / 3, param_or<std::size_t>(params, "d", 4), seed);
  } else if (family == "subdivided") {
    const std::string base = param_or<std::string>(params, "base", "triangle_free");
    const std::size_t d = param_or<std::size_t>(params, "d", 4);
    Instance b;
    if (base == "triangle_free") {
      b = gen_triangle_free_tripartite(n / 3, d, seed);
    } else if (base == "regular") {
      b = gen_regular_tripartite(n / 3, d, seed);
    } else {
      throw Error("subdivided: unknown base '" + base + "'");
    }
    inst = subdivide_for_ck(b.graph, b.part, param_or<std::size_t>(params, "k", 6));
    inst.parameters["base"] = base;
    inst.parameters["d"] = d;
  } else if (family == "star_forest") {
    const std::size_t leaves = param_or<std::size_t>(params, "leaves", 3);
    inst = gen_star_forest(n / (leaves + 1), leaves);
  } else {
    throw Error("unknown family '" + family + "'");
  }
  inst.seed = seed;
  return inst;
}

inline const std::vector<std::string>& tester_names() {
  static const std::vector<std::string> names = {"c4", "c5", "c6", "f", "ck_odd"};
  return names;
}

/// Pattern a tester looks for. "f" takes {"pattern": name}, "ck_odd" {"k": odd}.
inline PatternGraph tester_pattern(const std::string& tester, const nlohmann::json& args) {
  if (tester == "c4") return cycle_pattern(4);
  if (tester == "c5") return cycle_pattern(5);
  if (tester == "c6") return cycle_pattern(6);
  if (tester == "ck_odd") return cycle_pattern(detail::param_or<std::size_t>(args, "k", 5));
  if (tester == "f") return named_pattern(detail::param_or<std::string>(args, "pattern", "C4"));
  throw Error("unknown tester '" + tester + "'");
}

template <QueryOracle O>
Verdict run_tester(const std::string& tester, const nlohmann::json& args, O& oracle,
                   const TesterParams& p, std::uint64_t m_hint) {
  if (tester == "c4") return test_c4(oracle, p);
  if (tester == "c5") return test_c5(oracle, p);
  if (tester == "c6") return test_c6(oracle, p);
  if (tester == "ck_odd") {
    return test_ck_odd(oracle, detail::param_or<std::size_t>(args, "k", 5), p, m_hint);
  }
  if (tester == "f") return test_f_general(oracle, tester_pattern(tester, args), p, m_hint);
  throw Error("unknown tester '" + tester + "'");
}

// ---------------------------------------------------------------------------
// Experiment specification

struct ExperimentSpec {
  std::string tester = "c4";
  nlohmann::json tester_args = nlohmann::json::object();
  std::string family;
  nlohmann::json family_params = nlohmann::json::object();
  std::vector<std::size_t> n_sweep;
  double eps = 0.1;
  double alpha = 1.0;
  std::map<std::string, double> overrides;
  std::size_t trials = 200;
  std::uint64_t master_seed = 1;
  std::size_t threads = 1;
  bool verify = true;  // exact distance sandwich per instance
  std::optional<std::uint64_t> budget;
  std::string output;

  TesterParams params() const {
    TesterParams p;
    p.eps = eps;
    p.alpha = alpha;
    for (const auto& [key, value] : overrides) p.set(key, value);
    p.validate();
    return p;
  }

  void validate() const {
    if (trials < 1) throw Error("trials must be >= 1");
    if (trials >= kGenerationTrial) throw Error("trials out of range");
    if (n_sweep.empty()) throw Error("n_sweep must be nonempty");
    for (std::size_t n : n_sweep) {
      if (n > 0xFFFFFFFFull) throw Error("n must fit in 32 bits");
    }
    if (threads < 1) throw Error("threads must be >= 1");
    if (std::find(tester_names().begin(), tester_names().end(), tester) ==
        tester_names().end()) {
      throw Error("unknown tester '" + tester + "'");
    }
    if (std::find(family_names().begin(), family_names().end(), family) ==
        family_names().end()) {
      throw Error("unknown family '" + family + "'");
    }
    (void)tester_pattern(tester, tester_args);
    (void)params();
  }

  static ExperimentSpec from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error("experiment spec must be a JSON object");
    const int version = detail::param_or<int>(j, "schema_version", kSpecSchemaVersion);
    if (version != kSpecSchemaVersion) {
      throw Error("unsupported schema_version " + std::to_string(version));
    }
    static const std::vector<std::string> known = {
        "schema_version", "tester", "tester_args", "family",      "family_params",
        "n_sweep",        "eps",    "alpha",       "overrides",   "trials",
        "master_seed",    "threads", "verify",     "budget",      "output"};
    for (const auto& item : j.items()) {
      if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
        throw Error("unknown experiment field '" + item.key() + "'");
      }
    }
    ExperimentSpec s;
    try {
      s.tester = j.value("tester", s.tester);
      s.tester_args = j.value("tester_args", s.tester_args);
      s.family = j.at("family").get<std::string>();
      s.family_params = j.value("family_params", s.family_params);
      s.n_sweep = j.at("n_sweep").get<std::vector<std::size_t>>();
      s.eps = j.value("eps", s.eps);
      s.alpha = j.value("alpha", s.alpha);
      s.overrides = j.value("overrides", s.overrides);
      s.trials = j.value("trials", s.trials);
      s.master_seed = j.value("master_seed", s.master_seed);
      s.threads = j.value("threads", s.threads);
      s.verify = j.value("verify", s.verify);
      if (j.contains("budget") && !j["budget"].is_null()) {
        s.budget = j["budget"].get<std::uint64_t>();
      }
      s.output = j.value("output", s.output);
    } catch (const nlohmann::json::exception& e) {
      throw Error(std::string("bad experiment spec: ") + e.what());
    }
    s.validate();
    return s;
  }

  nlohmann::json to_json() const {
    nlohmann::json j = {{"schema_version", kSpecSchemaVersion},
                        {"tester", tester},
                        {"tester_args", tester_args},
                        {"family", family},
                        {"family_params", family_params},
                        {"n_sweep", n_sweep},
                        {"eps", eps},
                        {"alpha", alpha},
                        {"overrides", overrides},
                        {"trials", trials},
                        {"master_seed", master_seed},
                        {"threads", threads},
                        {"verify", verify},
                        {"budget", nullptr},
                        {"output", output}};
    if (budget) j["budget"] = *budget;
    return j;
  }
};

// ---------------------------------------------------------------------------
// Rows

struct Quantiles {
  std::uint64_t p50 = 0;
  std::uint64_t p90 = 0;
  std::uint64_t max = 0;
};

/// Nearest-rank quantiles.
inline Quantiles quantiles(std::vector<std::uint64_t> values) {
  if (values.empty()) return {};
  std::sort(values.begin(), values.end());
  auto rank = [&](double q) {
    const auto r = static_cast<std::size_t>(std::ceil(q * static_cast<double>(values.size())));
    return values[std::max<std::size_t>(r, 1) - 1];
  };
  return {rank(0.5), rank(0.9), values.back()};
}

struct ExperimentRow {
  std::size_t n = 0;        // sweep value
  std::size_t graph_n = 0;  // vertices of the generated instance
  std::size_t m = 0;
  std::size_t trials = 0;
  std::size_t reject_count = 0;
  double reject_rate = 0.0;
  std::size_t terminated_count = 0;
  Quantiles degree;
  Quantiles neighbor;
  Quantiles pair;
  Quantiles total;
  std::optional<DistanceBounds> distance;
  double wall_seconds = 0.0;  // not part of the CSV
};

/// Column set of format version 1. Wall time is excluded so that reruns
/// produce identical bytes.
inline std::string csv_header() {
  return "format_version,tester,family,n,graph_n,m,trials,reject_count,reject_rate,"
         "terminated_count,degree_p50,degree_p90,degree_max,neighbor_p50,neighbor_p90,"
         "neighbor_max,pair_p50,pair_p90,pair_max,total_p50,total_p90,total_max,"
         "dist_lower,dist_upper";
}

inline std::string csv_line(const ExperimentSpec& spec, const ExperimentRow& r) {
  auto fixed = [](double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return std::string(buf);
  };
  auto q = [](const Quantiles& v) {
    return std::to_string(v.p50) + "," + std::to_string(v.p90) + "," + std::to_string(v.max);
  };
  std::string line = std::to_string(kCsvFormatVersion) + "," + spec.tester + "," +
                     spec.family + "," + std::to_string(r.n) + "," +
                     std::to_string(r.graph_n) + "," + std::to_string(r.m) + "," +
                     std::to_string(r.trials) + "," + std::to_string(r.reject_count) + "," +
                     fixed(r.reject_rate) + "," + std::to_string(r.terminated_count) + "," +
                     q(r.degree) + "," + q(r.neighbor) + "," + q(r.pair) + "," + q(r.total) +
                     ",";
  if (r.distance) {
    line += fixed(r.distance->lower) + "," + fixed(r.distance->upper);
  } else {
    line += ",";
  }
  return line;
}

inline void write_csv(std::ostream& out, const ExperimentSpec& spec,
                      const std::vector<ExperimentRow>& rows) {
  out << csv_header() << '\n';
  for (const ExperimentRow& r : rows) out << csv_line(spec, r) << '\n';
}

inline nlohmann::json to_json(const ExperimentRow& r) {
  auto q = [](const Quantiles& v) {
    return nlohmann::json{{"p50", v.p50}, {"p90", v.p90}, {"max", v.max}};
  };
  nlohmann::json j = {{"n", r.n},
                      {"graph_n", r.graph_n},
                      {"m", r.m},
                      {"trials", r.trials},
                      {"reject_count", r.reject_count},
                      {"reject_rate", r.reject_rate},
                      {"terminated_count", r.terminated_count},
                      {"queries",
                       {{"degree", q(r.degree)},
                        {"neighbor", q(r.neighbor)},
                        {"pair", q(r.pair)},
                        {"total", q(r.total)}}},
                      {"wall_seconds", r.wall_seconds}};
  if (r.distance) j["distance"] = {{"lower", r.distance->lower}, {"upper", r.distance->upper}};
  return j;
}

// ---------------------------------------------------------------------------
// Running

/// Seed of the instance generated at sweep point n: the first output of the
/// stream (master, stream_key(n, kGenerationTrial)).
inline std::uint64_t generation_seed(std::uint64_t master, std::size_t n) {
  return Rng(SeedPair{master, stream_key(static_cast<std::uint32_t>(n), kGenerationTrial)})
      .next_u64();
}

/// Seed of trial `trial` at sweep point n. Injective in (master, n, trial)
/// for n < 2^32 and trial < 2^32 - 1.
inline SeedPair trial_seed(std::uint64_t master, std::size_t n, std::size_t trial) {
  return {master, stream_key(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(trial))};
}

/// Runs `trials` sessions of one tester on one graph, `threads` at a time.
/// Result i always comes from trial seed i, so the output does not depend
/// on scheduling.
inline std::vector<Verdict> run_trials(const Graph& g, const std::string& tester,
                                       const nlohmann::json& args, const TesterParams& p,
                                       std::uint64_t master, std::size_t n_key,
                                       std::size_t trials, std::size_t threads,
                                       std::optional<std::uint64_t> budget = std::nullopt) {
  std::vector<std::optional<Verdict>> out(trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= trials) return;
      try {
        OracleSession session(g, trial_seed(master, n_key, i), budget);
        Verdict v = run_tester(tester, args, session, p, g.num_edges());
        if (v.rejected()) {
          // Check against the true graph, not only the explored part.
          const PatternGraph f = tester_pattern(tester, args);
          if (!WitnessSearch(f).validate_against(g, *v.witness())) {
            throw Error("tester returned a witness that is not in the graph");
          }
        }
        out[i] = std::move(v);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = trials;
        return;
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(threads, trials));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<Verdict> verdicts;
  verdicts.reserve(trials);
  for (auto& v : out) verdicts.push_back(std::move(*v));
  return verdicts;
}

inline ExperimentRow aggregate(std::size_t n, const Graph& g, const std::vector<Verdict>& vs) {
  ExperimentRow row;
  row.n = n;
  row.graph_n = g.num_vertices();
  row.m = g.num_edges();
  row.trials = vs.size();
  std::vector<std::uint64_t> deg, nbr, pr, tot;
  for (const Verdict& v : vs) {
    if (v.rejected()) ++row.reject_count;
    if (v.terminated()) ++row.terminated_count;
    deg.push_back(v.queries().degree);
    nbr.push_back(v.queries().neighbor);
    pr.push_back(v.queries().pair);
    tot.push_back(v.queries().total());
  }
  row.reject_rate =
      vs.empty() ? 0.0 : static_cast<double>(row.reject_count) / static_cast<double>(vs.size());
  row.degree = quantiles(deg);
  row.neighbor = quantiles(nbr);
  row.pair = quantiles(pr);
  row.total = quantiles(tot);
  return row;
}

/// Distance sandwich for the tester's pattern when it is a cycle; nullopt
/// for other patterns.
inline std::optional<DistanceBounds> certify(const Graph& g, const PatternGraph& f) {
  if (!f.as_cycle()) return std::nullopt;
  return distance_bounds(g, f.num_vertices());
}

/// One row per sweep point, in sweep order.
inline std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const TesterParams p = spec.params();
  const PatternGraph f = tester_pattern(spec.tester, spec.tester_args);
  std::vector<ExperimentRow> rows;
  for (std::size_t n : spec.n_sweep) {
    const auto start = std::chrono::steady_clock::now();
    const Instance inst =
        make_instance(spec.family, n, spec.family_params, generation_seed(spec.master_seed, n));
    const auto verdicts = run_trials(inst.graph, spec.tester, spec.tester_args, p,
                                     spec.master_seed, n, spec.trials, spec.threads, spec.budget);
    ExperimentRow row = aggregate(n, inst.graph, verdicts);
    if (spec.verify) row.distance = certify(inst.graph, f);
    row.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Scaling fit

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Least squares of log2(y) on log2(x). R^2 is 1 when y is constant.
inline ScalingFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw Error("scaling fit needs >= 2 points");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw Error("scaling fit needs positive values");
    lx.push_back(std::log2(x[i]));
    ly.push_back(std::log2(y[i]));
  }
  const double k = static_cast<double>(lx.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0) throw Error("scaling fit needs two distinct n");
  ScalingFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double sse = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double e = ly[i] - (fit.intercept + fit.slope * lx[i]);
    sse += e * e;
  }
  fit.r2 = syy == 0.0 ? 1.0 : 1.0 - sse / syy;
  return fit;
}

/// Fit of total-query medians against n.
inline ScalingFit fit_scaling(const std::vector<ExperimentRow>& rows) {
  std::vector<double> x, y;
  for (const ExperimentRow& r : rows) {
    x.push_back(static_cast<double>(r.n));
    y.push_back(static_cast<double>(r.total.p50));
  }
  return fit_loglog(x, y);
}

}  // namespace cktest
