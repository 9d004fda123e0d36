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


// cktest command-line tool. Results go to stdout as JSON lines.
//
//   cktest generate <family> -n N [--param key=value]... [--seed S] -o FILE
//   cktest test <tester> -g FILE [--seed S] [--eps E] [--alpha A]
//               [--override key=value]... [--k K] [--pattern NAME]
//               [--budget B] [--trials T]
//   cktest experiment -c SPEC.json [-o OUT.csv] [--threads T]
//   cktest verify -g FILE -k K
//   cktest ell (-f PATTERN.edgelist | --name NAME)
//
// Exit status: 0 on success, 1 on runtime failure, 2 on usage errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cktest.hpp"

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

cktest::Graph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cktest::Error("cannot open '" + path + "'");
  return cktest::load_edge_list(in);
}

// "key=value" with value parsed as JSON when it is valid JSON, else kept
// as a string.
std::pair<std::string, json> parse_param(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + text + "'");
  const std::string key = text.substr(0, eq);
  const std::string value = text.substr(eq + 1);
  json parsed = json::parse(value, nullptr, false);
  if (parsed.is_discarded()) parsed = value;
  return {key, parsed};
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

struct GenerateArgs {
  std::string family;
  std::size_t n = 0;
  std::vector<std::string> params;
  std::uint64_t seed = 1;
  std::string output;
  double eps = 0.1;
  double alpha = 1.0;
};

int run_generate(const GenerateArgs& a) {
  json params = json::object();
  for (const auto& p : a.params) {
    auto [key, value] = parse_param(p);
    params[key] = value;
  }
  const cktest::Instance inst = cktest::make_instance(a.family, a.n, params, a.seed);
  cktest::TesterParams tp;
  tp.eps = a.eps;
  tp.alpha = a.alpha;
  tp.validate();
  cktest::write_instance(inst, a.output, tp);
  json out = {{"family", inst.family},
              {"n", inst.graph.num_vertices()},
              {"m", inst.graph.num_edges()},
              {"seed", a.seed},
              {"output", a.output}};
  if (inst.certificate) out["certificate_size"] = inst.certificate->size();
  emit(out);
  return 0;
}

struct TestArgs {
  std::string tester;
  std::string graph;
  std::uint64_t seed = 1;
  double eps = 0.1;
  double alpha = 1.0;
  std::vector<std::string> overrides;
  std::optional<std::size_t> k;
  std::optional<std::string> pattern;
  std::optional<std::uint64_t> budget;
  std::size_t trials = 1;
};

int run_test(const TestArgs& a) {
  cktest::TesterParams p;
  p.eps = a.eps;
  p.alpha = a.alpha;
  try {
    for (const auto& o : a.overrides) p.apply_override(o);
    p.validate();
  } catch (const cktest::Error& e) {
    throw UsageError(e.what());
  }
  json args = json::object();
  if (a.k) args["k"] = *a.k;
  if (a.pattern) args["pattern"] = *a.pattern;
  const cktest::Graph g = read_graph(a.graph);
  const auto verdicts =
      cktest::run_trials(g, a.tester, args, p, a.seed, 0, a.trials, 1, a.budget);
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    json j = cktest::to_json(verdicts[i]);
    j["tester"] = a.tester;
    if (a.trials > 1) j["trial"] = i;
    emit(j);
  }
  return 0;
}

struct ExperimentArgs {
  std::string config;
  std::string output;
  std::optional<std::size_t> threads;
};

int run_experiment_cmd(const ExperimentArgs& a) {
  std::ifstream in(a.config);
  if (!in) throw cktest::Error("cannot open '" + a.config + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw cktest::Error("'" + a.config + "' is not valid JSON");
  cktest::ExperimentSpec spec = cktest::ExperimentSpec::from_json(j);
  if (!a.output.empty()) spec.output = a.output;
  if (a.threads) spec.threads = *a.threads;
  const auto rows = cktest::run_experiment(spec);
  if (!spec.output.empty()) {
    std::ofstream out(spec.output);
    if (!out) throw cktest::Error("cannot open '" + spec.output + "' for writing");
    cktest::write_csv(out, spec, rows);
    if (!out) throw cktest::Error("write to '" + spec.output + "' failed");
  }
  for (const auto& r : rows) emit(cktest::to_json(r));
  if (rows.size() >= 2) {
    try {
      const cktest::ScalingFit fit = cktest::fit_scaling(rows);
      emit({{"fit", {{"slope", fit.slope}, {"intercept", fit.intercept}, {"r2", fit.r2}}}});
    } catch (const cktest::Error&) {
      // Zero medians or a single distinct n: no fit to report.
    }
  }
  return 0;
}

int run_verify(const std::string& path, std::size_t k) {
  emit(cktest::verify_report(read_graph(path), k));
  return 0;
}

int run_ell(const std::string& file, const std::string& name) {
  cktest::PatternGraph f = [&] {
    if (!name.empty()) return cktest::named_pattern(name);
    const cktest::Graph g = read_graph(file);
    if (g.num_vertices() > cktest::kMaxPatternVertices) {
      throw cktest::SizeLimitError("pattern has more than " +
                                   std::to_string(cktest::kMaxPatternVertices) + " vertices");
    }
    return cktest::PatternGraph(g.num_vertices(),
                                std::vector<cktest::Edge>(g.edges().begin(), g.edges().end()));
  }();
  emit({{"k", f.num_vertices()}, {"m", f.num_edges()}, {"ell", cktest::ell_of(f)}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Property testers for cycle-freeness in bounded-arboricity graphs"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate an instance (edge list + .meta.json)");
  generate->add_option("family", gen.family, "Instance family")
      ->required()
      ->check(CLI::IsMember(cktest::family_names()));
  generate->add_option("-n", gen.n, "Size parameter")->required();
  generate->add_option("--param", gen.params, "Family parameter key=value");
  generate->add_option("--seed", gen.seed, "Generator seed");
  generate->add_option("-o,--output", gen.output, "Output edge-list path")->required();
  generate->add_option("--eps", gen.eps, "eps used for the degree classes in the sidecar");
  generate->add_option("--alpha", gen.alpha, "alpha used for the degree classes in the sidecar");

  TestArgs test;
  auto* test_cmd = app.add_subcommand("test", "Run a tester on an edge-list graph");
  test_cmd->add_option("tester", test.tester, "Tester")
      ->required()
      ->check(CLI::IsMember(cktest::tester_names()));
  test_cmd->add_option("-g,--graph", test.graph, "Edge-list file")->required();
  test_cmd->add_option("--seed", test.seed, "Master seed");
  test_cmd->add_option("--eps", test.eps, "Proximity parameter");
  test_cmd->add_option("--alpha", test.alpha, "Arboricity bound");
  test_cmd->add_option("--override", test.overrides, "Constant override key=value");
  test_cmd->add_option("--k", test.k, "Cycle length (ck_odd)");
  test_cmd->add_option("--pattern", test.pattern, "Pattern name (f), e.g. C4, K1,3, P4");
  test_cmd->add_option("--budget", test.budget, "Query budget per session");
  test_cmd->add_option("--trials", test.trials, "Independent sessions")
      ->check(CLI::PositiveNumber);

  ExperimentArgs exp;
  auto* experiment = app.add_subcommand("experiment", "Run an experiment spec");
  experiment->add_option("-c,--config", exp.config, "Experiment spec (JSON)")->required();
  experiment->add_option("-o,--output", exp.output, "CSV output path");
  experiment->add_option("--threads", exp.threads, "Worker threads")
      ->check(CLI::PositiveNumber);

  std::string verify_graph;
  std::size_t verify_k = 0;
  auto* verify = app.add_subcommand("verify", "Exact cycle count and distance bounds");
  verify->add_option("-g,--graph", verify_graph, "Edge-list file")->required();
  verify->add_option("-k", verify_k, "Cycle length")->required();

  std::string ell_file;
  std::string ell_name;
  auto* ell = app.add_subcommand("ell", "ell(F) of a pattern");
  auto* ell_f = ell->add_option("-f,--file", ell_file, "Pattern edge list");
  auto* ell_n = ell->add_option("--name", ell_name, "Pattern name");
  ell_f->excludes(ell_n);
  ell->require_option(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*test_cmd) return run_test(test);
    if (*experiment) return run_experiment_cmd(exp);
    if (*verify) return run_verify(verify_graph, verify_k);
    if (*ell) return run_ell(ell_file, ell_name);
  } catch (const UsageError& e) {
    std::cerr << "cktest: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cktest: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
