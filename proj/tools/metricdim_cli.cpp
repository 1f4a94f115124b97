// Copyright 2026 The metricdim Authors
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

// metricdim: exact metric dimensions, Θ-graph constructions and leafless-graph
// scans from the command line.
//
// Exit codes: 0 success, 1 failed verification, 2 bad input, 3 search budget
// exceeded, 4 scan produced findings.

#include <omp.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "metricdim/canonical.hpp"
#include "metricdim/graph_io.hpp"
#include "metricdim/harness.hpp"
#include "metricdim/random.hpp"
#include "metricdim/solver.hpp"
#include "metricdim/sweeps.hpp"
#include "metricdim/theta.hpp"

namespace {

using namespace metricdim;
using nlohmann::json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitFindings = 4;

struct CommonFlags {
  bool json_output = false;
  int threads = 0;
  std::uint64_t budget = SolverOptions{}.budget;

  SolverOptions solver() const {
    SolverOptions options;
    options.budget = budget;
    return options;
  }
};

std::string ids(std::span<const Vertex> set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(set[i]);
  }
  return out + "}";
}

GeneratorKind parse_kind(const std::string& kind) {
  return kind == "edge" ? GeneratorKind::kEdge : GeneratorKind::kVertex;
}

int cmd_dim(const std::string& path, const std::string& kind_name, const CommonFlags& flags) {
  const auto graphs = read_graph_file(path);
  if (graphs.empty()) throw FormatError(0, "no graph in '" + path + "'");
  const Graph& g = graphs.front();
  const GeneratorKind kind = parse_kind(kind_name);
  const auto start = std::chrono::steady_clock::now();
  const DimensionResult result = metric_dimension(g, kind, flags.solver());
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto theta = is_theta(g);
  const char* name = kind == GeneratorKind::kVertex ? "dim" : "edim";

  if (flags.json_output) {
    json j{{"kind", std::string(to_string(kind))},
           {"value", result.value},
           {"witness", std::vector<Vertex>(result.witness.vertices().begin(),
                                           result.witness.vertices().end())},
           {"elapsed_seconds", elapsed}};
    if (theta) {
      j["theta"] = {theta->params.p, theta->params.q, theta->params.r};
      j["witness_labels"] = theta->format(result.witness.vertices());
    }
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << name << " = " << result.value << '\n';
  std::cout << "witness = " << ids(result.witness.vertices());
  if (theta) {
    std::cout << " = " << theta->format(result.witness.vertices()) << " in Theta"
              << to_string(theta->params);
  }
  std::cout << "\nelapsed = " << elapsed << " s\n";
  return 0;
}

int cmd_theta(int p, int q, int r, bool check, const CommonFlags& flags) {
  const ThetaParams params{p, q, r};
  if (!is_valid(params)) {
    std::cerr << "error: invalid theta parameters " << to_string(params)
              << " (need 1 <= p <= q <= r and not p = q = 1)\n";
    return kExitBadInput;
  }
  const LabeledTheta theta = theta_graph(params);
  json j{{"p", p}, {"q", q}, {"r", r}, {"n", theta.graph.order()}, {"m", theta.graph.size()}};

  const auto describe = [&](GeneratorKind kind) {
    const bool vertex = kind == GeneratorKind::kVertex;
    const int predicted = vertex ? predicted_dim(params) : predicted_edim(params);
    json part{{"predicted", predicted}};
    LandmarkSet set;
    if (predicted == 2) {
      const ConstructedSet built = vertex ? dim2_generator(theta) : edim2_generator(theta);
      set = built.set;
      part["case"] = built.case_label;
      part["construction"] = "closed-form";
    } else if (vertex) {
      set = nice_set_generator(theta, theta.u);
      part["construction"] = "nice-set";
    } else {
      set = *extend_to_generator(theta.graph, theta.u, 3, kind, flags.solver());
      part["construction"] = "search";
    }
    part["set"] = theta.format(set.vertices());
    part["ids"] = std::vector<Vertex>(set.vertices().begin(), set.vertices().end());
    if (check) {
      part["brute_force"] = metric_dimension(theta.graph, kind, flags.solver()).value;
    }
    return part;
  };
  j["dim"] = describe(GeneratorKind::kVertex);
  j["edim"] = describe(GeneratorKind::kEdge);

  bool mismatch = false;
  for (const char* key : {"dim", "edim"}) {
    if (j[key].contains("brute_force") && j[key]["brute_force"] != j[key]["predicted"]) {
      mismatch = true;
    }
  }

  if (flags.json_output) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "Theta" << to_string(params) << ": n=" << theta.graph.order()
              << " m=" << theta.graph.size() << " c=" << cyclomatic_number(theta.graph) << '\n';
    for (const char* key : {"dim", "edim"}) {
      const json& part = j[key];
      std::cout << "predicted " << key << " = " << part["predicted"].get<int>() << '\n';
      std::cout << "  " << key << " set";
      if (part.contains("case")) std::cout << " (case " << part["case"].get<std::string>() << ")";
      else std::cout << " (" << part["construction"].get<std::string>() << ")";
      std::cout << " = " << part["set"].get<std::string>() << " ids "
                << ids(part["ids"].get<std::vector<Vertex>>()) << '\n';
      if (part.contains("brute_force")) {
        const bool same = part["brute_force"] == part["predicted"];
        std::cout << "  brute force " << key << " = " << part["brute_force"].get<int>()
                  << (same ? " (matches)" : " (MISMATCH)") << '\n';
      }
    }
  }
  return mismatch ? kExitVerifyFailed : 0;
}

void print_sweep(const SweepResult& sweep, bool json_output) {
  if (json_output) {
    json j{{"name", sweep.name}, {"ok", sweep.ok()}};
    j["cases"] = json::array();
    for (const CaseTally& c : sweep.cases) {
      j["cases"].push_back({{"label", c.label}, {"passed", c.passed}, {"failed", c.failed}});
    }
    j["failures"] = json::array();
    for (const SweepFailure& f : sweep.failures) {
      j["failures"].push_back({{"subject", f.subject}, {"detail", f.detail}});
    }
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << sweep.name << '\n';
  for (const CaseTally& c : sweep.cases) {
    std::cout << "  case " << c.label << ": " << c.passed << " passed, " << c.failed
              << " failed\n";
  }
  for (const SweepFailure& f : sweep.failures) {
    std::cout << "  FAIL " << f.subject << ": " << f.detail << '\n';
  }
  std::cout << (sweep.ok() ? "PASS" : "FAIL") << " (" << sweep.checked() << " checks)\n";
}

struct VerifyFlags {
  std::string target;
  int sum = 18;
  int max_p = 5;
  int max_petal = 7;
  int max_k = 3;
};

// Accepted target spellings; the short forms name the same sweeps.
const std::map<std::string, std::string> kVerifyTargets = {
    {"vertex-recipes", "vertex-recipes"}, {"lemma-dim2", "vertex-recipes"},
    {"edge-recipes", "edge-recipes"},     {"lemma-edim2", "edge-recipes"},
    {"vertex-extremal", "vertex-extremal"}, {"lemma7", "vertex-extremal"},
    {"edge-extremal", "edge-extremal"},   {"lemma9", "edge-extremal"},
    {"theorems", "theorems"},             {"daisy", "daisy"},
};

int cmd_verify(const VerifyFlags& v, const CommonFlags& flags) {
  const std::string& target = kVerifyTargets.at(v.target);
  SweepResult sweep;
  if (target == "vertex-recipes") {
    sweep = verify_vertex_recipes(v.sum);
  } else if (target == "edge-recipes") {
    sweep = verify_edge_recipes(v.sum);
  } else if (target == "theorems") {
    sweep = verify_theorems(v.sum, flags.solver()).result;
  } else if (target == "vertex-extremal") {
    sweep = verify_vertex_extremal(v.max_p, flags.solver());
  } else if (target == "edge-extremal") {
    sweep = verify_edge_extremal(flags.solver());
  } else {
    sweep = verify_daisy(v.max_petal, v.max_k, flags.solver());
  }
  print_sweep(sweep, flags.json_output);
  return sweep.ok() ? 0 : kExitVerifyFailed;
}

struct ScanFlags {
  std::optional<int> n;
  std::string input;
  int random = 0;
  std::uint64_t seed = 20260101;
  int max_n = 9;
  std::string output;
};

int cmd_scan(const ScanFlags& s, const CommonFlags& flags) {
  std::vector<Graph> graphs;
  if (s.n) {
    graphs = enumerate_leafless(*s.n);
  } else if (!s.input.empty()) {
    graphs = read_graph_file(s.input);
  } else {
    graphs = random_leafless_corpus(s.seed, s.random, 3, s.max_n);
  }
  const VerificationReport report = scan(graphs, flags.solver());
  const std::string text =
      flags.json_output ? to_json(report).dump(2) + "\n" : to_text(report);
  if (s.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(s.output, std::ios::binary);
    if (!out) throw FormatError(0, "cannot write '" + s.output + "'");
    out << text;
    std::cerr << "scanned " << report.scanned << ", findings "
              << report.violations.size() + report.equality_mismatches.size() << '\n';
  }
  return report.consistent() ? 0 : kExitFindings;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact vertex and edge metric dimensions, Theta-graph constructions and "
               "leafless-graph scans"};
  app.require_subcommand(1);

  CommonFlags flags;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", flags.json_output, "Machine-readable output");
    sub->add_option("--threads", flags.threads, "OpenMP worker count (0 = runtime default)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--budget", flags.budget, "Maximum planned signature comparisons per search");
  };

  std::string dim_path;
  std::string kind = "vertex";
  auto* dim = app.add_subcommand("dim", "Metric dimension of a graph file (edge list or graph6)");
  dim->add_option("file", dim_path, "Input file")->required();
  dim->add_option("--kind", kind, "vertex or edge")->check(CLI::IsMember({"vertex", "edge"}));
  add_common(dim);

  int p = 0, q = 0, r = 0;
  bool check = false;
  auto* theta = app.add_subcommand("theta", "Predictions and generators for Theta(p,q,r)");
  theta->add_option("p", p)->required();
  theta->add_option("q", q)->required();
  theta->add_option("r", r)->required();
  theta->add_flag("--check", check, "Confirm predictions by brute force");
  add_common(theta);

  VerifyFlags vflags;
  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->add_option("target", vflags.target)
      ->required()
      ->check(CLI::IsMember(kVerifyTargets));
  verify->add_option("--sum", vflags.sum, "Theta sweep bound on p+q+r")->check(CLI::Range(3, 60));
  verify->add_option("--max-p", vflags.max_p, "Largest p for vertex-extremal")->check(CLI::Range(2, 30));
  verify->add_option("--max-petal", vflags.max_petal, "Longest daisy petal")->check(CLI::Range(3, 12));
  verify->add_option("--max-k", vflags.max_k, "Most daisy petals")->check(CLI::Range(2, 5));
  add_common(verify);

  ScanFlags sflags;
  int scan_n = 0;
  auto* scan_cmd = app.add_subcommand("scan", "Check the 2c-1 bound and equality cases");
  auto* n_opt = scan_cmd->add_option("--n", scan_n, "Enumerate all leafless graphs on n vertices");
  auto* input_opt = scan_cmd->add_option("--input", sflags.input, "graph6 or edge-list file");
  auto* random_opt = scan_cmd->add_option("--random", sflags.random, "Scan this many random graphs")
                         ->check(CLI::PositiveNumber);
  n_opt->excludes(input_opt)->excludes(random_opt);
  input_opt->excludes(random_opt);
  scan_cmd->add_option("--seed", sflags.seed, "Seed for --random");
  scan_cmd->add_option("--max-n", sflags.max_n, "Largest order for --random")->check(CLI::Range(3, 11));
  scan_cmd->add_option("--output", sflags.output, "Write the report to a file");
  add_common(scan_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  if (flags.threads > 0) omp_set_num_threads(flags.threads);

  try {
    if (*dim) return cmd_dim(dim_path, kind, flags);
    if (*theta) return cmd_theta(p, q, r, check, flags);
    if (*verify) return cmd_verify(vflags, flags);
    if (*scan_cmd) {
      if (n_opt->count() > 0) sflags.n = scan_n;
      if (!sflags.n && sflags.input.empty() && sflags.random == 0) {
        std::cerr << "error: scan needs --n, --input or --random\n";
        return kExitBadInput;
      }
      return cmd_scan(sflags, flags);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return 0;
}
