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

#include "metricdim/sweeps.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace metricdim {

namespace {

SweepResult make_sweep(std::string name, std::initializer_list<const char*> labels) {
  SweepResult out;
  out.name = std::move(name);
  for (const char* label : labels) out.cases.push_back({label, 0, 0});
  return out;
}

std::string theta_name(const ThetaParams& params) { return "Theta" + to_string(params); }

std::string daisy_name(const DaisyParams& params) {
  std::string out = "Daisy[";
  for (std::size_t i = 0; i < params.petal_lengths.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(params.petal_lengths[i]);
  }
  return out + "]";
}

// First 2-subset that resolves the graph, if any.
std::optional<std::pair<Vertex, Vertex>> find_pair_generator(const Graph& g, GeneratorKind kind) {
  const DistanceMatrix dm = all_pairs_distances(g);
  const SignatureTable table(g, dm, kind);
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = a + 1; b < g.order(); ++b) {
      const std::array<Vertex, 2> s{a, b};
      if (is_generator(table, s)) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

}  // namespace

bool SweepResult::every_case_covered() const {
  return std::all_of(cases.begin(), cases.end(),
                     [](const CaseTally& c) { return c.passed + c.failed > 0; });
}

int SweepResult::checked() const {
  int total = 0;
  for (const CaseTally& c : cases) total += c.passed + c.failed;
  return total;
}

void SweepResult::pass(const std::string& label) {
  auto it = std::find_if(cases.begin(), cases.end(),
                         [&](const CaseTally& c) { return c.label == label; });
  if (it == cases.end()) {
    cases.push_back({label, 1, 0});
  } else {
    ++it->passed;
  }
}

void SweepResult::fail(const std::string& label, std::string subject, std::string detail) {
  auto it = std::find_if(cases.begin(), cases.end(),
                         [&](const CaseTally& c) { return c.label == label; });
  if (it == cases.end()) {
    cases.push_back({label, 0, 1});
  } else {
    ++it->failed;
  }
  failures.push_back({std::move(subject), "[" + label + "] " + std::move(detail)});
}

SweepResult verify_vertex_recipes(int max_sum) {
  SweepResult out =
      make_sweep("vertex-recipes", {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"});
  for (const ThetaParams& params : thetas_up_to_sum(max_sum)) {
    if (is_dim_extremal(params)) continue;
    const LabeledTheta theta = theta_graph(params);
    const ConstructedSet built = detail::dim2_candidate(theta);
    const GeneratorCheck check = is_generator(theta.graph, built.set);
    if (check) {
      out.pass(built.case_label);
    } else {
      out.fail(built.case_label, theta_name(params),
               theta.format(built.set.vertices()) + " leaves " +
                   describe_pair(theta, GeneratorKind::kVertex, check) + " undistinguished");
    }
  }
  return out;
}

SweepResult verify_edge_recipes(int max_sum) {
  SweepResult out = make_sweep("edge-recipes", {"i", "ii", "iii", "iv", "v"});
  for (const ThetaParams& params : thetas_up_to_sum(max_sum)) {
    if (is_edim_extremal(params)) continue;
    const LabeledTheta theta = theta_graph(params);
    const ConstructedSet built = detail::edim2_candidate(theta);
    const GeneratorCheck check = is_generator(theta.graph, built.set);
    if (check) {
      out.pass(built.case_label);
    } else {
      out.fail(built.case_label, theta_name(params),
               theta.format(built.set.vertices()) + " leaves edges " +
                   describe_pair(theta, GeneratorKind::kEdge, check) + " undistinguished");
    }
  }
  return out;
}

TheoremSweep verify_theorems(int max_sum, const SolverOptions& options) {
  TheoremSweep out;
  out.result = make_sweep("theorems", {"dim=2", "dim=3", "edim=2", "edim=3"});
  for (const ThetaParams& params : thetas_up_to_sum(max_sum)) {
    const LabeledTheta theta = theta_graph(params);
    const DimensionResult dim = metric_dimension(theta.graph, GeneratorKind::kVertex, options);
    const DimensionResult edim = metric_dimension(theta.graph, GeneratorKind::kEdge, options);
    if (dim.value == 3) out.dim_three.push_back(params);
    if (edim.value == 3) out.edim_three.push_back(params);

    const int want_dim = predicted_dim(params);
    const std::string dim_label = "dim=" + std::to_string(want_dim);
    if (dim.value == want_dim) {
      out.result.pass(dim_label);
    } else {
      out.result.fail(dim_label, theta_name(params),
                      "brute force gives dim " + std::to_string(dim.value) + " with witness " +
                          theta.format(dim.witness.vertices()));
    }
    const int want_edim = predicted_edim(params);
    const std::string edim_label = "edim=" + std::to_string(want_edim);
    if (edim.value == want_edim) {
      out.result.pass(edim_label);
    } else {
      out.result.fail(edim_label, theta_name(params),
                      "brute force gives edim " + std::to_string(edim.value) +
                          " with witness " + theta.format(edim.witness.vertices()));
    }
  }
  return out;
}

SweepResult verify_vertex_extremal(int max_p, const SolverOptions& options) {
  SweepResult out =
      make_sweep("vertex-extremal", {"nice-set", "extend", "no-2-generator", "isometric-cycles"});
  for (int p = 2; p <= max_p; ++p) {
    for (const ThetaParams params : {ThetaParams{p, p, p}, ThetaParams{p, p, p + 2}}) {
      const LabeledTheta theta = theta_graph(params);
      const std::string subject = theta_name(params);
      for (Vertex a = 0; a < theta.graph.order(); ++a) {
        try {
          const LandmarkSet nice = nice_set_generator(theta, a);
          if (nice.contains(a) && nice.size() == 3 && is_nice_set(theta, nice) &&
              is_generator(theta.graph, nice)) {
            out.pass("nice-set");
          } else {
            out.fail("nice-set", subject,
                     theta.format(nice.vertices()) + " is not a nice generator through " +
                         theta.label(a));
          }
        } catch (const std::exception& e) {
          out.fail("nice-set", subject, e.what());
        }
        if (extend_to_generator(theta.graph, a, 3, GeneratorKind::kVertex, options)) {
          out.pass("extend");
        } else {
          out.fail("extend", subject, "no size-3 generator contains " + theta.label(a));
        }
      }

      if (auto pair = find_pair_generator(theta.graph, GeneratorKind::kVertex)) {
        const std::array<Vertex, 2> s{pair->first, pair->second};
        out.fail("no-2-generator", subject, theta.format(s) + " resolves the graph");
      } else {
        out.pass("no-2-generator");
      }

      // Each C_ij is isometric: its own cycle distance equals the graph distance.
      const DistanceMatrix dm = all_pairs_distances(theta.graph);
      bool isometric = true;
      for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        std::vector<Vertex> cycle(theta.paths[a].begin(), theta.paths[a].end());
        for (int i = theta.length(b) - 1; i >= 1; --i) cycle.push_back(theta.at(b, i));
        const int len = static_cast<int>(cycle.size());
        for (int x = 0; x < len; ++x) {
          for (int y = x + 1; y < len; ++y) {
            if (dm(cycle[x], cycle[y]) != std::min(y - x, len - (y - x))) isometric = false;
          }
        }
      }
      if (isometric) {
        out.pass("isometric-cycles");
      } else {
        out.fail("isometric-cycles", subject, "some C_ij is not isometric");
      }
    }
  }
  return out;
}

SweepResult verify_edge_extremal(const SolverOptions& options) {
  SweepResult out = make_sweep("edge-extremal", {"extend", "no-2-generator", "edim=3"});
  for (const ThetaParams& params : edim_extremal_thetas()) {
    const LabeledTheta theta = theta_graph(params);
    const std::string subject = theta_name(params);
    for (Vertex a = 0; a < theta.graph.order(); ++a) {
      if (extend_to_generator(theta.graph, a, 3, GeneratorKind::kEdge, options)) {
        out.pass("extend");
      } else {
        out.fail("extend", subject, "no size-3 edge generator contains " + theta.label(a));
      }
    }
    if (auto pair = find_pair_generator(theta.graph, GeneratorKind::kEdge)) {
      const std::array<Vertex, 2> s{pair->first, pair->second};
      out.fail("no-2-generator", subject, theta.format(s) + " resolves all edges");
    } else {
      out.pass("no-2-generator");
    }
    const DimensionResult edim = metric_dimension(theta.graph, GeneratorKind::kEdge, options);
    if (edim.value == 3) {
      out.pass("edim=3");
    } else {
      out.fail("edim=3", subject, "brute force gives edim " + std::to_string(edim.value));
    }
  }
  return out;
}

void check_daisy(const DaisyParams& params, SweepResult& into, const SolverOptions& options) {
  const Graph g = daisy_graph(params);
  const int k = static_cast<int>(params.petal_lengths.size());
  const int bound = 2 * k - 1;
  const std::string subject = daisy_name(params);
  const DimensionResult dim = metric_dimension(g, GeneratorKind::kVertex, options);
  if (!params.has_odd_petal()) {
    if (dim.value == bound) {
      into.pass("dim=2k-1 (no odd petal)");
    } else {
      into.fail("dim=2k-1 (no odd petal)", subject,
                "dim " + std::to_string(dim.value) + " != " + std::to_string(bound));
    }
  } else if (dim.value < bound) {
    into.pass("dim<2k-1 (odd petal)");
  } else {
    into.fail("dim<2k-1 (odd petal)", subject,
              "dim " + std::to_string(dim.value) + " >= " + std::to_string(bound));
  }
  const DimensionResult edim = metric_dimension(g, GeneratorKind::kEdge, options);
  if (edim.value == bound) {
    into.pass("edim=2k-1");
  } else {
    into.fail("edim=2k-1", subject,
              "edim " + std::to_string(edim.value) + " != " + std::to_string(bound));
  }
}

std::vector<DaisyParams> daisy_family(const std::vector<int>& lengths, int max_k) {
  std::vector<int> sorted = lengths;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<DaisyParams> out;
  std::vector<int> current;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (current.size() >= 2) out.push_back({current});
    if (static_cast<int>(current.size()) == max_k) return;
    for (std::size_t i = from; i < sorted.size(); ++i) {
      current.push_back(sorted[i]);
      grow(i);
      current.pop_back();
    }
  };
  grow(0);
  std::sort(out.begin(), out.end(), [](const DaisyParams& a, const DaisyParams& b) {
    if (a.petal_lengths.size() != b.petal_lengths.size()) {
      return a.petal_lengths.size() < b.petal_lengths.size();
    }
    return a.petal_lengths < b.petal_lengths;
  });
  return out;
}

SweepResult verify_daisy(int max_petal, int max_k, const SolverOptions& options) {
  SweepResult out = make_sweep(
      "daisy", {"dim=2k-1 (no odd petal)", "dim<2k-1 (odd petal)", "edim=2k-1"});
  std::vector<int> lengths;
  for (int len = 3; len <= max_petal; ++len) lengths.push_back(len);
  for (const DaisyParams& params : daisy_family(lengths, max_k)) check_daisy(params, out, options);
  return out;
}

}  // namespace metricdim
