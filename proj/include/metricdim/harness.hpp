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

#ifndef METRICDIM_HARNESS_HPP
#define METRICDIM_HARNESS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "metricdim/daisy.hpp"
#include "metricdim/graph.hpp"
#include "metricdim/solver.hpp"
#include "metricdim/theta.hpp"

namespace metricdim {

enum class Tag {
  kCycle,
  kTheta,
  kDaisyNoOddPetals,
  kDaisyWithOddPetal,
  kThetaDimExtremal,
  kThetaEdimExtremal,
  kOther2Connected,
  kHasCutVertex,
};

std::string_view to_string(Tag tag);

struct GraphClassification {
  std::vector<Tag> tags;  // ascending
  std::optional<ThetaParams> theta;
  std::optional<DaisyParams> daisy;

  bool has(Tag tag) const;
  /// dim(G) = 2c(G) - 1 expected: even-petal daisy or dim-extremal Θ.
  bool predicts_dim_equality() const;
  /// edim(G) = 2c(G) - 1 expected: any daisy or edge-extremal Θ.
  bool predicts_edim_equality() const;
  /// Tag names, Θ rendered as "Theta(p,q,r)".
  std::vector<std::string> names() const;
};

/// Requires a connected graph with minimum degree >= 2; throws
/// GraphError(kInvalidArgument) otherwise.
GraphClassification classify(const Graph& g);

struct GraphRecord {
  std::string graph6;  // canonical form; witnesses use its labeling
  int n = 0;
  int m = 0;
  int c = 0;
  std::vector<std::string> tags;
  bool exempt = false;  // cycles are outside the bound's hypothesis
  bool skipped = false;
  std::string skip_reason;

  int dim = 0;
  int edim = 0;
  std::vector<Vertex> dim_witness;
  std::vector<Vertex> edim_witness;
  int dim_slack = 0;  // (2c - 1) - dim
  int edim_slack = 0;
  bool dim_equality_predicted = false;
  bool edim_equality_predicted = false;

  bool dim_violation() const { return !skipped && !exempt && dim_slack < 0; }
  bool edim_violation() const { return !skipped && !exempt && edim_slack < 0; }
  bool dim_mismatch() const {
    return !skipped && !exempt && (dim_slack == 0) != dim_equality_predicted;
  }
  bool edim_mismatch() const {
    return !skipped && !exempt && (edim_slack == 0) != edim_equality_predicted;
  }
};

/// Solves dim and edim of g (relabeled to canonical form when n is small
/// enough) and compares them with 2c - 1 and the predicted equality.
/// BudgetExceeded propagates.
GraphRecord check_graph(const Graph& g, const SolverOptions& options = {});

struct Finding {
  std::string kind;  // "dim-violation", "edim-violation", "dim-mismatch", "edim-mismatch"
  std::string graph6;
  std::string detail;

  bool operator==(const Finding&) const = default;
};

struct VerificationReport {
  int scanned = 0;
  std::vector<GraphRecord> records;  // sorted by graph6
  std::vector<Finding> violations;
  std::vector<Finding> equality_mismatches;
  std::vector<std::string> skipped;  // graph6 of graphs over budget

  bool consistent() const { return violations.empty() && equality_mismatches.empty(); }
};

/// Checks every graph, graphs spread over OpenMP threads with the serial
/// solver inside each. A graph over budget is recorded as skipped.
VerificationReport scan(std::span<const Graph> graphs, const SolverOptions& options = {});

nlohmann::json to_json(const GraphRecord& record);
nlohmann::json to_json(const VerificationReport& report);
GraphRecord record_from_json(const nlohmann::json& j);
VerificationReport report_from_json(const nlohmann::json& j);

/// Fixed-width table followed by the findings.
std::string to_text(const VerificationReport& report);

}  // namespace metricdim

#endif  // METRICDIM_HARNESS_HPP
