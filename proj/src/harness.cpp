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

#include "metricdim/harness.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "metricdim/canonical.hpp"
#include "metricdim/graph_io.hpp"

namespace metricdim {

namespace {

std::string join_ids(const std::vector<Vertex>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(ids[i]);
  }
  return out + "}";
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += " ";
    out += names[i];
  }
  return out;
}

Finding violation_finding(const GraphRecord& r, bool vertex) {
  const int value = vertex ? r.dim : r.edim;
  const char* name = vertex ? "dim" : "edim";
  std::ostringstream detail;
  detail << name << "=" << value << " exceeds 2c-1=" << 2 * r.c - 1 << " (n=" << r.n
         << ", m=" << r.m << ", tags " << join_names(r.tags) << "); minimum generator "
         << join_ids(vertex ? r.dim_witness : r.edim_witness)
         << ", no smaller set resolves the graph by exhaustive search";
  return {std::string(name) + "-violation", r.graph6, detail.str()};
}

Finding mismatch_finding(const GraphRecord& r, bool vertex) {
  const int value = vertex ? r.dim : r.edim;
  const bool predicted = vertex ? r.dim_equality_predicted : r.edim_equality_predicted;
  const char* name = vertex ? "dim" : "edim";
  std::ostringstream detail;
  detail << name << "=" << value << ", 2c-1=" << 2 * r.c - 1 << ": classification ["
         << join_names(r.tags) << "] predicts " << (predicted ? "equality" : "strict inequality")
         << "; minimum generator " << join_ids(vertex ? r.dim_witness : r.edim_witness);
  return {std::string(name) + "-mismatch", r.graph6, detail.str()};
}

GraphRecord skipped_record(const Graph& g, const std::string& reason) {
  GraphRecord r;
  r.graph6 = g.order() <= kMaxCanonicalOrder ? canonical_form(g) : to_graph6(g);
  r.n = g.order();
  r.m = g.size();
  r.c = is_connected(g) ? cyclomatic_number(g) : 0;
  r.skipped = true;
  r.skip_reason = reason;
  return r;
}

}  // namespace

std::string_view to_string(Tag tag) {
  switch (tag) {
    case Tag::kCycle: return "Cycle";
    case Tag::kTheta: return "Theta";
    case Tag::kDaisyNoOddPetals: return "DaisyNoOddPetals";
    case Tag::kDaisyWithOddPetal: return "DaisyWithOddPetal";
    case Tag::kThetaDimExtremal: return "ThetaDimExtremal";
    case Tag::kThetaEdimExtremal: return "ThetaEdimExtremal";
    case Tag::kOther2Connected: return "Other2Connected";
    case Tag::kHasCutVertex: return "HasCutVertex";
  }
  return "?";
}

bool GraphClassification::has(Tag tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

bool GraphClassification::predicts_dim_equality() const {
  return has(Tag::kDaisyNoOddPetals) || has(Tag::kThetaDimExtremal);
}

bool GraphClassification::predicts_edim_equality() const {
  return has(Tag::kDaisyNoOddPetals) || has(Tag::kDaisyWithOddPetal) ||
         has(Tag::kThetaEdimExtremal);
}

std::vector<std::string> GraphClassification::names() const {
  std::vector<std::string> out;
  for (Tag tag : tags) {
    if (tag == Tag::kTheta && theta) {
      out.push_back("Theta" + to_string(*theta));
    } else {
      out.emplace_back(to_string(tag));
    }
  }
  return out;
}

GraphClassification classify(const Graph& g) {
  if (!is_connected(g) || g.order() < 3 || min_degree(g) < 2) {
    throw GraphError(GraphError::Kind::kInvalidArgument,
                     "classify needs a connected graph with minimum degree >= 2");
  }
  GraphClassification out;
  if (is_cycle(g)) {
    out.tags.push_back(Tag::kCycle);
    return out;
  }
  if (auto theta = is_theta(g)) {
    out.theta = theta->params;
    out.tags.push_back(Tag::kTheta);
    if (is_dim_extremal(theta->params)) out.tags.push_back(Tag::kThetaDimExtremal);
    if (is_edim_extremal(theta->params)) out.tags.push_back(Tag::kThetaEdimExtremal);
    return out;
  }
  if (auto daisy = is_daisy(g)) {
    out.tags.push_back(daisy->has_odd_petal() ? Tag::kDaisyWithOddPetal : Tag::kDaisyNoOddPetals);
    out.daisy = std::move(daisy);
    return out;
  }
  const BlockDecomposition bd = block_decomposition(g);
  out.tags.push_back(bd.cut_vertices.empty() ? Tag::kOther2Connected : Tag::kHasCutVertex);
  return out;
}

GraphRecord check_graph(const Graph& input, const SolverOptions& options) {
  const Graph g = input.order() <= kMaxCanonicalOrder ? canonical_graph(input) : input;
  const GraphClassification cls = classify(g);
  GraphRecord r;
  r.graph6 = to_graph6(g);
  r.n = g.order();
  r.m = g.size();
  r.c = cyclomatic_number(g);
  r.tags = cls.names();
  r.exempt = cls.has(Tag::kCycle);
  r.dim_equality_predicted = cls.predicts_dim_equality();
  r.edim_equality_predicted = cls.predicts_edim_equality();

  const DimensionResult dim = metric_dimension(g, GeneratorKind::kVertex, options);
  const DimensionResult edim = metric_dimension(g, GeneratorKind::kEdge, options);
  r.dim = dim.value;
  r.edim = edim.value;
  r.dim_witness.assign(dim.witness.vertices().begin(), dim.witness.vertices().end());
  r.edim_witness.assign(edim.witness.vertices().begin(), edim.witness.vertices().end());
  r.dim_slack = 2 * r.c - 1 - r.dim;
  r.edim_slack = 2 * r.c - 1 - r.edim;
  return r;
}

VerificationReport scan(std::span<const Graph> graphs, const SolverOptions& options) {
  SolverOptions inner = options;
  inner.parallel = false;
  std::vector<GraphRecord> records(graphs.size());
  const auto count = static_cast<long long>(graphs.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    const Graph& g = graphs[i];
    try {
      records[i] = check_graph(g, inner);
    } catch (const std::exception& e) {
      records[i] = skipped_record(g, e.what());
    }
  }

  std::stable_sort(records.begin(), records.end(),
                   [](const GraphRecord& a, const GraphRecord& b) { return a.graph6 < b.graph6; });

  VerificationReport report;
  report.scanned = static_cast<int>(records.size());
  for (const GraphRecord& r : records) {
    if (r.skipped) {
      report.skipped.push_back(r.graph6);
      continue;
    }
    if (r.dim_violation()) report.violations.push_back(violation_finding(r, true));
    if (r.edim_violation()) report.violations.push_back(violation_finding(r, false));
    if (r.dim_mismatch()) report.equality_mismatches.push_back(mismatch_finding(r, true));
    if (r.edim_mismatch()) report.equality_mismatches.push_back(mismatch_finding(r, false));
  }
  report.records = std::move(records);
  return report;
}

nlohmann::json to_json(const GraphRecord& r) {
  nlohmann::json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["c"] = r.c;
  j["tags"] = r.tags;
  j["exempt"] = r.exempt;
  j["skipped"] = r.skipped;
  if (r.skipped) {
    j["skip_reason"] = r.skip_reason;
    return j;
  }
  j["dim"] = r.dim;
  j["edim"] = r.edim;
  j["dim_witness"] = r.dim_witness;
  j["edim_witness"] = r.edim_witness;
  j["dim_slack"] = r.dim_slack;
  j["edim_slack"] = r.edim_slack;
  j["dim_equality_predicted"] = r.dim_equality_predicted;
  j["edim_equality_predicted"] = r.edim_equality_predicted;
  return j;
}

GraphRecord record_from_json(const nlohmann::json& j) {
  GraphRecord r;
  r.graph6 = j.at("graph6").get<std::string>();
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.c = j.at("c").get<int>();
  r.tags = j.at("tags").get<std::vector<std::string>>();
  r.exempt = j.at("exempt").get<bool>();
  r.skipped = j.at("skipped").get<bool>();
  if (r.skipped) {
    r.skip_reason = j.at("skip_reason").get<std::string>();
    return r;
  }
  r.dim = j.at("dim").get<int>();
  r.edim = j.at("edim").get<int>();
  r.dim_witness = j.at("dim_witness").get<std::vector<Vertex>>();
  r.edim_witness = j.at("edim_witness").get<std::vector<Vertex>>();
  r.dim_slack = j.at("dim_slack").get<int>();
  r.edim_slack = j.at("edim_slack").get<int>();
  r.dim_equality_predicted = j.at("dim_equality_predicted").get<bool>();
  r.edim_equality_predicted = j.at("edim_equality_predicted").get<bool>();
  return r;
}

namespace {

nlohmann::json findings_json(const std::vector<Finding>& findings) {
  auto arr = nlohmann::json::array();
  for (const Finding& f : findings) {
    arr.push_back({{"kind", f.kind}, {"graph6", f.graph6}, {"detail", f.detail}});
  }
  return arr;
}

std::vector<Finding> findings_from_json(const nlohmann::json& arr) {
  std::vector<Finding> out;
  for (const auto& f : arr) {
    out.push_back({f.at("kind").get<std::string>(), f.at("graph6").get<std::string>(),
                   f.at("detail").get<std::string>()});
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["scanned"] = report.scanned;
  auto records = nlohmann::json::array();
  for (const GraphRecord& r : report.records) records.push_back(to_json(r));
  j["records"] = std::move(records);
  j["violations"] = findings_json(report.violations);
  j["equality_mismatches"] = findings_json(report.equality_mismatches);
  j["skipped"] = report.skipped;
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport report;
  report.scanned = j.at("scanned").get<int>();
  for (const auto& r : j.at("records")) report.records.push_back(record_from_json(r));
  report.violations = findings_from_json(j.at("violations"));
  report.equality_mismatches = findings_from_json(j.at("equality_mismatches"));
  report.skipped = j.at("skipped").get<std::vector<std::string>>();
  return report;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(14) << "graph6" << std::right << std::setw(4) << "n"
      << std::setw(4) << "m" << std::setw(4) << "c" << std::setw(5) << "dim" << std::setw(6)
      << "edim" << std::setw(7) << "slack" << "  tags\n";
  for (const GraphRecord& r : report.records) {
    out << std::left << std::setw(14) << r.graph6 << std::right << std::setw(4) << r.n
        << std::setw(4) << r.m << std::setw(4) << r.c;
    if (r.skipped) {
      out << "  skipped: " << r.skip_reason << '\n';
      continue;
    }
    out << std::setw(5) << r.dim << std::setw(6) << r.edim << std::setw(4) << r.dim_slack << '/'
        << r.edim_slack << "  " << join_names(r.tags) << (r.exempt ? " (exempt)" : "") << '\n';
  }
  out << "scanned " << report.scanned << ", violations " << report.violations.size()
      << ", equality mismatches " << report.equality_mismatches.size() << ", skipped "
      << report.skipped.size() << '\n';
  for (const Finding& f : report.violations) {
    out << "VIOLATION " << f.kind << " " << f.graph6 << ": " << f.detail << '\n';
  }
  for (const Finding& f : report.equality_mismatches) {
    out << "MISMATCH " << f.kind << " " << f.graph6 << ": " << f.detail << '\n';
  }
  return out.str();
}

}  // namespace metricdim
