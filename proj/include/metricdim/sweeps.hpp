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

#ifndef METRICDIM_SWEEPS_HPP
#define METRICDIM_SWEEPS_HPP

#include <string>
#include <vector>

#include "metricdim/daisy.hpp"
#include "metricdim/solver.hpp"
#include "metricdim/theta.hpp"

namespace metricdim {

struct CaseTally {
  std::string label;
  int passed = 0;
  int failed = 0;
};

struct SweepFailure {
  std::string subject;
  std::string detail;
};

/// Outcome of one verification sweep, tallied per construction case.
struct SweepResult {
  std::string name;
  std::vector<CaseTally> cases;
  std::vector<SweepFailure> failures;

  bool ok() const { return failures.empty(); }
  bool every_case_covered() const;
  int checked() const;

  void pass(const std::string& label);
  void fail(const std::string& label, std::string subject, std::string detail);
};

/// dim2_generator over every non-dim-extremal Θ with p + q + r <= max_sum,
/// each set checked with is_generator. Cases "i" to "viii".
SweepResult verify_vertex_recipes(int max_sum);

/// edim2_generator over every Θ outside the edge-extremal seven, cases "i"
/// to "v".
SweepResult verify_edge_recipes(int max_sum);

struct TheoremSweep {
  SweepResult result;  // cases "dim=2", "dim=3", "edim=2", "edim=3"
  std::vector<ThetaParams> dim_three;   // brute-force dim = 3
  std::vector<ThetaParams> edim_three;  // brute-force edim = 3
};

/// Brute-force dim and edim against predicted_dim / predicted_edim.
TheoremSweep verify_theorems(int max_sum, const SolverOptions& options = {});

/// Θ_{p,p,p} and Θ_{p,p,p+2} for 2 <= p <= max_p: for every vertex a the nice
/// set through a resolves the graph and a size-3 generator through a exists;
/// every 2-subset fails with a concrete undistinguished pair.
SweepResult verify_vertex_extremal(int max_p, const SolverOptions& options = {});

/// The seven edge-extremal Θ-graphs: a size-3 edge generator through every
/// vertex, no size-2 edge generator, and edim = 3.
SweepResult verify_edge_extremal(const SolverOptions& options = {});

/// One daisy: dim = 2k - 1 without odd petals, dim < 2k - 1 otherwise, and
/// edim = 2k - 1.
void check_daisy(const DaisyParams& params, SweepResult& into, const SolverOptions& options);

/// All daisies with 2 <= k <= max_k petals of lengths in [3, max_petal].
SweepResult verify_daisy(int max_petal, int max_k, const SolverOptions& options = {});

/// All petal multisets (ascending) of size 2..max_k drawn from `lengths`.
std::vector<DaisyParams> daisy_family(const std::vector<int>& lengths, int max_k);

}  // namespace metricdim

#endif  // METRICDIM_SWEEPS_HPP
