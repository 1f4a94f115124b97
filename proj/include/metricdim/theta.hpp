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

#ifndef METRICDIM_THETA_HPP
#define METRICDIM_THETA_HPP

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metricdim/graph.hpp"
#include "metricdim/solver.hpp"

namespace metricdim {

/// Lengths of the three u-v paths, p <= q <= r, not p = q = 1.
struct ThetaParams {
  int p = 0;
  int q = 0;
  int r = 0;

  int sum() const { return p + q + r; }
  auto operator<=>(const ThetaParams&) const = default;
};

bool is_valid(const ThetaParams& params);
std::string to_string(const ThetaParams& params);

/// Θ-graph together with its path labeling: paths[0] = u_0..u_p,
/// paths[1] = v_0..v_q, paths[2] = w_0..w_r, all running from u to v.
struct LabeledTheta {
  ThetaParams params;
  Graph graph;
  Vertex u = 0;
  Vertex v = 0;
  std::array<std::vector<Vertex>, 3> paths;

  int length(int path) const { return static_cast<int>(paths[path].size()) - 1; }
  Vertex at(int path, int index) const { return paths[path][index]; }

  struct Position {
    int path;
    int index;
  };
  /// u reports (0, 0) and v reports (0, p).
  Position position(Vertex x) const;

  /// "u", "v", or "u_i" / "v_i" / "w_i" for interior vertices.
  std::string label(Vertex x) const;
  std::string format(std::span<const Vertex> set) const;
};

/// Builds Θ_{p,q,r} with u = 0, v = 1 and the interiors of P_1, P_2, P_3
/// numbered consecutively after that. Throws GraphError(kInvalidArgument).
LabeledTheta theta_graph(const ThetaParams& params);

/// Recognizes a Θ-graph and recovers its labeling; u is the smaller of the two
/// degree-3 vertices and equal-length paths are ordered by their vertex lists.
std::optional<LabeledTheta> is_theta(const Graph& g);

/// Θ_{p,p,p} or Θ_{p,p,p+2} with p >= 2.
bool is_dim_extremal(const ThetaParams& params);
/// Θ_{1,2,2} or Θ_{p,p,r} with 2 <= p <= 3 and p <= r <= p + 2.
bool is_edim_extremal(const ThetaParams& params);

int predicted_dim(const ThetaParams& params);
int predicted_edim(const ThetaParams& params);

/// A closed-form generator together with the case of the construction that
/// produced it ("i", "ii", ...).
struct ConstructedSet {
  LandmarkSet set;
  std::string case_label;
};

/// Size-2 vertex generator for a non-extremal Θ-graph. Throws
/// GraphError(kInvalidArgument) on extremal input and std::logic_error if the
/// constructed set fails verification.
ConstructedSet dim2_generator(const LabeledTheta& theta);
ConstructedSet dim2_generator(const ThetaParams& params);

/// Size-2 edge generator for a Θ-graph outside the seven edge-extremal ones.
ConstructedSet edim2_generator(const LabeledTheta& theta);
ConstructedSet edim2_generator(const ThetaParams& params);

/// For Θ_{p,p,p} / Θ_{p,p,p+2}: true iff S meets each of the cycles C_12, C_13,
/// C_23 in two vertices that are not antipodal on that cycle.
bool is_nice_set(const LabeledTheta& theta, std::span<const Vertex> set);
bool is_nice_set(const LabeledTheta& theta, const LandmarkSet& set);

/// Size-3 nice set containing `forced` on a dim-extremal Θ-graph.
LandmarkSet nice_set_generator(const LabeledTheta& theta, Vertex forced);

/// "u_1 and v_1" for vertices, "u_1v and w_2w_3" for edges.
std::string describe_pair(const LabeledTheta& theta, GeneratorKind kind,
                          const GeneratorCheck& check);

namespace detail {
// The constructions without the post-verification, for sweeps that tally
// failures themselves.
ConstructedSet dim2_candidate(const LabeledTheta& theta);
ConstructedSet edim2_candidate(const LabeledTheta& theta);
}  // namespace detail

/// All valid parameter triples with p + q + r <= max_sum, in lexicographic order.
std::vector<ThetaParams> thetas_up_to_sum(int max_sum);

/// The seven edge-extremal parameter triples.
std::vector<ThetaParams> edim_extremal_thetas();

}  // namespace metricdim

#endif  // METRICDIM_THETA_HPP
