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

#ifndef METRICDIM_DAISY_HPP
#define METRICDIM_DAISY_HPP

#include <optional>
#include <vector>

#include "metricdim/graph.hpp"

namespace metricdim {

/// Petal (cycle) lengths of a daisy: at least two cycles through one vertex.
struct DaisyParams {
  std::vector<int> petal_lengths;

  bool has_odd_petal() const;
  bool operator==(const DaisyParams&) const = default;
};

/// Daisy with center 0; petal i occupies the next (length_i - 1) ids.
/// Throws GraphError(kInvalidArgument) for fewer than two petals or a petal
/// shorter than 3.
Graph daisy_graph(const DaisyParams& params);

/// Petal lengths in ascending order when every block is a cycle, there are at
/// least two blocks and all of them share one vertex.
std::optional<DaisyParams> is_daisy(const Graph& g);

/// Disjoint union of g1 and g2 with v2 identified with v1. Vertices of g1 keep
/// their ids; the remaining vertices of g2 follow in order.
Graph glue_at_vertex(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);

/// Path on n vertices 0 - 1 - ... - n-1.
Graph path_graph(int n);
/// Cycle on n >= 3 vertices.
Graph cycle_graph(int n);
Graph complete_graph(int n);

}  // namespace metricdim

#endif  // METRICDIM_DAISY_HPP
