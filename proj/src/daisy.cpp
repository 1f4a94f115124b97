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

#include "metricdim/daisy.hpp"

#include <algorithm>

namespace metricdim {

bool DaisyParams::has_odd_petal() const {
  return std::any_of(petal_lengths.begin(), petal_lengths.end(),
                     [](int len) { return len % 2 != 0; });
}

Graph daisy_graph(const DaisyParams& params) {
  if (params.petal_lengths.size() < 2) {
    throw GraphError(GraphError::Kind::kInvalidArgument, "a daisy needs at least two petals");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex next = 1;
  for (int len : params.petal_lengths) {
    if (len < 3) {
      throw GraphError(GraphError::Kind::kInvalidArgument,
                       "petal length " + std::to_string(len) + " is below 3");
    }
    Vertex prev = 0;
    for (int i = 1; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 0);
  }
  return build_graph(next, edges);
}

std::optional<DaisyParams> is_daisy(const Graph& g) {
  if (g.order() < 5 || !is_connected(g)) return std::nullopt;
  const BlockDecomposition bd = block_decomposition(g);
  if (bd.blocks.size() < 2 || bd.cut_vertices.size() != 1) return std::nullopt;
  const Vertex center = bd.cut_vertices.front();
  DaisyParams params;
  for (const Block& b : bd.blocks) {
    if (!b.is_cycle() ||
        !std::binary_search(b.vertices.begin(), b.vertices.end(), center)) {
      return std::nullopt;
    }
    params.petal_lengths.push_back(static_cast<int>(b.vertices.size()));
  }
  std::sort(params.petal_lengths.begin(), params.petal_lengths.end());
  return params;
}

Graph glue_at_vertex(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  if (v1 < 0 || v1 >= g1.order() || v2 < 0 || v2 >= g2.order()) {
    throw GraphError(GraphError::Kind::kVertexOutOfRange, "glue_at_vertex: bad vertex id");
  }
  if (!is_connected(g1) || !is_connected(g2)) {
    throw GraphError(GraphError::Kind::kDisconnected, "glue_at_vertex: inputs must be connected");
  }
  std::vector<Vertex> remap(g2.order());
  Vertex next = g1.order();
  for (Vertex x = 0; x < g2.order(); ++x) remap[x] = x == v2 ? v1 : next++;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : g1.edges()) edges.emplace_back(e.u, e.v);
  for (const Edge& e : g2.edges()) edges.emplace_back(remap[e.u], remap[e.v]);
  return build_graph(next, edges);
}

Graph path_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError(GraphError::Kind::kInvalidArgument, "cycle needs n >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build_graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return build_graph(n, edges);
}

}  // namespace metricdim
