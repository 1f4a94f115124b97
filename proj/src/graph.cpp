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

#include "metricdim/graph.hpp"

#include <algorithm>
#include <tuple>

namespace metricdim {

namespace {

std::string pair_text(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void bfs_row(const Graph& g, Vertex source, std::span<int> dist,
             std::vector<Vertex>& queue) {
  std::fill(dist.begin(), dist.end(), DistanceMatrix::kUnreachable);
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == DistanceMatrix::kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
}

void require_connected(const Graph& g, const char* op) {
  if (!is_connected(g)) {
    throw GraphError(GraphError::Kind::kDisconnected,
                     std::string(op) + ": graph is disconnected");
  }
}

}  // namespace

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

int Graph::edge_index(Vertex a, Vertex b) const {
  const Edge e{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n < 0) {
    throw GraphError(GraphError::Kind::kInvalidArgument,
                     "negative vertex count");
  }
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw GraphError(GraphError::Kind::kVertexOutOfRange,
                       "edge " + pair_text(a, b) + " has an endpoint outside 0.." +
                           std::to_string(n - 1));
    }
    if (a == b) {
      throw GraphError(GraphError::Kind::kSelfLoop,
                       "self-loop at vertex " + std::to_string(a));
    }
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw GraphError(GraphError::Kind::kDuplicateEdge,
                     "duplicate edge " + pair_text(dup->u, dup->v));
  }
  g.adj_.assign(n, {});
  for (const Edge& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  require_connected(g, "all_pairs_distances");
  const int n = g.order();
  DistanceMatrix dm(n);
#pragma omp parallel
  {
    std::vector<Vertex> queue;
    queue.reserve(n);
#pragma omp for schedule(static)
    for (int s = 0; s < n; ++s) bfs_row(g, s, dm.mutable_row(s), queue);
  }
  return dm;
}

DistanceMatrix all_pairs_distances_serial(const Graph& g) {
  require_connected(g, "all_pairs_distances");
  const int n = g.order();
  DistanceMatrix dm(n);
  std::vector<Vertex> queue;
  for (int s = 0; s < n; ++s) bfs_row(g, s, dm.mutable_row(s), queue);
  return dm;
}

int vertex_edge_distance(const DistanceMatrix& dm, Vertex s, Edge e) {
  const int n = dm.order();
  if (s < 0 || s >= n || e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
    throw GraphError(GraphError::Kind::kVertexOutOfRange,
                     "vertex_edge_distance: id out of range");
  }
  if (dm(e.u, e.v) != 1) {
    throw GraphError(GraphError::Kind::kNotAnEdge,
                     pair_text(e.u, e.v) + " is not an edge");
  }
  return std::min(dm(s, e.u), dm(s, e.v));
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::vector<int> dist(n);
  std::vector<Vertex> queue;
  bfs_row(g, 0, dist, queue);
  return static_cast<int>(queue.size()) == n;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

int cyclomatic_number(const Graph& g) {
  require_connected(g, "cyclomatic_number");
  return g.size() - g.order() + 1;
}

BlockDecomposition block_decomposition(const Graph& g) {
  require_connected(g, "block_decomposition");
  const int n = g.order();
  BlockDecomposition out;
  if (n <= 1) return out;

  struct Frame {
    Vertex v;
    int parent_edge;
    std::size_t next;
  };

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<int> edge_stack;
  std::vector<Frame> stack;
  int timer = 0;
  int root_children = 0;
  const Vertex root = 0;

  auto emit_block = [&](int until_edge) {
    Block block;
    while (true) {
      const int e = edge_stack.back();
      edge_stack.pop_back();
      block.edge_indices.push_back(e);
      block.vertices.push_back(g.edges()[e].u);
      block.vertices.push_back(g.edges()[e].v);
      if (e == until_edge) break;
    }
    std::sort(block.edge_indices.begin(), block.edge_indices.end());
    std::sort(block.vertices.begin(), block.vertices.end());
    block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()),
                         block.vertices.end());
    out.blocks.push_back(std::move(block));
  };

  disc[root] = low[root] = timer++;
  stack.push_back({root, -1, 0});
  while (!stack.empty()) {
    Frame& top = stack.back();
    const Vertex v = top.v;
    auto nbrs = g.neighbors(v);
    if (top.next < nbrs.size()) {
      const Vertex w = nbrs[top.next++];
      const int e = g.edge_index(v, w);
      if (e == top.parent_edge) continue;
      if (disc[w] == -1) {
        edge_stack.push_back(e);
        disc[w] = low[w] = timer++;
        if (v == root) ++root_children;
        stack.push_back({w, e, 0});
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    const int parent_edge = top.parent_edge;
    stack.pop_back();
    if (stack.empty()) break;
    const Vertex parent = stack.back().v;
    low[parent] = std::min(low[parent], low[v]);
    if (low[v] >= disc[parent]) {
      if (parent != root) is_cut[parent] = 1;
      emit_block(parent_edge);
    }
  }
  if (root_children > 1) is_cut[root] = 1;

  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.cut_vertices.push_back(v);
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block& a, const Block& b) {
              return std::tie(a.vertices, a.edge_indices) <
                     std::tie(b.vertices, b.edge_indices);
            });
  return out;
}

}  // namespace metricdim
