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

#ifndef METRICDIM_GRAPH_HPP
#define METRICDIM_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace metricdim {

using Vertex = int;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  bool contains(Vertex x) const { return x == u || x == v; }
  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::runtime_error {
 public:
  enum class Kind {
    kSelfLoop,
    kDuplicateEdge,
    kVertexOutOfRange,
    kDisconnected,
    kNotAnEdge,
    kInvalidArgument,
  };

  GraphError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted by (u, v); each adjacency list is sorted. Build one
/// through build_graph(), which validates the edge list.
class Graph {
 public:
  Graph() = default;

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(Vertex a, Vertex b) const;
  /// Position of edge {a, b} in edges(), or -1.
  int edge_index(Vertex a, Vertex b) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  friend Graph build_graph(int n,
                           std::span<const std::pair<Vertex, Vertex>> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Throws GraphError on self-loops, duplicate edges and out-of-range ids.
Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

inline Graph build_graph(int n,
                         const std::vector<std::pair<Vertex, Vertex>>& edges) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edges));
}

/// All-pairs hop distances, row-major n x n.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n)
      : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int order() const { return n_; }
  int operator()(Vertex a, Vertex b) const {
    return d_[static_cast<std::size_t>(a) * n_ + b];
  }
  std::span<const int> row(Vertex s) const {
    return {d_.data() + static_cast<std::size_t>(s) * n_,
            static_cast<std::size_t>(n_)};
  }
  std::span<int> mutable_row(Vertex s) {
    return {d_.data() + static_cast<std::size_t>(s) * n_,
            static_cast<std::size_t>(n_)};
  }

  bool operator==(const DistanceMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<int> d_;
};

/// BFS from every source, sources distributed over OpenMP threads.
/// Throws GraphError(kDisconnected) if some pair is unreachable.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Single-threaded reference for all_pairs_distances.
DistanceMatrix all_pairs_distances_serial(const Graph& g);

/// d(s, e) = min(d(s, e.u), d(s, e.v)). Throws kNotAnEdge when the endpoints
/// are not adjacent.
int vertex_edge_distance(const DistanceMatrix& dm, Vertex s, Edge e);

bool is_connected(const Graph& g);
int min_degree(const Graph& g);
bool is_cycle(const Graph& g);

/// m - n + 1; throws kDisconnected for disconnected graphs.
int cyclomatic_number(const Graph& g);

struct Block {
  std::vector<Vertex> vertices;  // sorted
  std::vector<int> edge_indices;  // indices into Graph::edges(), sorted

  bool nontrivial() const { return vertices.size() >= 3; }
  int cyclomatic() const {
    return static_cast<int>(edge_indices.size()) -
           static_cast<int>(vertices.size()) + 1;
  }
  bool is_cycle() const {
    return vertices.size() >= 3 && edge_indices.size() == vertices.size();
  }
};

struct BlockDecomposition {
  std::vector<Block> blocks;  // sorted by their vertex lists
  std::vector<Vertex> cut_vertices;  // sorted

  bool two_connected(int n) const { return blocks.size() == 1 && n >= 3; }
};

/// Biconnected components via iterative low-point DFS. Bridges come out as
/// two-vertex blocks. Throws kDisconnected.
BlockDecomposition block_decomposition(const Graph& g);

}  // namespace metricdim

#endif  // METRICDIM_GRAPH_HPP
