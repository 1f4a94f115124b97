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

#include "metricdim/random.hpp"

#include <algorithm>

namespace metricdim {

namespace {

int draw(std::mt19937_64& rng, int bound) { return static_cast<int>(rng() % bound); }

bool coin(std::mt19937_64& rng, double probability) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < probability;
}

}  // namespace

Graph random_leafless_graph(std::mt19937_64& rng, int n, double extra_edge_probability) {
  if (n < 3) throw GraphError(GraphError::Kind::kInvalidArgument, "need n >= 3");
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<int> degree(n, 0);
  auto add = [&](int a, int b) {
    adj[a][b] = adj[b][a] = 1;
    ++degree[a];
    ++degree[b];
  };

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[draw(rng, i + 1)]);
  for (int i = 1; i < n; ++i) add(order[i], order[draw(rng, i)]);

  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!adj[a][b] && coin(rng, extra_edge_probability)) add(a, b);
    }
  }
  for (int v = 0; v < n; ++v) {
    while (degree[v] < 2) {
      const int w = draw(rng, n);
      if (w != v && !adj[v][w]) add(v, w);
    }
  }

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (adj[a][b]) edges.emplace_back(a, b);
    }
  }
  return build_graph(n, edges);
}

std::vector<Graph> random_leafless_corpus(std::uint64_t seed, int count, int min_n, int max_n) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const int n = min_n + draw(rng, max_n - min_n + 1);
    out.push_back(random_leafless_graph(rng, n));
  }
  return out;
}

}  // namespace metricdim
