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

#include "metricdim/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "metricdim/graph_io.hpp"

namespace metricdim {

namespace {

using Rows = std::array<std::uint16_t, kMaxCanonicalOrder>;

int bit_count(int n) { return n * (n - 1) / 2; }

int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

Rows rows_from_code(int n, AdjacencyCode code) {
  Rows rows{};
  const int total = bit_count(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((code >> (total - 1 - pair_index(i, j))) & 1) {
        rows[i] |= static_cast<std::uint16_t>(1u << j);
        rows[j] |= static_cast<std::uint16_t>(1u << i);
      }
    }
  }
  return rows;
}

// Depth-first search over vertex orders. Placing position j fixes column j of
// the code, so a branch is abandoned once its prefix exceeds the best prefix.
class CanonicalSearch {
 public:
  CanonicalSearch(int n, const Rows& rows, AdjacencyCode start, bool stop_on_smaller)
      : n_(n), total_(bit_count(n)), rows_(rows), best_(start), start_(start),
        stop_on_smaller_(stop_on_smaller) {}

  AdjacencyCode run() {
    if (n_ <= 1) return best_;
    descend(0, 0, 0);
    return best_;
  }

  bool found_smaller() const { return found_smaller_; }

 private:
  bool descend(int pos, AdjacencyCode prefix, int used) {
    if (pos == n_) {
      if (prefix < best_) {
        best_ = prefix;
        found_smaller_ = true;
        if (stop_on_smaller_) return true;
      }
      return false;
    }
    const int bits_after = total_ - bit_count(pos + 1);
    for (int x = 0; x < n_; ++x) {
      if (used & (1 << x)) continue;
      AdjacencyCode column = 0;
      for (int i = 0; i < pos; ++i) column = (column << 1) | ((rows_[order_[i]] >> x) & 1);
      const AdjacencyCode next = (prefix << pos) | column;
      const AdjacencyCode bound = best_ >> bits_after;
      if (next > bound) continue;
      // Any completion of a strictly smaller prefix beats the start labeling.
      if (stop_on_smaller_ && next < bound) {
        found_smaller_ = true;
        return true;
      }
      order_[pos] = x;
      if (descend(pos + 1, next, used | (1 << x))) return true;
    }
    return false;
  }

  int n_;
  int total_;
  Rows rows_;
  AdjacencyCode best_;
  AdjacencyCode start_;
  bool stop_on_smaller_;
  bool found_smaller_ = false;
  std::array<int, kMaxCanonicalOrder> order_{};
};

void require_small(int n) {
  if (n > kMaxCanonicalOrder) {
    throw GraphError(GraphError::Kind::kInvalidArgument,
                     "canonical labeling supports at most " +
                         std::to_string(kMaxCanonicalOrder) + " vertices");
  }
}

bool leafless_and_connected(int n, const Rows& rows) {
  for (int v = 0; v < n; ++v) {
    if (std::popcount(static_cast<unsigned>(rows[v])) < 2) return false;
  }
  unsigned seen = 1;
  unsigned frontier = 1;
  while (frontier) {
    unsigned next = 0;
    for (int v = 0; v < n; ++v) {
      if (frontier & (1u << v)) next |= rows[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << n) - 1;
}

bool accept_leafless(int n, AdjacencyCode code) {
  const Rows rows = rows_from_code(n, code);
  if (!leafless_and_connected(n, rows)) return false;
  CanonicalSearch search(n, rows, code, true);
  search.run();
  return !search.found_smaller();
}

void require_leafless_range(int n) {
  if (n < kMinLeaflessOrder || n > kMaxLeaflessOrder) {
    throw GraphError(GraphError::Kind::kInvalidArgument,
                     "built-in enumeration supports " + std::to_string(kMinLeaflessOrder) +
                         " <= n <= " + std::to_string(kMaxLeaflessOrder) +
                         "; pass larger graphs as a graph6 stream");
  }
}

}  // namespace

AdjacencyCode adjacency_code(const Graph& g) {
  require_small(g.order());
  const int total = bit_count(g.order());
  AdjacencyCode code = 0;
  for (const Edge& e : g.edges()) code |= AdjacencyCode{1} << (total - 1 - pair_index(e.u, e.v));
  return code;
}

Graph graph_from_code(int n, AdjacencyCode code) {
  require_small(n);
  const int total = bit_count(n);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((code >> (total - 1 - pair_index(i, j))) & 1) edges.emplace_back(i, j);
    }
  }
  return build_graph(n, edges);
}

AdjacencyCode canonical_code(const Graph& g) {
  const AdjacencyCode own = adjacency_code(g);
  return CanonicalSearch(g.order(), rows_from_code(g.order(), own), own, false).run();
}

bool is_canonical(int n, AdjacencyCode code) {
  require_small(n);
  CanonicalSearch search(n, rows_from_code(n, code), code, true);
  search.run();
  return !search.found_smaller();
}

Graph canonical_graph(const Graph& g) { return graph_from_code(g.order(), canonical_code(g)); }

std::string canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) return to_graph6(g);
  return to_graph6(canonical_graph(g));
}

std::vector<Graph> enumerate_leafless(int n) {
  require_leafless_range(n);
  const long long masks = 1LL << bit_count(n);
  std::vector<AdjacencyCode> found;
#pragma omp parallel
  {
    std::vector<AdjacencyCode> local;
#pragma omp for schedule(dynamic, 4096) nowait
    for (long long mask = 0; mask < masks; ++mask) {
      if (accept_leafless(n, static_cast<AdjacencyCode>(mask))) local.push_back(mask);
    }
#pragma omp critical
    found.insert(found.end(), local.begin(), local.end());
  }
  std::sort(found.begin(), found.end());
  std::vector<Graph> out;
  out.reserve(found.size());
  for (AdjacencyCode code : found) out.push_back(graph_from_code(n, code));
  return out;
}

std::vector<Graph> enumerate_leafless_serial(int n) {
  require_leafless_range(n);
  const long long masks = 1LL << bit_count(n);
  std::vector<Graph> out;
  for (long long mask = 0; mask < masks; ++mask) {
    if (accept_leafless(n, static_cast<AdjacencyCode>(mask))) {
      out.push_back(graph_from_code(n, static_cast<AdjacencyCode>(mask)));
    }
  }
  return out;
}

}  // namespace metricdim
