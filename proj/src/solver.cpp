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

#include "metricdim/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>

namespace metricdim {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return b > kSaturated - a ? kSaturated : a + b;
}

// Scans target pairs (i, j), i < j, in lexicographic order and stops at the
// first pair no landmark separates.
GeneratorCheck scan_pairs(std::span<const int* const> rows, int targets) {
  for (int i = 0; i < targets; ++i) {
    for (int j = i + 1; j < targets; ++j) {
      bool separated = false;
      for (const int* row : rows) {
        if (row[i] != row[j]) {
          separated = true;
          break;
        }
      }
      if (!separated) return {false, i, j};
    }
  }
  return {true, -1, -1};
}

// Combination over positions 0..pool_size-1, lexicographic rank `rank`.
void unrank_combination(std::uint64_t rank, int pool_size, int pick,
                        std::vector<int>& out) {
  out.resize(pick);
  int x = 0;
  for (int i = 0; i < pick; ++i) {
    while (true) {
      const std::uint64_t block = binomial(pool_size - 1 - x, pick - 1 - i);
      if (rank < block) break;
      rank -= block;
      ++x;
    }
    out[i] = x++;
  }
}

bool next_combination(std::vector<int>& idx, int pool_size) {
  const int pick = static_cast<int>(idx.size());
  int i = pick - 1;
  while (i >= 0 && idx[i] == pool_size - pick + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

class Candidate {
 public:
  Candidate(const SignatureTable& table, std::span<const Vertex> pool, Vertex forced)
      : table_(table), pool_(pool), forced_(forced) {}

  GeneratorCheck check(const std::vector<int>& idx) {
    rows_.clear();
    if (forced_ >= 0) rows_.push_back(table_.row(forced_).data());
    for (int i : idx) rows_.push_back(table_.row(pool_[i]).data());
    return scan_pairs(rows_, table_.target_count());
  }

  std::vector<Vertex> vertices(const std::vector<int>& idx) const {
    std::vector<Vertex> out;
    if (forced_ >= 0) out.push_back(forced_);
    for (int i : idx) out.push_back(pool_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const SignatureTable& table_;
  std::span<const Vertex> pool_;
  Vertex forced_;
  std::vector<const int*> rows_;
};

std::uint64_t planned_cost(const SignatureTable& table, int pool_size, int pick) {
  return saturating_mul(binomial(pool_size, pick),
                        std::max<std::uint64_t>(table.pairs_per_check(), 1));
}

void require_valid_vertex(const Graph& g, Vertex v, const char* what) {
  if (v < 0 || v >= g.order()) {
    throw GraphError(GraphError::Kind::kVertexOutOfRange,
                     std::string(what) + ": vertex " + std::to_string(v) +
                         " out of range");
  }
}

}  // namespace

std::string_view to_string(GeneratorKind kind) {
  return kind == GeneratorKind::kVertex ? "vertex" : "edge";
}

LandmarkSet::LandmarkSet(std::vector<Vertex> vertices, GeneratorKind kind)
    : vertices_(std::move(vertices)), kind_(kind) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw GraphError(GraphError::Kind::kInvalidArgument,
                     "landmark set contains a duplicate vertex");
  }
  if (!vertices_.empty() && vertices_.front() < 0) {
    throw GraphError(GraphError::Kind::kVertexOutOfRange,
                     "landmark set contains a negative id");
  }
}

bool LandmarkSet::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

SignatureTable::SignatureTable(const Graph& g, const DistanceMatrix& dm,
                               GeneratorKind kind)
    : kind_(kind),
      n_(g.order()),
      targets_(kind == GeneratorKind::kVertex ? g.order() : g.size()) {
  d_.resize(static_cast<std::size_t>(n_) * targets_);
  for (Vertex s = 0; s < n_; ++s) {
    int* row = d_.data() + static_cast<std::size_t>(s) * targets_;
    if (kind == GeneratorKind::kVertex) {
      for (Vertex t = 0; t < n_; ++t) row[t] = dm(s, t);
    } else {
      const auto edges = g.edges();
      for (int t = 0; t < targets_; ++t) {
        row[t] = std::min(dm(s, edges[t].u), dm(s, edges[t].v));
      }
    }
  }
}

std::vector<int> distance_signature(const DistanceMatrix& dm, const LandmarkSet& s,
                                    Vertex target) {
  std::vector<int> sig;
  sig.reserve(s.size());
  for (Vertex x : s.vertices()) sig.push_back(dm(x, target));
  return sig;
}

std::vector<int> distance_signature(const DistanceMatrix& dm, const LandmarkSet& s,
                                    Edge target) {
  std::vector<int> sig;
  sig.reserve(s.size());
  for (Vertex x : s.vertices()) sig.push_back(vertex_edge_distance(dm, x, target));
  return sig;
}

GeneratorCheck is_generator(const SignatureTable& table, std::span<const Vertex> s) {
  std::vector<const int*> rows;
  rows.reserve(s.size());
  for (Vertex v : s) rows.push_back(table.row(v).data());
  return scan_pairs(rows, table.target_count());
}

GeneratorCheck is_generator(const Graph& g, const LandmarkSet& s) {
  for (Vertex v : s.vertices()) require_valid_vertex(g, v, "is_generator");
  const DistanceMatrix dm = all_pairs_distances_serial(g);
  const SignatureTable table(g, dm, s.kind());
  return is_generator(table, s.vertices());
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(result);
}

std::optional<std::vector<Vertex>> first_generator_serial(const SignatureTable& table,
                                                          std::span<const Vertex> pool,
                                                          int pick, Vertex forced) {
  const int pool_size = static_cast<int>(pool.size());
  if (pick < 0 || pick > pool_size) return std::nullopt;
  Candidate candidate(table, pool, forced);
  std::vector<int> idx(pick);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    if (candidate.check(idx)) return candidate.vertices(idx);
  } while (next_combination(idx, pool_size));
  return std::nullopt;
}

std::optional<std::vector<Vertex>> first_generator_parallel(const SignatureTable& table,
                                                            std::span<const Vertex> pool,
                                                            int pick, Vertex forced) {
  const int pool_size = static_cast<int>(pool.size());
  if (pick < 0 || pick > pool_size) return std::nullopt;
  const std::uint64_t total = binomial(pool_size, pick);
  constexpr std::uint64_t kChunk = 256;
  const auto chunks = static_cast<long long>((total + kChunk - 1) / kChunk);
  std::atomic<std::uint64_t> best{kSaturated};

#pragma omp parallel
  {
    Candidate candidate(table, pool, forced);
    std::vector<int> idx;
#pragma omp for schedule(dynamic, 1)
    for (long long c = 0; c < chunks; ++c) {
      std::uint64_t rank = static_cast<std::uint64_t>(c) * kChunk;
      if (rank >= best.load(std::memory_order_relaxed)) continue;
      const std::uint64_t end = std::min(total, rank + kChunk);
      unrank_combination(rank, pool_size, pick, idx);
      for (; rank < end; ++rank) {
        if (rank >= best.load(std::memory_order_relaxed)) break;
        if (candidate.check(idx)) {
          std::uint64_t seen = best.load();
          while (rank < seen && !best.compare_exchange_weak(seen, rank)) {
          }
          break;
        }
        next_combination(idx, pool_size);
      }
    }
  }

  if (best.load() == kSaturated) return std::nullopt;
  std::vector<int> idx;
  unrank_combination(best.load(), pool_size, pick, idx);
  return Candidate(table, pool, forced).vertices(idx);
}

DimensionResult metric_dimension(const Graph& g, GeneratorKind kind,
                                 const SolverOptions& options) {
  if (g.order() < 2) {
    throw GraphError(GraphError::Kind::kInvalidArgument,
                     "metric_dimension needs at least two vertices");
  }
  const DistanceMatrix dm = options.parallel ? all_pairs_distances(g)
                                             : all_pairs_distances_serial(g);
  const SignatureTable table(g, dm, kind);
  std::vector<Vertex> pool(g.order());
  std::iota(pool.begin(), pool.end(), 0);

  std::uint64_t planned = 0;
  for (int k = 1; k <= g.order(); ++k) {
    planned = saturating_add(planned, planned_cost(table, g.order(), k));
    if (planned > options.budget) {
      throw BudgetExceeded("search for a " + std::string(to_string(kind)) +
                           " generator of size " + std::to_string(k) + " on n=" +
                           std::to_string(g.order()) + " exceeds the budget of " +
                           std::to_string(options.budget) + " comparisons");
    }
    auto found = options.parallel ? first_generator_parallel(table, pool, k, -1)
                                  : first_generator_serial(table, pool, k, -1);
    if (found) return {k, LandmarkSet(std::move(*found), kind), kind};
  }
  // V(G) always resolves a simple connected graph, so this is unreachable.
  throw std::logic_error("metric_dimension: no generator found");
}

std::optional<LandmarkSet> extend_to_generator(const Graph& g, Vertex forced, int size,
                                               GeneratorKind kind,
                                               const SolverOptions& options) {
  require_valid_vertex(g, forced, "extend_to_generator");
  if (size < 1) {
    throw GraphError(GraphError::Kind::kInvalidArgument,
                     "extend_to_generator: size must be at least 1");
  }
  if (size > g.order()) return std::nullopt;
  const DistanceMatrix dm = options.parallel ? all_pairs_distances(g)
                                             : all_pairs_distances_serial(g);
  const SignatureTable table(g, dm, kind);
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != forced) pool.push_back(v);
  }
  if (planned_cost(table, static_cast<int>(pool.size()), size - 1) > options.budget) {
    throw BudgetExceeded("extend_to_generator: search exceeds the budget");
  }
  auto found = options.parallel ? first_generator_parallel(table, pool, size - 1, forced)
                                : first_generator_serial(table, pool, size - 1, forced);
  if (!found) return std::nullopt;
  return LandmarkSet(std::move(*found), kind);
}

}  // namespace metricdim
