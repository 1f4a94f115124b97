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

#ifndef METRICDIM_SOLVER_HPP
#define METRICDIM_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "metricdim/graph.hpp"

namespace metricdim {

/// Which objects a landmark set has to tell apart.
enum class GeneratorKind { kVertex, kEdge };

std::string_view to_string(GeneratorKind kind);

/// A candidate metric generator. Vertices are kept sorted and unique.
class LandmarkSet {
 public:
  LandmarkSet() = default;
  /// Sorts `vertices`; throws GraphError(kInvalidArgument) on duplicates or
  /// negative ids.
  LandmarkSet(std::vector<Vertex> vertices, GeneratorKind kind);

  std::span<const Vertex> vertices() const { return vertices_; }
  GeneratorKind kind() const { return kind_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  bool contains(Vertex v) const;

  bool operator==(const LandmarkSet&) const = default;

 private:
  std::vector<Vertex> vertices_;
  GeneratorKind kind_ = GeneratorKind::kVertex;
};

/// Precomputed d(s, t) for every vertex s and every target t, where the
/// targets are vertices (kVertex) or edges in Graph::edges() order (kEdge).
class SignatureTable {
 public:
  SignatureTable(const Graph& g, const DistanceMatrix& dm, GeneratorKind kind);

  GeneratorKind kind() const { return kind_; }
  int vertex_count() const { return n_; }
  int target_count() const { return targets_; }
  std::span<const int> row(Vertex s) const {
    return {d_.data() + static_cast<std::size_t>(s) * targets_,
            static_cast<std::size_t>(targets_)};
  }
  std::uint64_t pairs_per_check() const {
    return static_cast<std::uint64_t>(targets_) * (targets_ > 0 ? targets_ - 1 : 0) / 2;
  }

 private:
  GeneratorKind kind_;
  int n_;
  int targets_;
  std::vector<int> d_;
};

/// Distances from each landmark (ascending id order) to one target.
std::vector<int> distance_signature(const DistanceMatrix& dm, const LandmarkSet& s,
                                    Vertex target);
std::vector<int> distance_signature(const DistanceMatrix& dm, const LandmarkSet& s,
                                    Edge target);

/// Result of a generator test. On failure `first < second` name the first
/// undistinguished pair in scan order: vertex ids for kVertex, indices into
/// Graph::edges() for kEdge.
struct GeneratorCheck {
  bool ok = false;
  int first = -1;
  int second = -1;

  explicit operator bool() const { return ok; }
};

GeneratorCheck is_generator(const Graph& g, const LandmarkSet& s);
GeneratorCheck is_generator(const SignatureTable& table, std::span<const Vertex> s);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverOptions {
  /// Cap on the number of pairwise signature comparisons a search may plan.
  std::uint64_t budget = 1'000'000'000ULL;
  /// Use the OpenMP kernel; false selects the serial reference.
  bool parallel = true;
};

struct DimensionResult {
  int value = 0;
  LandmarkSet witness;
  GeneratorKind kind = GeneratorKind::kVertex;
};

/// Smallest generator by cardinality, lexicographically first within that
/// cardinality. Requires a connected graph with n >= 2. Throws BudgetExceeded
/// before starting a cardinality whose cumulative planned cost would exceed
/// options.budget.
DimensionResult metric_dimension(const Graph& g, GeneratorKind kind,
                                 const SolverOptions& options = {});

/// Lexicographically first generator of exactly `size` vertices containing
/// `forced`, if any.
std::optional<LandmarkSet> extend_to_generator(const Graph& g, Vertex forced, int size,
                                               GeneratorKind kind,
                                               const SolverOptions& options = {});

/// Search kernels shared by the two entry points above. `pool` lists candidate
/// vertices in ascending order; `forced` (or -1) is merged into every subset.
/// Both return the lexicographically first passing subset of `pool` of size
/// `pick`, merged with `forced` and sorted.
std::optional<std::vector<Vertex>> first_generator_serial(const SignatureTable& table,
                                                          std::span<const Vertex> pool,
                                                          int pick, Vertex forced);
std::optional<std::vector<Vertex>> first_generator_parallel(const SignatureTable& table,
                                                            std::span<const Vertex> pool,
                                                            int pick, Vertex forced);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

}  // namespace metricdim

#endif  // METRICDIM_SOLVER_HPP
