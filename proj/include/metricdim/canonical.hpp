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

#ifndef METRICDIM_CANONICAL_HPP
#define METRICDIM_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "metricdim/graph.hpp"

namespace metricdim {

/// Upper-triangle adjacency bits in graph6 column order, x(0,1) as the most
/// significant bit. Comparing codes as integers compares the bit strings
/// lexicographically.
using AdjacencyCode = std::uint64_t;

inline constexpr int kMaxCanonicalOrder = 11;

AdjacencyCode adjacency_code(const Graph& g);
Graph graph_from_code(int n, AdjacencyCode code);

/// Smallest adjacency code over all vertex permutations (branch and bound on
/// column prefixes). Throws GraphError(kInvalidArgument) above
/// kMaxCanonicalOrder vertices.
AdjacencyCode canonical_code(const Graph& g);

/// True iff no permutation gives a smaller code than g's own labeling.
bool is_canonical(int n, AdjacencyCode code);

Graph canonical_graph(const Graph& g);

/// graph6 string of the canonical graph; graphs larger than
/// kMaxCanonicalOrder fall back to their own graph6 encoding.
std::string canonical_form(const Graph& g);

inline constexpr int kMinLeaflessOrder = 3;
inline constexpr int kMaxLeaflessOrder = 7;

/// Connected graphs on n vertices with minimum degree >= 2, one per
/// isomorphism class, in canonical form, ordered by code. Labeled graphs are
/// split across OpenMP threads. Throws GraphError(kInvalidArgument) outside
/// [kMinLeaflessOrder, kMaxLeaflessOrder].
std::vector<Graph> enumerate_leafless(int n);

/// Single-threaded reference for enumerate_leafless.
std::vector<Graph> enumerate_leafless_serial(int n);

}  // namespace metricdim

#endif  // METRICDIM_CANONICAL_HPP
