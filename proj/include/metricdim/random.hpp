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

#ifndef METRICDIM_RANDOM_HPP
#define METRICDIM_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "metricdim/graph.hpp"

namespace metricdim {

/// Connected graph on n >= 3 vertices with minimum degree >= 2: a random
/// spanning tree, extra edges with probability `extra_edge_probability`, then
/// leaves patched with one more edge each. Draws come straight from the engine
/// so a seed reproduces the same graph on every platform.
Graph random_leafless_graph(std::mt19937_64& rng, int n, double extra_edge_probability = 0.25);

/// `count` graphs with orders drawn uniformly from [min_n, max_n].
std::vector<Graph> random_leafless_corpus(std::uint64_t seed, int count, int min_n, int max_n);

}  // namespace metricdim

#endif  // METRICDIM_RANDOM_HPP
