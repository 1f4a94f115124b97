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

#include "doctest.h"
#include "metricdim/daisy.hpp"
#include "metricdim/solver.hpp"
#include "metricdim/theta.hpp"
#include "oracles.hpp"

using namespace metricdim;

namespace {

// Blocks glued one after another at vertex 0 of the running graph.
Graph bouquet(const std::vector<std::pair<Graph, Vertex>>& parts) {
  Graph g = parts.front().first;
  Vertex center = parts.front().second;
  for (std::size_t i = 1; i < parts.size(); ++i) g = glue_at_vertex(g, center, parts[i].first, parts[i].second);
  return g;
}

// Two graphs joined by a path of `bridge` edges between a of g1 and b of g2.
Graph join_by_path(const Graph& g1, Vertex a, const Graph& g2, Vertex b, int bridge) {
  Graph g = g1;
  Vertex end = a;
  if (bridge > 0) {
    g = glue_at_vertex(g, a, path_graph(bridge + 1), 0);
    end = g.order() - 1;
  }
  return glue_at_vertex(g, end, g2, b);
}

}  // namespace

TEST_CASE("daisy_graph construction") {
  const Graph d44 = daisy_graph({{4, 4}});
  CHECK(d44.order() == 7);
  CHECK(d44.size() == 8);
  CHECK(cyclomatic_number(d44) == 2);
  CHECK(d44.degree(0) == 4);

  const Graph d333 = daisy_graph({{3, 3, 3}});
  CHECK(d333.order() == 7);
  CHECK(d333.size() == 9);
  CHECK(cyclomatic_number(d333) == 3);

  CHECK_THROWS_AS(daisy_graph({{2, 3}}), GraphError);
  CHECK_THROWS_AS(daisy_graph({{5}}), GraphError);
  CHECK(DaisyParams{{4, 5}}.has_odd_petal());
  CHECK_FALSE(DaisyParams{{4, 6}}.has_odd_petal());
}

TEST_CASE("is_daisy recognition") {
  const auto d = is_daisy(daisy_graph({{6, 4}}));
  REQUIRE(d.has_value());
  CHECK(d->petal_lengths == std::vector<int>{4, 6});
  CHECK_FALSE(is_daisy(theta_graph({2, 3, 4}).graph).has_value());
  CHECK_FALSE(is_daisy(join_by_path(cycle_graph(4), 0, cycle_graph(4), 0, 1)).has_value());
  CHECK_FALSE(is_daisy(cycle_graph(5)).has_value());
  // A chain of three triangles has two cut vertices, so it is not a daisy.
  const Graph chain = glue_at_vertex(glue_at_vertex(cycle_graph(3), 2, cycle_graph(3), 0), 4, cycle_graph(3), 0);
  CHECK_FALSE(is_daisy(chain).has_value());
  // Relabeling keeps recognition.
  const Graph g = daisy_graph({{3, 5, 4}});
  std::vector<int> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[i] = (i * 3 + 7) % g.order();
  const auto r = is_daisy(oracle::relabel(g, perm));
  REQUIRE(r.has_value());
  CHECK(r->petal_lengths == std::vector<int>{3, 4, 5});
}

TEST_CASE("glue_at_vertex examples") {
  const Graph cc = glue_at_vertex(cycle_graph(4), 0, cycle_graph(4), 0);
  const auto d = is_daisy(cc);
  REQUIRE(d.has_value());
  CHECK(d->petal_lengths == std::vector<int>{4, 4});

  const LabeledTheta t = theta_graph({2, 2, 2});
  const Graph tc = glue_at_vertex(t.graph, t.u, cycle_graph(4), 0);
  CHECK(tc.order() == 8);
  CHECK(cyclomatic_number(tc) == 3);

  CHECK(glue_at_vertex(path_graph(2), 1, path_graph(2), 0) == path_graph(3));
  CHECK_THROWS_AS(glue_at_vertex(path_graph(2), 2, path_graph(2), 0), GraphError);
  CHECK_THROWS_AS(glue_at_vertex(path_graph(2), 0, path_graph(2), -1), GraphError);
}

TEST_CASE("small builders") {
  CHECK(path_graph(4).size() == 3);
  CHECK(cycle_graph(5).size() == 5);
  CHECK(complete_graph(5).size() == 10);
  CHECK(is_cycle(cycle_graph(3)));
}

TEST_CASE("daisy dimensions against the exhaustive oracle") {
  const std::vector<std::vector<int>> families = {{4, 4}, {4, 6}, {3, 4}, {3, 3}, {5, 6},
                                                  {4, 4, 4}, {3, 4, 4}, {3, 3, 5}};
  for (const auto& petals : families) {
    const DaisyParams params{petals};
    const Graph g = daisy_graph(params);
    const int k = static_cast<int>(petals.size());
    CAPTURE(petals.size());
    const int dim = oracle::brute_dimension(g, false).value;
    const int edim = oracle::brute_dimension(g, true).value;
    if (params.has_odd_petal()) {
      CHECK(dim < 2 * k - 1);
    } else {
      CHECK(dim == 2 * k - 1);
    }
    CHECK(edim == 2 * k - 1);
    CHECK(metric_dimension(g, GeneratorKind::kVertex).value == dim);
    CHECK(metric_dimension(g, GeneratorKind::kEdge).value == edim);
  }
}

TEST_CASE("two vertex-disjoint non-trivial blocks force a strict bound") {
  const Graph c4 = cycle_graph(4);
  const Graph c6 = cycle_graph(6);
  const Graph t222 = theta_graph({2, 2, 2}).graph;
  const Graph t122 = theta_graph({1, 2, 2}).graph;
  const Graph t333 = theta_graph({3, 3, 3}).graph;
  const std::vector<Graph> families = {
      join_by_path(c4, 0, c4, 0, 1),       join_by_path(c4, 0, c6, 0, 2),
      join_by_path(t222, 0, t222, 0, 1),   join_by_path(t222, 0, t122, 0, 2),
      join_by_path(t122, 0, c4, 0, 1),     join_by_path(t333, 0, c4, 1, 1),
      join_by_path(t222, 2, t122, 2, 1),
  };
  for (const Graph& g : families) {
    const int c = cyclomatic_number(g);
    const BlockDecomposition bd = block_decomposition(g);
    int nontrivial = 0;
    for (const Block& b : bd.blocks) nontrivial += b.nontrivial();
    REQUIRE(nontrivial == 2);
    CHECK(metric_dimension(g, GeneratorKind::kVertex).value < 2 * c - 1);
    CHECK(metric_dimension(g, GeneratorKind::kEdge).value < 2 * c - 1);
  }
}

TEST_CASE("extremal thetas and cycles sharing one vertex stay below 2c - p - 1") {
  const LabeledTheta t222 = theta_graph({2, 2, 2});
  const LabeledTheta t224 = theta_graph({2, 2, 4});
  const LabeledTheta t122 = theta_graph({1, 2, 2});
  const LabeledTheta t223 = theta_graph({2, 2, 3});
  struct Family {
    Graph graph;
    int dim_extremal_blocks;
    int edim_extremal_blocks;
  };
  const std::vector<Family> families = {
      {bouquet({{t222.graph, t222.u}, {cycle_graph(4), 0}}), 1, 1},
      {bouquet({{t222.graph, t222.at(0, 1)}, {cycle_graph(4), 0}}), 1, 1},
      {bouquet({{t224.graph, t224.at(2, 2)}, {cycle_graph(6), 0}}), 1, 1},
      {bouquet({{t222.graph, t222.u}, {t222.graph, t222.u}}), 2, 2},
      {bouquet({{t122.graph, t122.u}, {cycle_graph(4), 0}}), 0, 1},
      {bouquet({{t223.graph, t223.at(2, 1)}, {cycle_graph(3), 0}}), 0, 1},
      {bouquet({{t122.graph, t122.at(1, 1)}, {t222.graph, t222.u}}), 1, 2},
      {bouquet({{t222.graph, t222.u}, {cycle_graph(4), 0}, {cycle_graph(4), 0}}), 1, 1},
  };
  for (const Family& f : families) {
    const int c = cyclomatic_number(f.graph);
    CHECK(metric_dimension(f.graph, GeneratorKind::kVertex).value <= 2 * c - f.dim_extremal_blocks - 1);
    CHECK(metric_dimension(f.graph, GeneratorKind::kEdge).value <= 2 * c - f.edim_extremal_blocks - 1);
  }
}
