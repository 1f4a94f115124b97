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

#include <random>
#include <string>

#include "doctest.h"
#include "metricdim/daisy.hpp"
#include "metricdim/graph_io.hpp"
#include "metricdim/random.hpp"
#include "metricdim/theta.hpp"
#include "oracles.hpp"

using namespace metricdim;

TEST_CASE("graph6 known encodings") {
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(build_graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}})) == "DQc");
  CHECK(to_graph6(build_graph(1, std::vector<std::pair<Vertex, Vertex>>{})) == "@");
  CHECK(to_graph6(cycle_graph(3)) == "Bw");
  CHECK(from_graph6("C~") == complete_graph(4));
  CHECK(from_graph6(">>graph6<<DQc") == build_graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}}));
}

TEST_CASE("graph6 long-length header") {
  for (int n : {62, 63, 100, 300}) {
    const Graph g = cycle_graph(n);
    const std::string s = to_graph6(g);
    if (n <= 62) {
      CHECK(s[0] == static_cast<char>(n + 63));
    } else {
      CHECK(s[0] == '~');
      CHECK(s[1] != '~');
    }
    CHECK(s.size() == (n <= 62 ? 1u : 4u) + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6);
    CHECK(from_graph6(s) == g);
  }
}

TEST_CASE("graph6 rejects malformed strings") {
  CHECK_THROWS_AS(from_graph6(""), FormatError);
  CHECK_THROWS_AS(from_graph6("C"), FormatError);     // body too short
  CHECK_THROWS_AS(from_graph6("C~~"), FormatError);   // body too long
  CHECK_THROWS_AS(from_graph6("DQd"), FormatError);   // nonzero padding bits
  CHECK_THROWS_AS(from_graph6("C\x20"), FormatError); // char below 63
}

TEST_CASE("edge list reading") {
  const Graph g = from_edge_list("# a comment\nn 4\n0 1\n1 2\n\n2 3\n3 0\n");
  CHECK(g == cycle_graph(4));
  CHECK(from_edge_list("0 1\n1 2\n2 0\n") == cycle_graph(3));
  CHECK(from_edge_list("n 3\n0 1\n1 2\n").order() == 3);
  CHECK(from_edge_list("n 5\n0 1\n").order() == 5);

  CHECK_THROWS_AS(from_edge_list("0 1\n0 1\n"), FormatError);
  CHECK_THROWS_AS(from_edge_list("n 2\n0 5\n"), FormatError);
  CHECK_THROWS_AS(from_edge_list("0 x\n"), FormatError);
  CHECK_THROWS_AS(from_edge_list("0 1 2\n"), FormatError);
  CHECK_THROWS_AS(from_edge_list("1 1\n"), FormatError);
  try {
    from_edge_list("0 1\n1 two\n");
    FAIL("accepted a malformed line");
  } catch (const FormatError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("format detection and multi-graph parsing") {
  CHECK(detect_format("C~\n") == GraphFormat::kGraph6);
  CHECK(detect_format(">>graph6<<C~\n") == GraphFormat::kGraph6);
  CHECK(detect_format("n 3\n0 1\n") == GraphFormat::kEdgeList);
  CHECK(detect_format("# c\n0 1\n") == GraphFormat::kEdgeList);

  const auto graphs = parse_graphs("Bw\nC~\n\nDQc\n");
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[0] == cycle_graph(3));
  CHECK(graphs[1] == complete_graph(4));
  CHECK(parse_graphs("0 1\n1 2\n2 0\n").size() == 1);
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), std::exception);
}

TEST_CASE("round trips on random and family graphs") {
  std::mt19937_64 rng(3);
  std::vector<Graph> graphs;
  for (int i = 0; i < 200; ++i) {
    graphs.push_back(oracle::random_connected(rng, 1 + static_cast<int>(rng() % 70), 0.1));
  }
  for (const Graph& g : random_leafless_corpus(5, 50, 3, 12)) graphs.push_back(g);
  graphs.push_back(theta_graph({3, 5, 8}).graph);
  graphs.push_back(daisy_graph({{3, 4, 5}}));
  for (const Graph& g : graphs) {
    CHECK(from_graph6(to_graph6(g)) == g);
    CHECK(to_graph6(from_graph6(to_graph6(g))) == to_graph6(g));
    CHECK(from_edge_list(to_edge_list(g)) == g);
    CHECK(to_edge_list(from_edge_list(to_edge_list(g))) == to_edge_list(g));
  }
}
