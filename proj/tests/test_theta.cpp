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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "metricdim/solver.hpp"
#include "metricdim/theta.hpp"
#include "oracles.hpp"

using namespace metricdim;

namespace {

std::vector<Vertex> ids(const LabeledTheta& t, std::initializer_list<std::pair<int, int>> positions) {
  std::vector<Vertex> out;
  for (auto [path, index] : positions) out.push_back(t.at(path, index));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> as_vector(const LandmarkSet& s) { return {s.vertices().begin(), s.vertices().end()}; }

// Oracle-side extremality, straight from the characterizations.
bool dim_three(const ThetaParams& t) {
  return t.p >= 2 && t.p == t.q && (t.r == t.p || t.r == t.p + 2);
}
bool edim_three(const ThetaParams& t) {
  if (t.p == 1 && t.q == 2 && t.r == 2) return true;
  return t.p == t.q && t.p >= 2 && t.p <= 3 && t.r >= t.p && t.r <= t.p + 2;
}

}  // namespace

TEST_CASE("theta_graph construction") {
  const LabeledTheta t = theta_graph({2, 2, 2});
  CHECK(t.graph.order() == 5);
  CHECK(t.graph.size() == 6);
  CHECK(cyclomatic_number(t.graph) == 2);
  CHECK(t.u == 0);
  CHECK(t.v == 1);
  CHECK(t.at(0, 1) == 2);
  CHECK(t.at(1, 1) == 3);
  CHECK(t.at(2, 1) == 4);
  CHECK(t.label(4) == "w_1");
  CHECK(t.format(std::vector<Vertex>{0, 3}) == "{u, v_1}");

  CHECK_THROWS(theta_graph({1, 1, 2}));
  CHECK_THROWS(theta_graph({3, 2, 4}));
  CHECK_THROWS(theta_graph({0, 2, 2}));

  const LabeledTheta k4e = theta_graph({1, 2, 2});
  CHECK(k4e.graph.order() == 4);
  CHECK(k4e.graph.size() == 5);
  int degree_three = 0;
  for (Vertex x = 0; x < 4; ++x) degree_three += k4e.graph.degree(x) == 3;
  CHECK(degree_three == 2);
  CHECK(k4e.graph.has_edge(k4e.u, k4e.v));

  for (const ThetaParams& p : thetas_up_to_sum(14)) {
    const LabeledTheta th = theta_graph(p);
    CHECK(th.graph.order() == p.sum() - 1);
    CHECK(th.graph.size() == p.sum());
    for (int path = 0; path < 3; ++path) {
      CHECK(th.at(path, 0) == th.u);
      CHECK(th.at(path, th.length(path)) == th.v);
      for (int i = 0; i < th.length(path); ++i) CHECK(th.graph.has_edge(th.at(path, i), th.at(path, i + 1)));
    }
  }
}

TEST_CASE("predicted dimensions") {
  CHECK(predicted_dim({3, 3, 3}) == 3);
  CHECK(predicted_dim({2, 2, 3}) == 2);
  CHECK(predicted_dim({1, 2, 2}) == 2);
  CHECK(predicted_dim({4, 4, 6}) == 3);
  CHECK(predicted_edim({3, 3, 5}) == 3);
  CHECK(predicted_edim({4, 4, 5}) == 2);
  CHECK(predicted_edim({1, 2, 2}) == 3);
  const std::vector<ThetaParams> expected = {{1, 2, 2}, {2, 2, 2}, {2, 2, 3}, {2, 2, 4},
                                             {3, 3, 3}, {3, 3, 4}, {3, 3, 5}};
  CHECK(edim_extremal_thetas() == expected);
  for (const ThetaParams& p : thetas_up_to_sum(30)) {
    CHECK(is_dim_extremal(p) == dim_three(p));
    CHECK(is_edim_extremal(p) == edim_three(p));
  }
}

TEST_CASE("thetas_up_to_sum lists every valid triple once") {
  const auto all = thetas_up_to_sum(18);
  std::set<ThetaParams> unique(all.begin(), all.end());
  CHECK(unique.size() == all.size());
  std::size_t count = 0;
  for (int p = 1; p <= 18; ++p)
    for (int q = p; q <= 18; ++q)
      for (int r = q; p + q + r <= 18; ++r)
        if (q >= 2) ++count;
  CHECK(all.size() == count);
}

TEST_CASE("vertex generator recipes, spot checks") {
  const LabeledTheta t234 = theta_graph({2, 3, 4});
  const ConstructedSet a = dim2_generator(t234);
  CHECK(as_vector(a.set) == ids(t234, {{1, 1}, {2, 2}}));
  CHECK(a.case_label == "i");

  const LabeledTheta t146 = theta_graph({1, 4, 6});
  const ConstructedSet b = dim2_generator(t146);
  CHECK(as_vector(b.set) == ids(t146, {{0, 0}, {2, 3}}));
  CHECK(b.case_label == "ii");

  const LabeledTheta t244 = theta_graph({2, 4, 4});
  const ConstructedSet c = dim2_generator(t244);
  CHECK(as_vector(c.set) == ids(t244, {{1, 1}, {2, 1}}));
  CHECK(c.case_label == "v");

  CHECK(dim2_generator(ThetaParams{2, 3, 4}).set == a.set);
  CHECK_THROWS(dim2_generator(ThetaParams{3, 3, 3}));
  CHECK_THROWS(dim2_generator(ThetaParams{2, 2, 4}));
}

TEST_CASE("edge generator recipes, spot checks") {
  const LabeledTheta t234 = theta_graph({2, 3, 4});
  const ConstructedSet a = edim2_generator(t234);
  CHECK(as_vector(a.set) == ids(t234, {{2, 1}, {2, 3}}));
  CHECK(a.case_label == "i");

  const LabeledTheta t134 = theta_graph({1, 3, 4});
  const ConstructedSet b = edim2_generator(t134);
  CHECK(as_vector(b.set) == ids(t134, {{2, 1}, {2, 3}}));
  CHECK(b.case_label == "ii");

  const LabeledTheta t445 = theta_graph({4, 4, 5});
  const ConstructedSet c = edim2_generator(t445);
  CHECK(as_vector(c.set) == ids(t445, {{0, 2}, {1, 1}}));
  CHECK(c.case_label == "iv");

  for (const ThetaParams& p : edim_extremal_thetas()) CHECK_THROWS(edim2_generator(p));
}

TEST_CASE("recipes resolve every non-extremal theta, checked by the oracle") {
  std::set<std::string> dim_cases, edim_cases;
  for (const ThetaParams& p : thetas_up_to_sum(18)) {
    const LabeledTheta t = theta_graph(p);
    if (!dim_three(p)) {
      const ConstructedSet s = dim2_generator(t);
      CHECK(s.set.size() == 2);
      CHECK(s.set.kind() == GeneratorKind::kVertex);
      CHECK(oracle::resolves(t.graph, as_vector(s.set), false));
      dim_cases.insert(s.case_label);
    }
    if (!edim_three(p)) {
      const ConstructedSet s = edim2_generator(t);
      CHECK(s.set.size() == 2);
      CHECK(s.set.kind() == GeneratorKind::kEdge);
      CHECK(oracle::resolves(t.graph, as_vector(s.set), true));
      edim_cases.insert(s.case_label);
    }
  }
  CHECK(dim_cases == std::set<std::string>{"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"});
  CHECK(edim_cases == std::set<std::string>{"i", "ii", "iii", "iv", "v"});
}

TEST_CASE("dimension characterization against the exhaustive oracle") {
  for (const ThetaParams& p : thetas_up_to_sum(13)) {
    const Graph g = theta_graph(p).graph;
    CAPTURE(to_string(p));
    CHECK(oracle::brute_dimension(g, false).value == predicted_dim(p));
    CHECK(oracle::brute_dimension(g, true).value == predicted_edim(p));
  }
}

TEST_CASE("is_theta recognition") {
  const LabeledTheta t = theta_graph({2, 3, 4});
  const Graph rebuilt = build_graph(t.graph.order(), [&] {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (const Edge& x : t.graph.edges()) e.emplace_back(x.v, x.u);
    return e;
  }());
  const auto back = is_theta(rebuilt);
  REQUIRE(back.has_value());
  CHECK(back->params == ThetaParams{2, 3, 4});

  CHECK_FALSE(is_theta(build_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}})));
  CHECK_FALSE(is_theta(build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})));
  // Two degree-3 vertices but joined through a bridge, so not a theta.
  CHECK_FALSE(is_theta(build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}})));

  // A relabeled theta is recognized with a consistent labeling.
  std::mt19937_64 rng(5);
  for (const ThetaParams& p : thetas_up_to_sum(12)) {
    const LabeledTheta orig = theta_graph(p);
    std::vector<int> perm(orig.graph.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph g = oracle::relabel(orig.graph, perm);
    const auto lt = is_theta(g);
    REQUIRE(lt.has_value());
    CHECK(lt->params == p);
    CHECK(lt->graph == g);
    for (int path = 0; path < 3; ++path) {
      CHECK(lt->length(path) == (path == 0 ? p.p : path == 1 ? p.q : p.r));
      for (int i = 0; i < lt->length(path); ++i) CHECK(g.has_edge(lt->at(path, i), lt->at(path, i + 1)));
    }
  }
}

TEST_CASE("nice sets") {
  const LabeledTheta t = theta_graph({2, 2, 2});
  CHECK(is_nice_set(t, ids(t, {{0, 0}, {1, 1}, {2, 1}})));
  CHECK_FALSE(is_nice_set(t, std::vector<Vertex>{t.u, t.v}));
  CHECK_FALSE(is_nice_set(t, std::vector<Vertex>{t.at(0, 1)}));

  const LabeledTheta t444 = theta_graph({4, 4, 4});
  const LandmarkSet s = nice_set_generator(t444, t444.at(0, 2));
  CHECK(as_vector(s) == ids(t444, {{0, 2}, {1, 1}, {2, 1}}));

  // The p = 2 recipe for a w-position: {u, v_1, w_2}.
  const LabeledTheta t224 = theta_graph({2, 2, 4});
  const LandmarkSet w2 = nice_set_generator(t224, t224.at(2, 2));
  CHECK(w2.contains(t224.at(2, 2)));
  CHECK(is_nice_set(t224, w2));
  CHECK(is_generator(t224.graph, w2));
  // {u_1, v_1, w_2} leaves v_1 and u_1 symmetric around u on the short cycle.
  CHECK_FALSE(is_generator(t224.graph, LandmarkSet(ids(t224, {{0, 1}, {1, 1}, {2, 2}}), GeneratorKind::kVertex)));

  CHECK(as_vector(nice_set_generator(t, t.u)) == ids(t, {{0, 0}, {1, 1}, {2, 1}}));
  CHECK_THROWS(nice_set_generator(theta_graph({2, 3, 4}), 0));
}

TEST_CASE("nice set generators cover every vertex of the dim-extremal thetas") {
  for (int p = 2; p <= 6; ++p) {
    for (int r : {p, p + 2}) {
      const LabeledTheta t = theta_graph({p, p, r});
      const auto td = oracle::target_distances(t.graph, false);
      for (Vertex a = 0; a < t.graph.order(); ++a) {
        const LandmarkSet s = nice_set_generator(t, a);
        CHECK(s.size() == 3);
        CHECK(s.contains(a));
        CHECK(is_nice_set(t, s));
        CHECK(oracle::resolves(td, as_vector(s)));
      }
    }
  }
}

TEST_CASE("nice sets resolve: every nice 3-set on small extremal thetas is a generator") {
  for (int p = 2; p <= 4; ++p) {
    for (int r : {p, p + 2}) {
      const LabeledTheta t = theta_graph({p, p, r});
      const auto td = oracle::target_distances(t.graph, false);
      const int n = t.graph.order();
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = b + 1; c < n; ++c) {
            const std::vector<Vertex> s{a, b, c};
            if (is_nice_set(t, s)) CHECK(oracle::resolves(td, s));
          }
    }
  }
}

TEST_CASE("cycles of the dim-extremal thetas are isometric") {
  for (int p = 2; p <= 5; ++p) {
    for (int r : {p, p + 2}) {
      const LabeledTheta t = theta_graph({p, p, r});
      const auto d = oracle::floyd_warshall(t.graph);
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          std::vector<Vertex> cycle(t.paths[i].begin(), t.paths[i].end());
          for (int k = t.length(j) - 1; k >= 1; --k) cycle.push_back(t.at(j, k));
          const int len = static_cast<int>(cycle.size());
          for (int x = 0; x < len; ++x)
            for (int y = 0; y < len; ++y) {
              const int along = std::abs(x - y);
              CHECK(d[cycle[x]][cycle[y]] == std::min(along, len - along));
            }
        }
      }
    }
  }
}

TEST_CASE("describe_pair uses path labels") {
  const LabeledTheta t = theta_graph({2, 2, 2});
  const GeneratorCheck c = is_generator(t.graph, LandmarkSet({t.u, t.v}, GeneratorKind::kVertex));
  CHECK(describe_pair(t, GeneratorKind::kVertex, c) == "u_1 and v_1");
}
