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

#include "metricdim/theta.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace metricdim {

namespace {

constexpr char kPathNames[3] = {'u', 'v', 'w'};

bool even(int x) { return x % 2 == 0; }

}  // namespace

std::string describe_pair(const LabeledTheta& theta, GeneratorKind kind,
                          const GeneratorCheck& check) {
  if (kind == GeneratorKind::kVertex) {
    return theta.label(check.first) + " and " + theta.label(check.second);
  }
  const auto edge = [&](int idx) {
    const Edge e = theta.graph.edges()[idx];
    return theta.label(e.u) + theta.label(e.v);
  };
  return edge(check.first) + " and " + edge(check.second);
}

namespace {

void require_valid(const ThetaParams& params) {
  if (!is_valid(params)) {
    throw GraphError(GraphError::Kind::kInvalidArgument,
                     "invalid theta parameters " + to_string(params) +
                         " (need 1 <= p <= q <= r and q >= 2)");
  }
}

void verify_or_throw(const LabeledTheta& theta, const LandmarkSet& set, const char* what) {
  const GeneratorCheck check = is_generator(theta.graph, set);
  if (!check) {
    throw std::logic_error(std::string(what) + " built " + theta.format(set.vertices()) +
                           " on Theta" + to_string(theta.params) + " but it leaves " +
                           describe_pair(theta, set.kind(), check) + " undistinguished");
  }
}

// Path permutation plus optional u<->v swap. Only valid when every permuted
// path keeps its length.
struct Automorphism {
  std::array<int, 3> path_map;
  bool flip;
};

std::vector<Automorphism> symmetry_group(const ThetaParams& params) {
  std::vector<std::array<int, 3>> perms;
  if (params.p == params.q && params.q == params.r) {
    std::array<int, 3> perm{0, 1, 2};
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    perms = {{0, 1, 2}, {1, 0, 2}};
  }
  std::vector<Automorphism> group;
  for (bool flip : {false, true}) {
    for (const auto& perm : perms) group.push_back({perm, flip});
  }
  return group;
}

Vertex apply(const LabeledTheta& theta, const Automorphism& a, int path, int index) {
  const int len = theta.length(path);
  return theta.at(a.path_map[path], a.flip ? len - index : index);
}

struct Recipe {
  std::vector<LabeledTheta::Position> members;
  std::vector<LabeledTheta::Position> anchors;
};

// Nice sets for the dim-extremal Θ-graphs, each listed with the vertex
// positions it is meant to cover.
std::vector<Recipe> nice_recipes(const ThetaParams& params) {
  const int p = params.p;
  std::vector<Recipe> recipes;
  const bool all_equal = params.r == p;
  if (all_equal && p <= 3) {
    recipes.push_back({{{0, 0}, {1, 1}, {2, 1}}, {{0, 0}, {1, 1}}});
    return recipes;
  }
  if (!all_equal && p == 2) {
    recipes.push_back({{{0, 0}, {1, 1}, {2, 1}}, {{0, 0}, {1, 1}, {2, 1}}});
    recipes.push_back({{{0, 0}, {1, 1}, {2, 2}}, {{2, 2}}});
    return recipes;
  }
  for (int i = 0; i <= p / 2; ++i) {
    recipes.push_back({{{0, i}, {1, 1}, {2, 1}}, {{0, i}}});
  }
  if (!all_equal) {
    for (int j = 1; j <= p / 2 + 1; ++j) {
      recipes.push_back({{{0, 1}, {1, 1}, {2, j}}, {{2, j}}});
    }
  }
  return recipes;
}

}  // namespace

bool is_valid(const ThetaParams& params) {
  return params.p >= 1 && params.p <= params.q && params.q <= params.r && params.q >= 2;
}

std::string to_string(const ThetaParams& params) {
  return "(" + std::to_string(params.p) + "," + std::to_string(params.q) + "," +
         std::to_string(params.r) + ")";
}

LabeledTheta::Position LabeledTheta::position(Vertex x) const {
  if (x == u) return {0, 0};
  if (x == v) return {0, length(0)};
  for (int path = 0; path < 3; ++path) {
    for (int i = 1; i < length(path); ++i) {
      if (paths[path][i] == x) return {path, i};
    }
  }
  throw GraphError(GraphError::Kind::kVertexOutOfRange,
                   "vertex " + std::to_string(x) + " is not on the theta graph");
}

std::string LabeledTheta::label(Vertex x) const {
  if (x == u) return "u";
  if (x == v) return "v";
  const Position pos = position(x);
  return std::string(1, kPathNames[pos.path]) + "_" + std::to_string(pos.index);
}

std::string LabeledTheta::format(std::span<const Vertex> set) const {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ", ";
    out += label(set[i]);
  }
  return out + "}";
}

LabeledTheta theta_graph(const ThetaParams& params) {
  require_valid(params);
  LabeledTheta theta;
  theta.params = params;
  theta.u = 0;
  theta.v = 1;
  const std::array<int, 3> lengths{params.p, params.q, params.r};
  Vertex next = 2;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int path = 0; path < 3; ++path) {
    auto& seq = theta.paths[path];
    seq.push_back(theta.u);
    for (int i = 1; i < lengths[path]; ++i) seq.push_back(next++);
    seq.push_back(theta.v);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) edges.emplace_back(seq[i], seq[i + 1]);
  }
  theta.graph = build_graph(next, edges);
  return theta;
}

std::optional<LabeledTheta> is_theta(const Graph& g) {
  std::vector<Vertex> branch;
  for (Vertex x = 0; x < g.order(); ++x) {
    const int d = g.degree(x);
    if (d == 3) {
      branch.push_back(x);
    } else if (d != 2) {
      return std::nullopt;
    }
  }
  if (branch.size() != 2 || !is_connected(g)) return std::nullopt;
  const Vertex u = branch[0];
  const Vertex v = branch[1];

  std::vector<std::vector<Vertex>> paths;
  for (Vertex start : g.neighbors(u)) {
    std::vector<Vertex> seq{u};
    Vertex prev = u;
    Vertex cur = start;
    while (g.degree(cur) == 2) {
      seq.push_back(cur);
      const auto nb = g.neighbors(cur);
      const Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = nxt;
      if (cur == u) return std::nullopt;
    }
    if (cur != v) return std::nullopt;
    seq.push_back(v);
    paths.push_back(std::move(seq));
  }
  std::sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  LabeledTheta theta;
  theta.graph = g;
  theta.u = u;
  theta.v = v;
  for (int i = 0; i < 3; ++i) theta.paths[i] = std::move(paths[i]);
  theta.params = {theta.length(0), theta.length(1), theta.length(2)};
  if (theta.params.sum() - 1 != g.order() || !is_valid(theta.params)) return std::nullopt;
  return theta;
}

bool is_dim_extremal(const ThetaParams& params) {
  return is_valid(params) && params.p >= 2 && params.p == params.q &&
         (params.r == params.p || params.r == params.p + 2);
}

bool is_edim_extremal(const ThetaParams& params) {
  if (params == ThetaParams{1, 2, 2}) return true;
  return is_valid(params) && params.p == params.q && params.p >= 2 && params.p <= 3 &&
         params.r <= params.p + 2;
}

int predicted_dim(const ThetaParams& params) {
  require_valid(params);
  return is_dim_extremal(params) ? 3 : 2;
}

int predicted_edim(const ThetaParams& params) {
  require_valid(params);
  return is_edim_extremal(params) ? 3 : 2;
}

namespace detail {

ConstructedSet dim2_candidate(const LabeledTheta& theta) {
  const auto [p, q, r] = theta.params;
  if (is_dim_extremal(theta.params)) {
    throw GraphError(GraphError::Kind::kInvalidArgument,
                     "Theta" + to_string(theta.params) + " has dimension 3");
  }
  std::vector<Vertex> s;
  std::string label;
  const bool all_even = even(p) && even(q) && even(r);
  const bool all_odd = !even(p) && !even(q) && !even(r);
  const bool q_near_p = q == p || q == p + 2;

  if (all_even) {
    if (!q_near_p) {
      label = "iii";
      s = {theta.at(1, 1), theta.at(2, r / 2)};
    } else if (r >= p + 4) {
      label = "iv";
      s = {theta.at(1, q / 2), theta.at(2, 1)};
    } else {
      label = "v";
      s = {theta.at(1, 1), theta.at(2, 1)};
    }
  } else if (all_odd) {
    if (!q_near_p) {
      label = "vi";
      s = {theta.at(1, 1), theta.at(2, (r - 1) / 2)};
    } else if (r >= p + 4) {
      label = "vii";
      s = {theta.at(1, (q - 1) / 2), theta.at(2, 1)};
    } else {
      label = "viii";
      s = {theta.at(1, 1), theta.at(2, 1)};
    }
  } else if (p == 1 && even(q) && even(r)) {
    label = "ii";
    s = {theta.u, theta.at(2, r / 2)};
  } else {
    // Mixed parity with an odd length >= 3: that path takes the v-role and an
    // even path the w-role. The construction does not need p <= q <= r.
    label = "i";
    const std::array<int, 3> len{p, q, r};
    int even_path = -1;
    for (int i = 2; i >= 0 && even_path < 0; --i) {
      if (even(len[i])) even_path = i;
    }
    int odd_path = -1;
    if (!even(q) && q >= 3 && even(r)) {
      even_path = 2;
      odd_path = 1;
    } else {
      for (int i = 2; i >= 0 && odd_path < 0; --i) {
        if (!even(len[i]) && len[i] >= 3) odd_path = i;
      }
    }
    if (odd_path < 0 || even_path < 0) {
      throw std::logic_error("dim2_generator: no case applies to Theta" +
                             to_string(theta.params));
    }
    s = {theta.at(odd_path, (len[odd_path] - 1) / 2),
         theta.at(even_path, len[even_path] / 2)};
  }
  return {LandmarkSet(std::move(s), GeneratorKind::kVertex), label};
}

}  // namespace detail

ConstructedSet dim2_generator(const LabeledTheta& theta) {
  ConstructedSet out = detail::dim2_candidate(theta);
  verify_or_throw(theta, out.set, "dim2_generator");
  return out;
}

ConstructedSet dim2_generator(const ThetaParams& params) {
  return dim2_generator(theta_graph(params));
}

namespace detail {

ConstructedSet edim2_candidate(const LabeledTheta& theta) {
  const auto [p, q, r] = theta.params;
  if (is_edim_extremal(theta.params)) {
    throw GraphError(GraphError::Kind::kInvalidArgument,
                     "Theta" + to_string(theta.params) + " has edge dimension 3");
  }
  std::vector<Vertex> s;
  std::string label;
  if (p < q && r >= 3 && even(p + r)) {
    label = "i";
    s = {theta.at(2, (r - p) / 2), theta.at(2, (r + p) / 2)};
  } else if (p < q && r >= p + 3 && !even(p + r)) {
    label = "ii";
    s = {theta.at(2, (r - p) / 2), theta.at(2, (r + p + 1) / 2)};
  } else if (p < q && r == p + 1) {
    label = "iii";
    s = {theta.at(1, 1), theta.at(2, 1)};
  } else if (p == q && p >= 4) {
    label = "iv";
    s = {theta.at(0, 2), theta.at(1, 1)};
  } else if (p == q && r >= p + 3) {
    label = "v";
    s = {theta.at(1, 1), theta.at(2, 1)};
  } else {
    throw std::logic_error("edim2_generator: no case applies to Theta" +
                           to_string(theta.params));
  }
  return {LandmarkSet(std::move(s), GeneratorKind::kEdge), label};
}

}  // namespace detail

ConstructedSet edim2_generator(const LabeledTheta& theta) {
  ConstructedSet out = detail::edim2_candidate(theta);
  verify_or_throw(theta, out.set, "edim2_generator");
  return out;
}

ConstructedSet edim2_generator(const ThetaParams& params) {
  return edim2_generator(theta_graph(params));
}

bool is_nice_set(const LabeledTheta& theta, std::span<const Vertex> set) {
  constexpr std::array<std::pair<int, int>, 3> kCycles{{{0, 1}, {0, 2}, {1, 2}}};
  for (auto [a, b] : kCycles) {
    // Cycle C_ab walked as path a from u to v, then path b back towards u.
    std::vector<Vertex> cycle(theta.paths[a].begin(), theta.paths[a].end());
    for (int i = theta.length(b) - 1; i >= 1; --i) cycle.push_back(theta.at(b, i));
    const int len = static_cast<int>(cycle.size());

    std::vector<int> hits;
    for (int i = 0; i < len; ++i) {
      if (std::find(set.begin(), set.end(), cycle[i]) != set.end()) hits.push_back(i);
    }
    bool has_pair = false;
    for (std::size_t x = 0; x < hits.size() && !has_pair; ++x) {
      for (std::size_t y = x + 1; y < hits.size() && !has_pair; ++y) {
        const int gap = hits[y] - hits[x];
        const int dist = std::min(gap, len - gap);
        has_pair = len % 2 != 0 || 2 * dist != len;
      }
    }
    if (!has_pair) return false;
  }
  return true;
}

bool is_nice_set(const LabeledTheta& theta, const LandmarkSet& set) {
  return is_nice_set(theta, set.vertices());
}

LandmarkSet nice_set_generator(const LabeledTheta& theta, Vertex forced) {
  if (!is_dim_extremal(theta.params)) {
    throw GraphError(GraphError::Kind::kInvalidArgument,
                     "nice_set_generator needs Theta(p,p,p) or Theta(p,p,p+2) with p >= 2, got " +
                         to_string(theta.params));
  }
  theta.position(forced);  // range check

  const auto group = symmetry_group(theta.params);
  for (const Recipe& recipe : nice_recipes(theta.params)) {
    for (const auto& anchor : recipe.anchors) {
      for (const Automorphism& a : group) {
        if (apply(theta, a, anchor.path, anchor.index) != forced) continue;
        std::vector<Vertex> members;
        for (const auto& m : recipe.members) members.push_back(apply(theta, a, m.path, m.index));
        LandmarkSet set(std::move(members), GeneratorKind::kVertex);
        if (!is_nice_set(theta, set)) {
          throw std::logic_error("nice_set_generator built " + theta.format(set.vertices()) +
                                 " which is not nice");
        }
        verify_or_throw(theta, set, "nice_set_generator");
        return set;
      }
    }
  }
  throw std::logic_error("nice_set_generator: no recipe covers " + theta.label(forced));
}

std::vector<ThetaParams> thetas_up_to_sum(int max_sum) {
  std::vector<ThetaParams> out;
  for (int p = 1; 3 * p <= max_sum; ++p) {
    for (int q = std::max(p, 2); p + 2 * q <= max_sum; ++q) {
      for (int r = q; p + q + r <= max_sum; ++r) out.push_back({p, q, r});
    }
  }
  return out;
}

std::vector<ThetaParams> edim_extremal_thetas() {
  return {{1, 2, 2}, {2, 2, 2}, {2, 2, 3}, {2, 2, 4}, {3, 3, 3}, {3, 3, 4}, {3, 3, 5}};
}

}  // namespace metricdim
