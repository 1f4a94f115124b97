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
#include "metricdim/sweeps.hpp"

using namespace metricdim;

namespace {

int passed(const SweepResult& r, const std::string& label) {
  for (const CaseTally& c : r.cases)
    if (c.label == label) return c.passed;
  return -1;
}

}  // namespace

TEST_CASE("SweepResult bookkeeping") {
  SweepResult r;
  r.cases.push_back({"a", 0, 0});
  CHECK(r.ok());
  CHECK_FALSE(r.every_case_covered());
  r.pass("a");
  r.pass("b");
  CHECK(r.every_case_covered());
  CHECK(r.checked() == 2);
  r.fail("a", "X", "broken");
  CHECK_FALSE(r.ok());
  CHECK(r.checked() == 3);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].subject == "X");
  CHECK(r.failures[0].detail == "[a] broken");
}

TEST_CASE("vertex recipe sweep covers every case without failures") {
  const SweepResult r = verify_vertex_recipes(18);
  CHECK(r.ok());
  CHECK(r.every_case_covered());
  CHECK(r.cases.size() == 8);
  CHECK(passed(r, "i") > 0);
  CHECK(passed(r, "viii") > 0);
}

TEST_CASE("edge recipe sweep covers every case without failures") {
  const SweepResult r = verify_edge_recipes(18);
  CHECK(r.ok());
  CHECK(r.every_case_covered());
  CHECK(r.cases.size() == 5);
}

TEST_CASE("theorem sweep finds exactly the extremal families") {
  const TheoremSweep t = verify_theorems(14);
  CHECK(t.result.ok());
  const std::vector<ThetaParams> dim_three = {{2, 2, 2}, {2, 2, 4}, {3, 3, 3}, {3, 3, 5}, {4, 4, 4}, {4, 4, 6}};
  auto got = t.dim_three;
  std::sort(got.begin(), got.end());
  CHECK(got == dim_three);
  auto edim = t.edim_three;
  std::sort(edim.begin(), edim.end());
  CHECK(edim == edim_extremal_thetas());
}

TEST_CASE("size-3 generator sweeps") {
  const SweepResult vertex = verify_vertex_extremal(3);
  CHECK(vertex.ok());
  CHECK(vertex.every_case_covered());
  // Θ_{2,2,2}, Θ_{2,2,4}, Θ_{3,3,3}, Θ_{3,3,5}: 5 + 7 + 8 + 10 vertices.
  CHECK(passed(vertex, "nice-set") == 30);
  CHECK(passed(vertex, "no-2-generator") == 4);

  const SweepResult edge = verify_edge_extremal();
  CHECK(edge.ok());
  CHECK(passed(edge, "edim=3") == 7);
  CHECK(passed(edge, "extend") == 4 + 5 + 6 + 7 + 8 + 9 + 10);
}

TEST_CASE("daisy family generation") {
  const auto fam = daisy_family({4, 6}, 3);
  // k=2: [4,4],[4,6],[6,6]; k=3: [4,4,4],[4,4,6],[4,6,6],[6,6,6]
  CHECK(fam.size() == 7);
  CHECK(fam.front().petal_lengths == std::vector<int>{4, 4});
  CHECK(fam.back().petal_lengths == std::vector<int>{6, 6, 6});
  CHECK(daisy_family({5, 5, 3}, 2).size() == 3);
}

TEST_CASE("daisy sweep") {
  const SweepResult r = verify_daisy(6, 3);
  CHECK(r.ok());
  CHECK(r.every_case_covered());

  SweepResult single;
  check_daisy({{4, 4}}, single, {});
  CHECK(single.ok());
  CHECK(passed(single, "dim=2k-1 (no odd petal)") == 1);
  CHECK(passed(single, "edim=2k-1") == 1);
}
