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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <numeric>

#include "metricdim/canonical.hpp"
#include "metricdim/daisy.hpp"
#include "metricdim/graph.hpp"
#include "metricdim/random.hpp"
#include "metricdim/solver.hpp"
#include "metricdim/theta.hpp"

namespace {

using namespace metricdim;

Graph large_graph(int n) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n));
  return random_leafless_graph(rng, n, 0.05);
}

void BM_Apsp_Serial(benchmark::State& state) {
  const Graph g = large_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances_serial(g));
}

void BM_Apsp_Parallel(benchmark::State& state) {
  const Graph g = large_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g));
}

// A size with no generator forces a full scan of every candidate subset.
template <bool kParallel>
void subset_scan(benchmark::State& state) {
  const LabeledTheta t = theta_graph({static_cast<int>(state.range(0)), static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(0))});
  const DistanceMatrix dm = all_pairs_distances(t.graph);
  const SignatureTable table(t.graph, dm, GeneratorKind::kVertex);
  std::vector<Vertex> pool(t.graph.order());
  std::iota(pool.begin(), pool.end(), 0);
  for (auto _ : state) {
    auto found = kParallel ? first_generator_parallel(table, pool, 2, -1)
                           : first_generator_serial(table, pool, 2, -1);
    benchmark::DoNotOptimize(found);
  }
}

void BM_SubsetScan_Serial(benchmark::State& state) { subset_scan<false>(state); }
void BM_SubsetScan_Parallel(benchmark::State& state) { subset_scan<true>(state); }

template <bool kParallel>
void dimension(benchmark::State& state) {
  const Graph g = daisy_graph({std::vector<int>(static_cast<std::size_t>(state.range(0)), 6)});
  SolverOptions opts;
  opts.parallel = kParallel;
  for (auto _ : state) benchmark::DoNotOptimize(metric_dimension(g, GeneratorKind::kVertex, opts));
}

void BM_Dimension_Serial(benchmark::State& state) { dimension<false>(state); }
void BM_Dimension_Parallel(benchmark::State& state) { dimension<true>(state); }

void BM_Enumerate_Serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_leafless_serial(static_cast<int>(state.range(0))));
}

void BM_Enumerate_Parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_leafless(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_Apsp_Serial)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Apsp_Parallel)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsetScan_Serial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsetScan_Parallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Dimension_Serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Dimension_Parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate_Serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate_Parallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
