// Copyright 2026 The minmaxfit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <vector>

#include "benchmark/benchmark.h"
#include "minmaxfit/homogeneous.h"
#include "minmaxfit/random.h"
#include "minmaxfit/tiered.h"

namespace minmaxfit {
namespace {

std::vector<NodeRecord> Population(std::int64_t n) {
  return MakeNodes(SampleLognormal({0.0, 1.0}, static_cast<std::size_t>(n),
                                   RngSeed{1}));
}

void BM_ClosedForm(benchmark::State& state) {
  const auto nodes = Population(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ClosedFormSolution(nodes));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClosedForm)->RangeMultiplier(10)->Range(10, 100000)->Complexity();

// Fixed iteration budget, no early stop: cost per iteration.
void BM_MsaStepwise(benchmark::State& state) {
  const auto nodes = Population(state.range(0));
  MsaOptions options;
  options.max_iterations = 100000;
  options.gap_tolerance = 1e-300;
  options.fast_forward = false;
  for (auto _ : state) benchmark::DoNotOptimize(SolveMsa(nodes, options));
  state.SetItemsProcessed(state.iterations() * options.max_iterations);
}
BENCHMARK(BM_MsaStepwise)->Arg(12)->Arg(100)->Arg(1000)
    ->Unit(benchmark::kMillisecond);

// Time to a 1e-3 relative gap with runs of repeated best responses batched.
void BM_MsaToTolerance(benchmark::State& state) {
  const auto nodes = Population(state.range(0));
  MsaOptions options;
  options.max_iterations = 4'000'000'000;
  options.gap_tolerance = 1e-3;
  std::int64_t iterations = 0;
  for (auto _ : state) {
    const MsaResult r = SolveMsa(nodes, options);
    iterations = r.iterations;
    benchmark::DoNotOptimize(r);
  }
  state.counters["msa_iterations"] = static_cast<double>(iterations);
}
BENCHMARK(BM_MsaToTolerance)->Arg(12)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_BestPath(benchmark::State& state) {
  Rng rng(RngSeed{2});
  std::vector<std::vector<NodeRecord>> tiers;
  for (int k = 0; k < 4; ++k) {
    tiers.push_back(MakeNodes(SampleLognormal(
        {0.0, 1.0}, static_cast<std::size_t>(state.range(0)), rng)));
  }
  const TieredPopulation pop(std::move(tiers));
  const TieredSolution s = ClosedFormTiered(pop);
  for (auto _ : state) benchmark::DoNotOptimize(BestPath(pop, s.q));
}
BENCHMARK(BM_BestPath)->Arg(5)->Arg(25)->Arg(1000);

}  // namespace
}  // namespace minmaxfit
