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

#include <string>

#include "benchmark/benchmark.h"
#include "minmaxfit/growth.h"

namespace minmaxfit {
namespace {

void BM_GrowHomogeneous(benchmark::State& state) {
  GrowthConfig config;
  config.model = static_cast<GrowthModel>(state.range(0));
  config.target_nodes = static_cast<std::size_t>(state.range(1));
  config.links_per_node = 2;
  config.seed = RngSeed{1};
  for (auto _ : state) benchmark::DoNotOptimize(GrowHomogeneous(config));
  state.SetLabel(std::string(GrowthModelName(config.model)));
}
BENCHMARK(BM_GrowHomogeneous)
    ->ArgsProduct({{0, 1, 2, 3}, {1000, 5000}})
    ->Unit(benchmark::kMillisecond);

void BM_EmpiricalCheck(benchmark::State& state) {
  const AttachmentDistribution p({1.0 / 6, 1.0 / 3, 1.0 / 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        EmpiricalAttachmentCheck(p, 1'000'000, RngSeed{1}));
  }
}
BENCHMARK(BM_EmpiricalCheck)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace minmaxfit
