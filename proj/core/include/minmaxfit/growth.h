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

#ifndef MINMAXFIT_GROWTH_H_
#define MINMAXFIT_GROWTH_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "minmaxfit/distribution.h"
#include "minmaxfit/fitness.h"
#include "minmaxfit/random.h"

namespace minmaxfit {

enum class GrowthModel {
  kBarabasiAlbert,       // p_i ~ k_i
  kBianconiBarabasi,     // p_i ~ k_i phi_i
  kFitnessProportional,  // p_i ~ phi_i
  kMinmaxDerived,        // p = min-max closed-form solution
};

std::string_view GrowthModelName(GrowthModel model);
// Throws Error(kInvalidInput) for an unknown name.
GrowthModel ParseGrowthModel(std::string_view name);

// Normalized attachment weights over the existing nodes. `degrees` is
// parallel to `nodes`. Throws Error(kDegenerateWeights) if every weight is
// zero.
AttachmentDistribution AttachmentWeights(GrowthModel model,
                                         std::span<const NodeRecord> nodes,
                                         std::span<const std::size_t> degrees);

struct GraphNode {
  std::uint64_t id = 0;
  std::optional<std::size_t> tier;
  double fitness = 0.0;
  std::size_t degree = 0;

  friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct GrownGraph {
  std::vector<GraphNode> nodes;
  // Undirected; (new node, existing node) in insertion order.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;

  friend bool operator==(const GrownGraph&, const GrownGraph&) = default;
};

// Fitness values listed explicitly, consumed in node order.
struct ExplicitFitness {
  std::vector<double> values;
};

// Fitness as the product of `count` attributes, each uniform on [low, high).
struct AttributeFitness {
  std::size_t count = 1;
  double low = 0.5;
  double high = 2.0;
};

using FitnessSource =
    std::variant<LognormalSpec, ExplicitFitness, AttributeFitness>;

struct GrowthConfig {
  GrowthModel model = GrowthModel::kFitnessProportional;
  std::size_t target_nodes = 100;
  std::size_t links_per_node = 1;
  FitnessSource fitness = LognormalSpec{};
  // Size of the initial clique; 0 selects max(links_per_node, 2).
  std::size_t seed_graph_size = 0;
  RngSeed seed;

  std::size_t EffectiveSeedGraphSize() const;
  // Throws Error(kInvalidInput) if links_per_node > seed graph size or
  // target_nodes < seed graph size.
  void Validate() const;
};

// Starts from a clique and adds nodes one at a time; each new node links to
// `links_per_node` distinct existing nodes drawn without replacement from
// the model's weights (renormalized after each draw). Fitness and attachment
// draws use separate streams derived from the seed, so the fitness sequence
// does not depend on the model.
GrownGraph GrowHomogeneous(const GrowthConfig& config);

struct TieredGrowthConfig {
  // One spec per tier; tier 0 is the top (most upstream) tier.
  std::vector<LognormalSpec> tier_fitness;
  std::vector<std::size_t> tier_sizes;
  // kFitnessProportional or kMinmaxDerived.
  GrowthModel model = GrowthModel::kFitnessProportional;
  RngSeed seed;
};

// Adds tiers top-down. Every node outside tier 0 makes one upward link to
// the tier immediately above it, drawn from that tier's per-tier
// proportional (equivalently min-max) distribution. Tier-0 nodes make no
// upward link. Throws Error(kInvalidInput) for fewer than two tiers.
GrownGraph GrowTiered(const TieredGrowthConfig& config);

struct ComponentFrequency {
  double expected = 0.0;
  std::uint64_t count = 0;
  double frequency = 0.0;
  double bound = 0.0;  // 3 sqrt(p (1 - p) / draws)
  bool within = true;
};

struct FrequencyReport {
  std::uint64_t draws = 0;
  std::vector<ComponentFrequency> components;

  bool AllWithin() const;
};

// Samples the categorical distribution `draws` times and compares each
// component's frequency with its 3-sigma binomial band.
FrequencyReport EmpiricalAttachmentCheck(const AttachmentDistribution& probs,
                                         std::uint64_t draws, RngSeed seed);

struct DegreeDistribution {
  std::map<std::size_t, std::size_t> counts;
  // (degree d, fraction of nodes with degree >= d) for each observed d,
  // ascending.
  std::vector<std::pair<std::size_t, double>> ccdf;
};

DegreeDistribution ComputeDegreeDistribution(const GrownGraph& graph);

}  // namespace minmaxfit

#endif  // MINMAXFIT_GROWTH_H_
