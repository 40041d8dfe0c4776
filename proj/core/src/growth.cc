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

#include "minmaxfit/growth.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "minmaxfit/error.h"
#include "minmaxfit/homogeneous.h"

namespace minmaxfit {
namespace {

constexpr std::uint64_t kFitnessStream = 0;
constexpr std::uint64_t kAttachmentStream = 1;

class FitnessGenerator {
 public:
  FitnessGenerator(const FitnessSource& source, RngSeed seed)
      : source_(source), rng_(DeriveSeed(seed, kFitnessStream)) {}

  double Next() {
    const double fitness = std::visit(
        [this](const auto& src) { return Draw(src); }, source_);
    ValidateFitness(fitness);
    ++drawn_;
    return fitness;
  }

 private:
  double Draw(const LognormalSpec& spec) {
    return LognormalFromStandardNormal(spec, rng_.StandardNormal());
  }
  double Draw(const ExplicitFitness& src) {
    if (drawn_ >= src.values.size()) {
      throw Error(ErrorCode::kInvalidInput,
                  "explicit fitness list has fewer values than nodes");
    }
    return src.values[drawn_];
  }
  double Draw(const AttributeFitness& src) {
    return LnfaFitness(
        SampleUniformPositive(src.low, src.high, src.count, rng_));
  }

  const FitnessSource& source_;
  Rng rng_;
  std::size_t drawn_ = 0;
};

void ValidateFitnessSource(const FitnessSource& source) {
  if (const auto* spec = std::get_if<LognormalSpec>(&source)) {
    spec->Validate();
  } else if (const auto* attrs = std::get_if<AttributeFitness>(&source)) {
    if (attrs->count == 0) {
      throw Error(ErrorCode::kInvalidInput, "attribute count must be >= 1");
    }
  }
}

}  // namespace

std::string_view GrowthModelName(GrowthModel model) {
  switch (model) {
    case GrowthModel::kBarabasiAlbert:
      return "barabasi-albert";
    case GrowthModel::kBianconiBarabasi:
      return "bianconi-barabasi";
    case GrowthModel::kFitnessProportional:
      return "fitness-proportional";
    case GrowthModel::kMinmaxDerived:
      return "minmax-derived";
  }
  return "unknown";
}

GrowthModel ParseGrowthModel(std::string_view name) {
  for (GrowthModel model :
       {GrowthModel::kBarabasiAlbert, GrowthModel::kBianconiBarabasi,
        GrowthModel::kFitnessProportional, GrowthModel::kMinmaxDerived}) {
    if (name == GrowthModelName(model)) return model;
  }
  throw Error(ErrorCode::kInvalidInput,
              "unknown growth model '" + std::string(name) + "'");
}

AttachmentDistribution AttachmentWeights(
    GrowthModel model, std::span<const NodeRecord> nodes,
    std::span<const std::size_t> degrees) {
  if (nodes.empty()) {
    throw Error(ErrorCode::kInvalidInput, "no nodes to attach to");
  }
  if (degrees.size() != nodes.size()) {
    throw Error(ErrorCode::kInvalidInput,
                "degrees and nodes differ in length");
  }
  switch (model) {
    case GrowthModel::kFitnessProportional:
      return ProportionalAttachment(nodes);
    case GrowthModel::kMinmaxDerived:
      return ClosedFormSolution(nodes).p;
    case GrowthModel::kBarabasiAlbert:
    case GrowthModel::kBianconiBarabasi:
      break;
  }
  std::vector<double> weights(nodes.size());
  double total = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double degree = static_cast<double>(degrees[i]);
    weights[i] = model == GrowthModel::kBarabasiAlbert
                     ? degree
                     : degree * nodes[i].fitness();
    total += weights[i];
  }
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kDegenerateWeights,
                std::string(GrowthModelName(model)) +
                    " weights are all zero");
  }
  for (double& w : weights) w /= total;
  return AttachmentDistribution(std::move(weights));
}

std::size_t GrowthConfig::EffectiveSeedGraphSize() const {
  return seed_graph_size != 0 ? seed_graph_size
                              : std::max<std::size_t>(links_per_node, 2);
}

void GrowthConfig::Validate() const {
  const std::size_t seed_size = EffectiveSeedGraphSize();
  if (links_per_node == 0) {
    throw Error(ErrorCode::kInvalidInput, "links per node must be >= 1");
  }
  if (links_per_node > seed_size) {
    throw Error(ErrorCode::kInvalidInput,
                "links per node exceeds the seed graph size");
  }
  if (target_nodes < seed_size) {
    throw Error(ErrorCode::kInvalidInput,
                "target node count is below the seed graph size");
  }
  ValidateFitnessSource(fitness);
}

GrownGraph GrowHomogeneous(const GrowthConfig& config) {
  config.Validate();
  const std::size_t seed_size = config.EffectiveSeedGraphSize();
  FitnessGenerator fitness(config.fitness, config.seed);
  Rng attach_rng(DeriveSeed(config.seed, kAttachmentStream));

  std::vector<NodeRecord> records;
  std::vector<std::size_t> degrees;
  records.reserve(config.target_nodes);
  degrees.reserve(config.target_nodes);
  GrownGraph graph;

  for (std::size_t i = 0; i < seed_size; ++i) {
    records.emplace_back(i, fitness.Next());
    degrees.push_back(seed_size - 1);
    for (std::size_t j = 0; j < i; ++j) graph.edges.emplace_back(i, j);
  }

  std::vector<double> remaining;
  std::vector<std::size_t> targets;
  for (std::size_t n = seed_size; n < config.target_nodes; ++n) {
    const double phi = fitness.Next();
    const AttachmentDistribution weights = AttachmentWeights(
        config.model, std::span(records), std::span(degrees));
    remaining.assign(weights.begin(), weights.end());
    targets.clear();
    for (std::size_t l = 0; l < config.links_per_node; ++l) {
      const std::size_t target = SampleCategorical(remaining, attach_rng);
      remaining[target] = 0.0;
      targets.push_back(target);
    }
    records.emplace_back(n, phi);
    degrees.push_back(targets.size());
    for (std::size_t target : targets) {
      ++degrees[target];
      graph.edges.emplace_back(n, target);
    }
  }

  graph.nodes.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    graph.nodes.push_back(
        {records[i].id(), std::nullopt, records[i].fitness(), degrees[i]});
  }
  return graph;
}

GrownGraph GrowTiered(const TieredGrowthConfig& config) {
  const std::size_t num_tiers = config.tier_sizes.size();
  if (num_tiers < 2) {
    throw Error(ErrorCode::kInvalidInput, "tiered growth needs >= 2 tiers");
  }
  if (config.tier_fitness.size() != num_tiers) {
    throw Error(ErrorCode::kInvalidInput,
                "one fitness spec is required per tier");
  }
  if (config.model != GrowthModel::kFitnessProportional &&
      config.model != GrowthModel::kMinmaxDerived) {
    throw Error(ErrorCode::kInvalidInput,
                "tiered growth supports fitness-proportional or "
                "minmax-derived attachment");
  }
  for (std::size_t k = 0; k < num_tiers; ++k) {
    config.tier_fitness[k].Validate();
    if (config.tier_sizes[k] == 0) {
      throw Error(ErrorCode::kInvalidInput,
                  "tier " + std::to_string(k) + " has target size 0");
    }
  }

  Rng fitness_rng(DeriveSeed(config.seed, kFitnessStream));
  Rng attach_rng(DeriveSeed(config.seed, kAttachmentStream));
  GrownGraph graph;
  std::vector<NodeRecord> above;
  std::size_t above_offset = 0;
  for (std::size_t k = 0; k < num_tiers; ++k) {
    std::vector<double> upstream;
    if (k > 0) {
      const AttachmentDistribution dist =
          config.model == GrowthModel::kMinmaxDerived
              ? ClosedFormSolution(above).p
              : ProportionalAttachment(above);
      upstream.assign(dist.begin(), dist.end());
    }
    std::vector<NodeRecord> tier;
    const std::size_t offset = graph.nodes.size();
    for (std::size_t i = 0; i < config.tier_sizes[k]; ++i) {
      const double phi = LognormalFromStandardNormal(
          config.tier_fitness[k], fitness_rng.StandardNormal());
      ValidateFitness(phi);
      const std::uint64_t id = graph.nodes.size();
      tier.emplace_back(id, phi);
      graph.nodes.push_back({id, k, phi, 0});
      if (k > 0) {
        const std::size_t parent =
            above_offset + SampleCategorical(upstream, attach_rng);
        graph.edges.emplace_back(id, parent);
        ++graph.nodes.back().degree;
        ++graph.nodes[parent].degree;
      }
    }
    above = std::move(tier);
    above_offset = offset;
  }
  return graph;
}

bool FrequencyReport::AllWithin() const {
  return std::all_of(components.begin(), components.end(),
                     [](const ComponentFrequency& c) { return c.within; });
}

FrequencyReport EmpiricalAttachmentCheck(const AttachmentDistribution& probs,
                                         std::uint64_t draws, RngSeed seed) {
  if (draws == 0) {
    throw Error(ErrorCode::kInvalidInput, "draws must be >= 1");
  }
  Rng rng(seed);
  std::vector<std::uint64_t> counts(probs.size(), 0);
  for (std::uint64_t d = 0; d < draws; ++d) {
    ++counts[SampleCategorical(probs.values(), rng)];
  }
  FrequencyReport report;
  report.draws = draws;
  const double n = static_cast<double>(draws);
  for (std::size_t i = 0; i < probs.size(); ++i) {
    ComponentFrequency c;
    c.expected = probs[i];
    c.count = counts[i];
    c.frequency = static_cast<double>(counts[i]) / n;
    c.bound = 3.0 * std::sqrt(c.expected * (1.0 - c.expected) / n);
    c.within = std::abs(c.frequency - c.expected) <= c.bound;
    report.components.push_back(c);
  }
  return report;
}

DegreeDistribution ComputeDegreeDistribution(const GrownGraph& graph) {
  DegreeDistribution dist;
  for (const GraphNode& node : graph.nodes) ++dist.counts[node.degree];
  const double n = static_cast<double>(graph.nodes.size());
  std::size_t at_least = graph.nodes.size();
  for (const auto& [degree, count] : dist.counts) {
    dist.ccdf.emplace_back(degree, static_cast<double>(at_least) / n);
    at_least -= count;
  }
  return dist;
}

}  // namespace minmaxfit
