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

#include "minmaxfit/fitness.h"

#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "minmaxfit/error.h"

namespace minmaxfit {
namespace {

std::string Describe(double value) {
  std::ostringstream out;
  out.precision(17);
  out << value;
  return out.str();
}

}  // namespace

void ValidateFitness(double fitness) {
  if (std::isnan(fitness)) {
    throw Error(ErrorCode::kInvalidFitness, "fitness is NaN");
  }
  if (!std::isfinite(fitness)) {
    throw Error(ErrorCode::kInvalidFitness, "fitness is infinite");
  }
  if (fitness <= 0.0) {
    throw Error(ErrorCode::kInvalidFitness,
                "fitness must be positive, got " + Describe(fitness));
  }
  if (fitness > kMaxFitness) {
    throw Error(ErrorCode::kInvalidFitness,
                "fitness exceeds the 1e300 cap, got " + Describe(fitness));
  }
}

double Unfitness(double fitness) {
  ValidateFitness(fitness);
  return 1.0 / fitness;
}

NodeRecord::NodeRecord(std::uint64_t id, double fitness)
    : id_(id), fitness_(fitness), unfitness_(Unfitness(fitness)) {}

std::vector<NodeRecord> MakeNodes(std::span<const double> fitness) {
  std::vector<NodeRecord> nodes;
  nodes.reserve(fitness.size());
  for (std::size_t i = 0; i < fitness.size(); ++i) {
    nodes.emplace_back(i, fitness[i]);
  }
  return nodes;
}

std::vector<double> FitnessOf(std::span<const NodeRecord> nodes) {
  std::vector<double> out;
  out.reserve(nodes.size());
  for (const NodeRecord& node : nodes) out.push_back(node.fitness());
  return out;
}

double TotalFitness(std::span<const NodeRecord> nodes) {
  double total = 0.0;
  for (const NodeRecord& node : nodes) total += node.fitness();
  return total;
}

void LognormalSpec::Validate() const {
  if (!std::isfinite(mu)) {
    throw Error(ErrorCode::kInvalidSpec, "log-normal mu must be finite");
  }
  if (!std::isfinite(sigma) || sigma < 0.0) {
    throw Error(ErrorCode::kInvalidSpec,
                "log-normal sigma must be finite and >= 0, got " +
                    Describe(sigma));
  }
}

AttributeVector::AttributeVector(std::vector<double> attributes)
    : attributes_(std::move(attributes)) {
  if (attributes_.empty()) {
    throw Error(ErrorCode::kInvalidInput, "attribute vector is empty");
  }
  for (double a : attributes_) {
    if (!std::isfinite(a) || a <= 0.0) {
      throw Error(ErrorCode::kInvalidInput,
                  "attributes must be positive and finite, got " +
                      Describe(a));
    }
  }
}

double LnfaFitness(const AttributeVector& attrs) {
  const std::span<const double> values = attrs.attributes();
  double fitness;
  if (values.size() > kLogSpaceAttributeThreshold) {
    double log_sum = 0.0;
    for (double a : values) log_sum += std::log(a);
    fitness = std::exp(log_sum);
  } else {
    fitness = 1.0;
    for (double a : values) fitness *= a;
  }
  ValidateFitness(fitness);
  return fitness;
}

double LnfaFitness(std::span<const double> attributes) {
  return LnfaFitness(
      AttributeVector(std::vector<double>(attributes.begin(),
                                          attributes.end())));
}

}  // namespace minmaxfit
