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

#ifndef MINMAXFIT_FITNESS_H_
#define MINMAXFIT_FITNESS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace minmaxfit {

// Largest fitness accepted anywhere in the toolkit. Sums of a few hundred
// fitness values at this magnitude still fit in a double.
inline constexpr double kMaxFitness = 1e300;

// Attribute counts above this are multiplied in log space.
inline constexpr std::size_t kLogSpaceAttributeThreshold = 64;

// Throws Error(kInvalidFitness) unless 0 < fitness <= kMaxFitness.
void ValidateFitness(double fitness);

// Reciprocal of a valid fitness.
double Unfitness(double fitness);

// A node's identity together with its fitness and the derived unfitness.
// Immutable; construction validates the fitness.
class NodeRecord {
 public:
  NodeRecord(std::uint64_t id, double fitness);

  std::uint64_t id() const { return id_; }
  double fitness() const { return fitness_; }
  double unfitness() const { return unfitness_; }

  friend bool operator==(const NodeRecord&, const NodeRecord&) = default;

 private:
  std::uint64_t id_;
  double fitness_;
  double unfitness_;
};

// Builds records with ids 0..n-1.
std::vector<NodeRecord> MakeNodes(std::span<const double> fitness);

std::vector<double> FitnessOf(std::span<const NodeRecord> nodes);
double TotalFitness(std::span<const NodeRecord> nodes);

// Log-normal parameters: log(x) ~ Normal(mu, sigma^2).
struct LognormalSpec {
  double mu = 0.0;
  double sigma = 1.0;

  // Throws Error(kInvalidSpec) for sigma < 0 or non-finite parameters.
  void Validate() const;
};

// The per-attribute factors whose product forms a node's fitness.
class AttributeVector {
 public:
  explicit AttributeVector(std::vector<double> attributes);

  std::span<const double> attributes() const { return attributes_; }

 private:
  std::vector<double> attributes_;
};

// Product of the attributes. Computed in log space when there are more than
// kLogSpaceAttributeThreshold factors. Throws Error(kInvalidFitness) if the
// product leaves the accepted fitness range.
double LnfaFitness(const AttributeVector& attrs);

// Convenience overload; validates like the AttributeVector constructor.
double LnfaFitness(std::span<const double> attributes);

}  // namespace minmaxfit

#endif  // MINMAXFIT_FITNESS_H_
