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

#include "minmaxfit/random.h"

#include <cmath>
#include <numbers>

#include "minmaxfit/error.h"

namespace minmaxfit {

double Rng::Uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::StandardNormal() {
  if (spare_normal_) {
    const double z = *spare_normal_;
    spare_normal_.reset();
    return z;
  }
  const double u1 = 1.0 - Uniform01();  // (0, 1]
  const double u2 = Uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_normal_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

RngSeed DeriveSeed(RngSeed seed, std::uint64_t stream) {
  std::uint64_t z = seed.value + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return RngSeed{z ^ (z >> 31)};
}

double LognormalFromStandardNormal(const LognormalSpec& spec, double z) {
  return std::exp(spec.mu + spec.sigma * z);
}

std::vector<double> SampleLognormal(const LognormalSpec& spec,
                                    std::size_t count, RngSeed seed) {
  Rng rng(seed);
  return SampleLognormal(spec, count, rng);
}

std::vector<double> SampleLognormal(const LognormalSpec& spec,
                                    std::size_t count, Rng& rng) {
  spec.Validate();
  if (count == 0) {
    throw Error(ErrorCode::kInvalidInput, "sample count must be >= 1");
  }
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(LognormalFromStandardNormal(spec, rng.StandardNormal()));
  }
  return out;
}

std::vector<double> SampleUniformPositive(double low, double high,
                                          std::size_t count, Rng& rng) {
  if (!(low > 0.0) || !(high > low) || !std::isfinite(high)) {
    throw Error(ErrorCode::kInvalidSpec,
                "uniform range must satisfy 0 < low < high < inf");
  }
  if (count == 0) {
    throw Error(ErrorCode::kInvalidInput, "sample count must be >= 1");
  }
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(low + (high - low) * rng.Uniform01());
  }
  return out;
}

std::size_t SampleCategorical(std::span<const double> weights, Rng& rng) {
  double total = 0.0;
  for (double w : weights) total += w;
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kDegenerateWeights,
                "categorical weights sum to zero");
  }
  const double target = rng.Uniform01() * total;
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    cumulative += weights[i];
    last_positive = i;
    if (target < cumulative) return i;
  }
  // Rounding can leave target a hair above the running sum.
  return last_positive;
}

}  // namespace minmaxfit
