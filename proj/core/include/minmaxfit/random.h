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

#ifndef MINMAXFIT_RANDOM_H_
#define MINMAXFIT_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "minmaxfit/fitness.h"

namespace minmaxfit {

struct RngSeed {
  std::uint64_t value = 0;
};

// Seedable generator whose output is fully specified, so sample sequences
// are reproducible across standard libraries:
//   * raw bits come from std::mt19937_64, whose sequence the C++ standard
//     pins down exactly;
//   * Uniform01() takes the top 53 bits of one draw, giving k * 2^-53;
//   * StandardNormal() is the Box-Muller transform on two uniforms
//     (u1 mapped into (0, 1]), returning the cosine branch first and caching
//     the sine branch for the next call.
// The std:: distribution classes are avoided because their algorithms are
// implementation-defined.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/box-muller";
  static constexpr int kVersion = 1;

  explicit Rng(RngSeed seed) : engine_(seed.value) {}

  std::uint64_t NextBits() { return engine_(); }
  double Uniform01();
  double StandardNormal();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

// Derives an independent stream seed from (seed, stream) via splitmix64.
RngSeed DeriveSeed(RngSeed seed, std::uint64_t stream);

// exp(mu + sigma * z); exposed so tests can tie draws to the normal source.
double LognormalFromStandardNormal(const LognormalSpec& spec, double z);

// `count` draws from the log-normal law. Throws Error(kInvalidSpec) for a bad
// spec and Error(kInvalidInput) for count == 0.
std::vector<double> SampleLognormal(const LognormalSpec& spec,
                                    std::size_t count, RngSeed seed);
std::vector<double> SampleLognormal(const LognormalSpec& spec,
                                    std::size_t count, Rng& rng);

// Uniform draws on [low, high) with 0 < low < high.
std::vector<double> SampleUniformPositive(double low, double high,
                                          std::size_t count, Rng& rng);

// Inverse-CDF draw from a categorical distribution given by non-negative
// weights that need not be normalized. Returns the first index whose
// cumulative weight exceeds u * total.
std::size_t SampleCategorical(std::span<const double> weights, Rng& rng);

}  // namespace minmaxfit

#endif  // MINMAXFIT_RANDOM_H_
