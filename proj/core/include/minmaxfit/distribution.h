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

#ifndef MINMAXFIT_DISTRIBUTION_H_
#define MINMAXFIT_DISTRIBUTION_H_

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "minmaxfit/error.h"

namespace minmaxfit {

inline constexpr double kSimplexTolerance = 1e-9;

// A probability vector over node positions: entries >= 0, summing to one
// within kSimplexTolerance. The tag keeps primal and dual vectors apart.
template <typename Tag>
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
      throw Error(ErrorCode::kInvalidInput, "empty probability vector");
    }
    double sum = 0.0;
    for (double p : probs_) {
      if (!std::isfinite(p) || p < 0.0) {
        throw Error(ErrorCode::kInvalidInput,
                    "probabilities must be finite and non-negative");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kSimplexTolerance) {
      throw Error(ErrorCode::kInvalidInput,
                  "probabilities sum to " + std::to_string(sum) +
                      ", expected 1");
    }
  }

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> values() const { return probs_; }
  auto begin() const { return probs_.begin(); }
  auto end() const { return probs_.end(); }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<double> probs_;
};

struct AttachmentTag {};
struct DualTag {};

using AttachmentDistribution = Distribution<AttachmentTag>;
using DualDistribution = Distribution<DualTag>;

}  // namespace minmaxfit

#endif  // MINMAXFIT_DISTRIBUTION_H_
