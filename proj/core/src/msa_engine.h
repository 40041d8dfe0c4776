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

#ifndef MINMAXFIT_SRC_MSA_ENGINE_H_
#define MINMAXFIT_SRC_MSA_ENGINE_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "minmaxfit/fitness.h"

namespace minmaxfit::internal {

// Segment tree over a fixed number of scores answering argmin (or argmax)
// in O(1) with O(log n) point updates. Ties resolve to the lowest index.
template <bool kMax>
class ExtremumTree {
 public:
  explicit ExtremumTree(std::size_t n) {
    capacity_ = 1;
    while (capacity_ < n) capacity_ <<= 1;
    nodes_.assign(2 * capacity_, Entry{kSentinel, 0});
    for (std::size_t i = 0; i < capacity_; ++i) nodes_[capacity_ + i].index = i;
    for (std::size_t node = capacity_ - 1; node >= 1; --node) Pull(node);
  }

  void Set(std::size_t i, double score) {
    std::size_t node = capacity_ + i;
    nodes_[node].score = score;
    for (node /= 2; node >= 1; node /= 2) Pull(node);
  }

  std::size_t Best() const { return nodes_[1].index; }
  // Best score and index among all entries other than `i`; the index is
  // out of range when there is no other entry.
  std::pair<double, std::size_t> BestExcluding(std::size_t i) const {
    Entry best{kSentinel, nodes_.size()};
    for (std::size_t node = capacity_ + i; node > 1; node /= 2) {
      const Entry& other = nodes_[node ^ 1];
      const bool better =
          (kMax ? other.score > best.score : other.score < best.score) ||
          (other.score == best.score && other.index < best.index);
      if (better) best = other;
    }
    return {best.score, best.index};
  }
  double BestScore() const { return nodes_[1].score; }
  double Score(std::size_t i) const { return nodes_[capacity_ + i].score; }

 private:
  struct Entry {
    double score;
    std::size_t index;
  };

  static constexpr double kSentinel =
      kMax ? -std::numeric_limits<double>::infinity()
           : std::numeric_limits<double>::infinity();

  void Pull(std::size_t node) {
    const Entry& left = nodes_[2 * node];
    const Entry& right = nodes_[2 * node + 1];
    const bool take_right =
        kMax ? right.score > left.score : right.score < left.score;
    nodes_[node] = take_right ? right : left;
  }

  std::size_t capacity_;
  std::vector<Entry> nodes_;
};

// State of the successive-averages iteration for one group of nodes (the
// whole population, or one tier). Averages are kept as integer counts:
// after m iterations p*_j = attach_count_j / m and q*_j = dual_count_j / m.
// The trees hold U_j * count_j, which orders nodes exactly as U_j * count_j/m.
class MsaEngine {
 public:
  explicit MsaEngine(std::span<const NodeRecord> nodes)
      : unfitness_(nodes.size()),
        attach_count_(nodes.size(), 0),
        dual_count_(nodes.size(), 0),
        exposure_(nodes.size()),
        dual_score_(nodes.size()) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      unfitness_[j] = nodes[j].unfitness();
      exposure_.Set(j, 0.0);
      // Uniform initial q*: U_j / |N| orders nodes as U_j does.
      dual_score_.Set(j, unfitness_[j]);
    }
  }

  // Step 1: node with the lowest weighted unfitness U_j q*_j.
  std::size_t LowestWeightedUnfitness() const { return dual_score_.Best(); }

  // Step 2 for the chosen node, applied `times` times.
  void AddAttachment(std::size_t j, std::int64_t times = 1) {
    attach_count_[j] += times;
    exposure_.Set(j, ExposureScore(j, attach_count_[j]));
  }

  // Step 3: node with the highest exposure p*_j U_j.
  std::size_t HighestExposure() const { return exposure_.Best(); }

  // Step 4 for the chosen node, applied `times` times.
  void AddDual(std::size_t j, std::int64_t times = 1) {
    if (!dual_initialized_) {
      // The first average (weight 1/m = 1) replaces the uniform start.
      dual_initialized_ = true;
      for (std::size_t i = 0; i < unfitness_.size(); ++i) {
        dual_score_.Set(i, 0.0);
      }
    }
    dual_count_[j] += times;
    dual_score_.Set(j, ExposureScore(j, dual_count_[j]));
  }

  // The last iteration chose `attached` in Step 1 and `dual` in Step 3.
  // Returns a number of further iterations that are certain to make the
  // same two choices without the relative gap reaching `gap_tolerance`
  // before the last of them; the caller re-checks the gap after it.
  std::int64_t RepeatCount(std::size_t attached, std::size_t dual,
                           double gap_tolerance) const {
    if (!dual_initialized_) return 0;
    return attached == dual ? RepeatSameNode(attached, gap_tolerance)
                            : RepeatDistinct(attached, dual);
  }

  // (max exposure - min weighted unfitness) / max exposure. Independent of
  // m, so it is unchanged across repeated iterations.
  double RelativeGap() const {
    const double upper = exposure_.BestScore();
    const double lower = dual_score_.BestScore();
    return upper > 0.0 ? (upper - lower) / upper : 0.0;
  }

  // Bounds after iteration m.
  double Upper(std::int64_t m) const {
    return exposure_.BestScore() / static_cast<double>(m);
  }
  double Lower(std::int64_t m) const {
    return dual_score_.BestScore() / static_cast<double>(m);
  }

  std::vector<double> AttachmentAverage(std::int64_t m) const {
    return Average(attach_count_, m);
  }
  std::vector<double> DualAverage(std::int64_t m) const {
    return Average(dual_count_, m);
  }

  std::span<const std::int64_t> attach_counts() const { return attach_count_; }
  std::span<const std::int64_t> dual_counts() const { return dual_count_; }

 private:
  static constexpr double kMaxRepeat = 4.0e18;

  // Largest t >= 0 with keeps(t), given that keeps is monotone and `estimate`
  // is close.
  template <typename Keeps>
  static std::int64_t LargestKept(double estimate, Keeps keeps) {
    std::int64_t t =
        estimate <= 0.0 ? 0
                        : static_cast<std::int64_t>(std::min(estimate, kMaxRepeat));
    while (t > 0 && !keeps(t)) --t;
    while (t < static_cast<std::int64_t>(kMaxRepeat) && keeps(t + 1)) ++t;
    return t;
  }

  // Only two scores move: the attached node's exposure and the dual node's
  // weighted unfitness. The latter only grows, so `attached` stays the
  // argmin; `dual` stays the argmax until the attached node's exposure
  // overtakes it. Both bounds stay fixed, and so does the gap.
  std::int64_t RepeatDistinct(std::size_t attached, std::size_t dual) const {
    const double target = exposure_.Score(dual);
    const std::int64_t base = attach_count_[attached];
    return LargestKept(
        std::floor(target / unfitness_[attached]) - static_cast<double>(base),
        [&](std::int64_t t) {
          const double score = ExposureScore(attached, base + t);
          return score < target || (score == target && dual < attached);
        });
  }

  // Node j is both choices. Its exposure only grows, so it stays the argmax;
  // it stays the argmin until its weighted unfitness passes the runner-up's.
  // Both bounds grow by U_j per iteration, so the gap shrinks:
  // gap(i) = (a - d) / (a + i) for counts a, d. The run is cut a couple of
  // iterations short of where that reaches the tolerance, leaving the exact
  // crossing to ordinary steps.
  std::int64_t RepeatSameNode(std::size_t j, double gap_tolerance) const {
    const auto [runner_up, runner_up_index] = dual_score_.BestExcluding(j);
    const std::int64_t a = attach_count_[j];
    const std::int64_t d = dual_count_[j];
    std::int64_t t = static_cast<std::int64_t>(kMaxRepeat);
    if (runner_up_index < unfitness_.size()) {
      // Iteration i picks j in Step 1 while U_j (d + i - 1) beats the
      // runner-up.
      t = LargestKept(std::floor(runner_up / unfitness_[j]) -
                          static_cast<double>(d) + 1.0,
                      [&](std::int64_t i) {
                        const double score = ExposureScore(j, d + i - 1);
                        return score < runner_up ||
                               (score == runner_up && j < runner_up_index);
                      });
    }
    if (RelativeGap() > gap_tolerance) {
      const double crossing =
          static_cast<double>(a - d) / gap_tolerance - static_cast<double>(a);
      const double safe = std::floor(crossing) - 2.0;
      t = safe <= 0.0 ? 0
                      : std::min(t, static_cast<std::int64_t>(
                                        std::min(safe, kMaxRepeat)));
    }
    return t;
  }

  double ExposureScore(std::size_t j, std::int64_t count) const {
    return unfitness_[j] * static_cast<double>(count);
  }

  static std::vector<double> Average(const std::vector<std::int64_t>& counts,
                                     std::int64_t m) {
    std::vector<double> out(counts.size());
    for (std::size_t j = 0; j < counts.size(); ++j) {
      out[j] = static_cast<double>(counts[j]) / static_cast<double>(m);
    }
    return out;
  }

  std::vector<double> unfitness_;
  std::vector<std::int64_t> attach_count_;
  std::vector<std::int64_t> dual_count_;
  ExtremumTree<true> exposure_;
  ExtremumTree<false> dual_score_;
  bool dual_initialized_ = false;
};

// First iteration after m on the trace schedule (see MsaOptions).
inline std::int64_t NextScheduledIteration(std::int64_t m,
                                           std::int64_t trace_stride) {
  if (trace_stride > 0) return (m / trace_stride + 1) * trace_stride;
  for (std::int64_t decade = 1;; decade *= 10) {
    for (std::int64_t step : {1, 2, 5}) {
      if (step * decade > m) return step * decade;
    }
  }
}

}  // namespace minmaxfit::internal

#endif  // MINMAXFIT_SRC_MSA_ENGINE_H_
