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

#include "minmaxfit/tiered.h"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "minmaxfit/error.h"
#include "msa_engine.h"

namespace minmaxfit {
namespace {

void RequireDualsCoverTiers(const TieredPopulation& pop,
                            std::span<const DualDistribution> duals) {
  if (duals.size() != pop.num_tiers()) {
    throw Error(ErrorCode::kInvalidInput, "duals do not cover every tier");
  }
  for (std::size_t k = 0; k < pop.num_tiers(); ++k) {
    if (duals[k].size() != pop.tier(k).size()) {
      throw Error(ErrorCode::kInvalidInput,
                  "dual vector size mismatch in tier " + std::to_string(k));
    }
  }
}

double TermCost(const TieredPopulation& pop,
                std::span<const DualDistribution> duals, std::size_t k,
                std::size_t j) {
  return pop.tier(k)[j].unfitness() * duals[k][j];
}

// Sign of the exact sum of `terms`. The terms are accumulated into a
// nonoverlapping expansion with error-free additions, so two path costs
// that differ only below rounding still compare correctly.
int ExactSumSign(std::span<const double> terms) {
  std::vector<double> expansion;  // increasing magnitude, no zeros
  std::vector<double> next;
  for (double q : terms) {
    next.clear();
    for (double e : expansion) {
      const double sum = q + e;
      const double virtual_b = sum - q;
      const double error = (q - (sum - virtual_b)) + (e - virtual_b);
      if (error != 0.0) next.push_back(error);
      q = sum;
    }
    if (q != 0.0) next.push_back(q);
    expansion.swap(next);
  }
  if (expansion.empty()) return 0;
  return expansion.back() > 0.0 ? 1 : -1;
}

}  // namespace

TieredPopulation::TieredPopulation(
    std::vector<std::vector<NodeRecord>> tiers)
    : tiers_(std::move(tiers)) {
  if (tiers_.empty()) {
    throw Error(ErrorCode::kInvalidInput, "tiered population has no tiers");
  }
  for (std::size_t k = 0; k < tiers_.size(); ++k) {
    if (tiers_[k].empty()) {
      throw Error(ErrorCode::kInvalidInput,
                  "tier " + std::to_string(k) + " is empty");
    }
    std::unordered_set<std::uint64_t> seen;
    for (const NodeRecord& node : tiers_[k]) {
      if (!seen.insert(node.id()).second) {
        throw Error(ErrorCode::kInvalidInput,
                    "duplicate id " + std::to_string(node.id()) +
                        " in tier " + std::to_string(k));
      }
    }
  }
}

std::size_t TieredPopulation::num_nodes() const {
  std::size_t n = 0;
  for (const auto& tier : tiers_) n += tier.size();
  return n;
}

TieredSolution ClosedFormTiered(const TieredPopulation& pop) {
  TieredSolution solution;
  for (std::size_t k = 0; k < pop.num_tiers(); ++k) {
    MinmaxSolution tier = ClosedFormSolution(pop.tier(k));
    solution.p.push_back(std::move(tier.p));
    solution.q.push_back(std::move(tier.q));
    solution.values.push_back(tier.value);
    solution.lambdas.push_back(tier.lambda);
  }
  return solution;
}

double PathCost(const TieredPopulation& pop,
                std::span<const DualDistribution> duals,
                const PathSelection& path) {
  RequireDualsCoverTiers(pop, duals);
  double cost = 0.0;
  for (std::size_t k = 0; k < pop.num_tiers(); ++k) {
    cost += TermCost(pop, duals, k, path.nodes.at(k));
  }
  return cost;
}

PathSelection BestPath(const TieredPopulation& pop,
                       std::span<const DualDistribution> duals) {
  RequireDualsCoverTiers(pop, duals);
  PathSelection path;
  path.nodes.reserve(pop.num_tiers());
  for (std::size_t k = 0; k < pop.num_tiers(); ++k) {
    const std::span<const NodeRecord> tier = pop.tier(k);
    std::size_t best = 0;
    double best_cost = TermCost(pop, duals, k, 0);
    for (std::size_t j = 1; j < tier.size(); ++j) {
      const double cost = TermCost(pop, duals, k, j);
      if (cost < best_cost) {
        best = j;
        best_cost = cost;
      }
    }
    path.nodes.push_back(best);
  }
  return path;
}

PathSelection BruteForceBestPath(const TieredPopulation& pop,
                                 std::span<const DualDistribution> duals,
                                 std::uint64_t* paths_enumerated) {
  RequireDualsCoverTiers(pop, duals);
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < pop.num_tiers(); ++k) {
    total *= pop.tier(k).size();
    if (total > kMaxEnumeratedPaths) {
      throw Error(ErrorCode::kOracleLimit,
                  "path enumeration exceeds " +
                      std::to_string(kMaxEnumeratedPaths) + " paths");
    }
  }

  // Costs are compared exactly, not as rounded sums; otherwise paths whose
  // per-tier terms differ by an ulp could compare equal and the earlier one
  // would win regardless of which is cheaper.
  const std::size_t num_tiers = pop.num_tiers();
  PathSelection current;
  current.nodes.assign(num_tiers, 0);
  PathSelection best = current;
  std::vector<double> difference(2 * num_tiers);
  std::uint64_t count = 1;
  for (;;) {
    // Odometer increment, last tier fastest: lexicographic order.
    std::size_t k = num_tiers;
    while (k > 0) {
      --k;
      if (++current.nodes[k] < pop.tier(k).size()) break;
      current.nodes[k] = 0;
      if (k == 0) {
        k = num_tiers;  // wrapped: done
        break;
      }
    }
    if (k == num_tiers) break;
    ++count;
    for (std::size_t t = 0; t < num_tiers; ++t) {
      difference[2 * t] = TermCost(pop, duals, t, current.nodes[t]);
      difference[2 * t + 1] = -TermCost(pop, duals, t, best.nodes[t]);
    }
    if (ExactSumSign(difference) < 0) best = current;
  }
  if (paths_enumerated != nullptr) *paths_enumerated = count;
  return best;
}

TieredMsaResult SolveMsaTiered(const TieredPopulation& pop,
                               const TieredMsaOptions& options) {
  if (options.max_iterations < 1) {
    throw Error(ErrorCode::kInvalidInput, "max_iterations must be >= 1");
  }
  if (!(options.gap_tolerance > 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "gap_tolerance must be > 0");
  }
  if (options.trace_stride < 0) {
    throw Error(ErrorCode::kInvalidInput, "trace_stride must be >= 0");
  }

  const std::size_t num_tiers = pop.num_tiers();
  std::vector<internal::MsaEngine> engines;
  engines.reserve(num_tiers);
  for (std::size_t k = 0; k < num_tiers; ++k) engines.emplace_back(pop.tier(k));

  TieredMsaResult result;
  result.traces.resize(num_tiers);
  result.relative_gaps.assign(num_tiers, 0.0);
  PathSelection path;
  path.nodes.resize(num_tiers);
  std::vector<std::size_t> duals(num_tiers);
  std::int64_t m = 0;
  bool done = false;
  auto finish_iteration = [&] {
    bool all_within = true;
    for (std::size_t k = 0; k < num_tiers; ++k) {
      result.relative_gaps[k] = engines[k].RelativeGap();
      all_within = all_within && result.relative_gaps[k] <= options.gap_tolerance;
    }
    result.converged = all_within;
    done = all_within || m >= options.max_iterations;
    if (OnTraceSchedule(m, options.trace_stride) || done) {
      for (std::size_t k = 0; k < num_tiers; ++k) {
        const double upper = engines[k].Upper(m);
        const double lower = engines[k].Lower(m);
        result.traces[k].records.push_back({m, upper, lower, upper - lower});
        if (options.trace_stride > 0) {
          result.traces[k].snapshots.push_back(
              {m, engines[k].AttachmentAverage(m), engines[k].DualAverage(m)});
        }
      }
    }
  };
  while (!done) {
    ++m;
    // Step 1: separable shortest path under the current duals.
    for (std::size_t k = 0; k < num_tiers; ++k) {
      path.nodes[k] = engines[k].LowestWeightedUnfitness();
    }
    if (options.record_paths) result.paths.insert(path);
    // Step 2: h_{r*} = 1, every other h_r = 0.
    for (std::size_t k = 0; k < num_tiers; ++k) {
      engines[k].AddAttachment(path.nodes[k]);
    }
    // Steps 3 and 4, one demon per tier.
    for (std::size_t k = 0; k < num_tiers; ++k) {
      duals[k] = engines[k].HighestExposure();
      engines[k].AddDual(duals[k]);
    }
    finish_iteration();
    if (done || !options.fast_forward || m < 2) continue;

    // Repeating the same path adds nothing to R. Skipped iterations neither
    // stop the loop nor hit the trace schedule.
    std::int64_t repeats = std::min(
        options.max_iterations - m,
        internal::NextScheduledIteration(m, options.trace_stride) - m);
    for (std::size_t k = 0; k < num_tiers && repeats > 0; ++k) {
      repeats = std::min(repeats,
                         engines[k].RepeatCount(path.nodes[k], duals[k],
                                                 options.gap_tolerance));
    }
    if (repeats > 0) {
      for (std::size_t k = 0; k < num_tiers; ++k) {
        engines[k].AddAttachment(path.nodes[k], repeats);
        engines[k].AddDual(duals[k], repeats);
      }
      m += repeats;
      finish_iteration();
    }
  }

  result.iterations = m;
  for (std::size_t k = 0; k < num_tiers; ++k) {
    std::vector<double> p = engines[k].AttachmentAverage(m);
    const double value = MaxExposure(pop.tier(k), p);
    result.solution.p.emplace_back(std::move(p));
    result.solution.q.emplace_back(engines[k].DualAverage(m));
    result.solution.values.push_back(value);
    result.solution.lambdas.push_back(value);
  }
  return result;
}

std::vector<KktReport> VerifyKktTiered(const TieredPopulation& pop,
                                       const TieredCandidateView& candidate,
                                       double tolerance) {
  if (candidate.tiers.size() != pop.num_tiers()) {
    throw Error(ErrorCode::kInvalidInput,
                "candidate tier count does not match the population");
  }
  std::vector<KktReport> reports;
  reports.reserve(pop.num_tiers());
  for (std::size_t k = 0; k < pop.num_tiers(); ++k) {
    reports.push_back(VerifyKkt(pop.tier(k), candidate.tiers[k], tolerance));
  }
  return reports;
}

std::vector<KktReport> VerifyKktTiered(const TieredPopulation& pop,
                                       const TieredSolution& candidate,
                                       double tolerance) {
  TieredCandidateView view;
  for (std::size_t k = 0; k < candidate.p.size(); ++k) {
    view.tiers.push_back(CandidateView{candidate.p[k].values(),
                                       candidate.q[k].values(),
                                       candidate.values[k],
                                       candidate.lambdas[k]});
  }
  return VerifyKktTiered(pop, view, tolerance);
}

}  // namespace minmaxfit
