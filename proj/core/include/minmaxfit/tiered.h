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

#ifndef MINMAXFIT_TIERED_H_
#define MINMAXFIT_TIERED_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "minmaxfit/distribution.h"
#include "minmaxfit/fitness.h"
#include "minmaxfit/homogeneous.h"

namespace minmaxfit {

// Ordered tiers of nodes (tier 0 is the most upstream). A path, or supply
// chain, picks exactly one node from every tier; the shared origin and
// destination are implicit and carry no fitness.
class TieredPopulation {
 public:
  // Throws Error(kInvalidInput) if there are no tiers, a tier is empty, or
  // ids repeat within a tier.
  explicit TieredPopulation(std::vector<std::vector<NodeRecord>> tiers);

  std::size_t num_tiers() const { return tiers_.size(); }
  std::span<const NodeRecord> tier(std::size_t k) const { return tiers_[k]; }
  const std::vector<std::vector<NodeRecord>>& tiers() const { return tiers_; }
  std::size_t num_nodes() const;

  friend bool operator==(const TieredPopulation&,
                         const TieredPopulation&) = default;

 private:
  std::vector<std::vector<NodeRecord>> tiers_;
};

// One node per tier, stored as the node's position within its tier.
struct PathSelection {
  std::vector<std::size_t> nodes;

  friend auto operator<=>(const PathSelection&,
                          const PathSelection&) = default;
};

// Set R of paths returned by best-path steps, ordered for determinism.
using DiscoveredPathSet = std::set<PathSelection>;

struct TieredSolution {
  std::vector<AttachmentDistribution> p;
  std::vector<DualDistribution> q;
  std::vector<double> values;
  std::vector<double> lambdas;
};

// The tiered program separates into one homogeneous problem per tier:
// p_ik = phi_ik / sum_j phi_jk, V_k = 1 / sum_j phi_jk, q = p, lambda = V.
TieredSolution ClosedFormTiered(const TieredPopulation& pop);

// sum_k U_{choice_k,k} q_{choice_k,k}.
double PathCost(const TieredPopulation& pop,
                std::span<const DualDistribution> duals,
                const PathSelection& path);

// Least weighted-unfitness path. The cost is a sum of per-tier terms, so the
// shortest path through the layered graph is the per-tier argmin of
// U_jk q_jk; no path is enumerated. Ties go to the lowest position per tier.
PathSelection BestPath(const TieredPopulation& pop,
                       std::span<const DualDistribution> duals);

inline constexpr std::uint64_t kMaxEnumeratedPaths = 1'000'000;

// Test oracle: enumerates every path in lexicographic order and keeps the
// first one of minimum cost, comparing exact (unrounded) sums of the per-tier
// terms. Throws Error(kOracleLimit) when the path count
// exceeds kMaxEnumeratedPaths. `paths_enumerated`, if given, receives |R|.
PathSelection BruteForceBestPath(const TieredPopulation& pop,
                                 std::span<const DualDistribution> duals,
                                 std::uint64_t* paths_enumerated = nullptr);

struct TieredMsaOptions {
  std::int64_t max_iterations = 1'000'000;
  double gap_tolerance = 1e-4;
  std::int64_t trace_stride = 0;
  // Keep the set of discovered paths. Bounded by prod_k |N_k|.
  bool record_paths = true;
  // As in MsaOptions; results are bit-identical either way.
  bool fast_forward = true;
};

struct TieredMsaResult {
  TieredSolution solution;
  std::vector<MsaTrace> traces;  // one per tier
  DiscoveredPathSet paths;
  bool converged = false;
  std::int64_t iterations = 0;
  std::vector<double> relative_gaps;  // per tier
};

// Successive averages for tiered networks. Each iteration m:
//   1. r* = least weighted-unfitness path under q*, R <- R + {r*}
//   2. p*_jk <- (1/m) [j on r*] + (1 - 1/m) p*_jk
//   3. per tier, j* = argmax_j p*_jk U_jk
//   4. q*_jk <- (1/m) [j == j*] + (1 - 1/m) q*_jk
// Stops when every tier's relative gap is within tolerance or at
// max_iterations.
TieredMsaResult SolveMsaTiered(const TieredPopulation& pop,
                               const TieredMsaOptions& options);

struct TieredCandidateView {
  std::vector<CandidateView> tiers;
};

// The homogeneous checks applied independently to each tier.
std::vector<KktReport> VerifyKktTiered(const TieredPopulation& pop,
                                       const TieredCandidateView& candidate,
                                       double tolerance);
std::vector<KktReport> VerifyKktTiered(const TieredPopulation& pop,
                                       const TieredSolution& candidate,
                                       double tolerance);

}  // namespace minmaxfit

#endif  // MINMAXFIT_TIERED_H_
