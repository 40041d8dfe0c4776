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

#ifndef MINMAXFIT_HOMOGENEOUS_H_
#define MINMAXFIT_HOMOGENEOUS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "minmaxfit/distribution.h"
#include "minmaxfit/fitness.h"

namespace minmaxfit {

// Solution of the homogeneous min-max unfitness program:
//   minimize V  subject to  V >= p_j U_j,  sum_j p_j = 1,  p >= 0.
// `q` holds the multipliers of the V >= p_j U_j rows and `lambda` the
// multiplier of the normalization row. The sign convention for lambda is the
// one in which lambda == value >= 0 at the optimum.
struct MinmaxSolution {
  AttachmentDistribution p;
  DualDistribution q;
  double value = 0.0;
  double lambda = 0.0;
};

// Exact solution: V* = 1 / sum(phi), p_j = V* / U_j, q = p, lambda = V*.
// Throws Error(kInvalidInput) on an empty population.
MinmaxSolution ClosedFormSolution(std::span<const NodeRecord> nodes);

// Attachment proportional to fitness, p_i = phi_i / sum_j phi_j.
AttachmentDistribution ProportionalAttachment(
    std::span<const NodeRecord> nodes);

// max_j p_j U_j for a candidate p.
double MaxExposure(std::span<const NodeRecord> nodes,
                   std::span<const double> p);

// One row of an iterative-solver trace. `gap` is the absolute gap.
struct MsaRecord {
  std::int64_t iteration = 0;
  double upper = 0.0;  // max_j p*_j U_j
  double lower = 0.0;  // min_j U_j q*_j
  double gap = 0.0;
};

struct MsaSnapshot {
  std::int64_t iteration = 0;
  std::vector<double> p;
  std::vector<double> q;
};

struct MsaTrace {
  std::vector<MsaRecord> records;
  std::vector<MsaSnapshot> snapshots;
};

struct MsaOptions {
  std::int64_t max_iterations = 1'000'000;
  // Stop once (upper - lower) / upper <= gap_tolerance.
  double gap_tolerance = 1e-4;
  // 0: bounds only, recorded at iterations 1, 2, 5, 10, 20, 50, ... and at
  // the last iteration. s > 0: bounds plus p*/q* snapshots at iteration 1,
  // every multiple of s, and the last iteration.
  std::int64_t trace_stride = 0;
  // Apply runs of identical best responses in one step. Results are
  // bit-identical either way.
  bool fast_forward = true;
};

struct MsaResult {
  MinmaxSolution solution;
  MsaTrace trace;
  bool converged = false;
  std::int64_t iterations = 0;
  double relative_gap = 0.0;
};

// True when iteration `m` is on the trace schedule described in MsaOptions.
bool OnTraceSchedule(std::int64_t m, std::int64_t trace_stride);

// Method of successive averages (fictitious play of the system against the
// unfitness demon). Each iteration m:
//   1. j* = argmin_j U_j q*_j, p* <- (1/m) e_j* + (1 - 1/m) p*
//   2. j* = argmax_j p*_j U_j, q* <- (1/m) e_j* + (1 - 1/m) q*
// starting from uniform q*. Ties go to the lowest index. With uniform 1/m
// weights the averages are exactly count_j / m, which is how they are
// stored; comparisons use U_j * count_j, the same order as U_j * count_j / m.
// The result is returned whether or not the gap tolerance was reached;
// `converged` tells them apart. On non-convergence the final iterate is
// returned; it is the running average of the whole history.
MsaResult SolveMsa(std::span<const NodeRecord> nodes,
                   const MsaOptions& options);

struct KktCheck {
  std::string name;
  bool passed = true;
  double worst_violation = 0.0;
};

struct KktReport {
  std::vector<KktCheck> checks;

  bool AllPassed() const;
  const KktCheck* Find(const std::string& name) const;
};

// Raw candidate for verification; the vectors need not be valid
// distributions (that is one of the checks).
struct CandidateView {
  std::span<const double> p;
  std::span<const double> q;
  double value = 0.0;
  double lambda = 0.0;
};

// Optimality conditions of the min-max program. Checks, by name:
//   feasibility              V >= p_j U_j - tol for all j
//   complementary-slackness  q_j > tol  =>  |p_j U_j - V| <= tol
//   primal-dual-equality     |p_j - q_j| <= tol
//   lambda-equals-value      |lambda - V| <= tol
//   dual-feasibility         U_j q_j >= lambda - tol for all j
//   primal-simplex           p >= -tol, |sum p - 1| <= tol
//   dual-simplex             q >= -tol, |sum q - 1| <= tol
// A failed condition is a report entry, never an exception. Throws
// Error(kInvalidInput) only if vector lengths do not match the population.
KktReport VerifyKkt(std::span<const NodeRecord> nodes,
                    const CandidateView& candidate, double tolerance);
KktReport VerifyKkt(std::span<const NodeRecord> nodes,
                    const MinmaxSolution& candidate, double tolerance);

}  // namespace minmaxfit

#endif  // MINMAXFIT_HOMOGENEOUS_H_
