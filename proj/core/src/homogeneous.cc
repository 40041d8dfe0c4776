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

#include "minmaxfit/homogeneous.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "minmaxfit/error.h"
#include "msa_engine.h"

namespace minmaxfit {
namespace {

void RequireNonEmpty(std::span<const NodeRecord> nodes) {
  if (nodes.empty()) {
    throw Error(ErrorCode::kInvalidInput, "population is empty");
  }
}

}  // namespace

MinmaxSolution ClosedFormSolution(std::span<const NodeRecord> nodes) {
  RequireNonEmpty(nodes);
  const double value = 1.0 / TotalFitness(nodes);
  std::vector<double> p(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    // Every exposure p_j U_j is equalized at V*.
    p[j] = value / nodes[j].unfitness();
  }
  MinmaxSolution solution;
  solution.p = AttachmentDistribution(p);
  solution.q = DualDistribution(std::move(p));
  solution.value = value;
  solution.lambda = value;
  return solution;
}

AttachmentDistribution ProportionalAttachment(
    std::span<const NodeRecord> nodes) {
  RequireNonEmpty(nodes);
  const double total = TotalFitness(nodes);
  std::vector<double> p(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    p[i] = nodes[i].fitness() / total;
  }
  return AttachmentDistribution(std::move(p));
}

double MaxExposure(std::span<const NodeRecord> nodes,
                   std::span<const double> p) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    worst = std::max(worst, p[j] * nodes[j].unfitness());
  }
  return worst;
}

bool OnTraceSchedule(std::int64_t m, std::int64_t trace_stride) {
  if (m == 1) return true;
  if (trace_stride > 0) return m % trace_stride == 0;
  // 1-2-5 per decade.
  std::int64_t decade = 1;
  while (decade * 10 <= m) decade *= 10;
  return m == decade || m == 2 * decade || m == 5 * decade;
}

MsaResult SolveMsa(std::span<const NodeRecord> nodes,
                   const MsaOptions& options) {
  RequireNonEmpty(nodes);
  if (options.max_iterations < 1) {
    throw Error(ErrorCode::kInvalidInput, "max_iterations must be >= 1");
  }
  if (!(options.gap_tolerance > 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "gap_tolerance must be > 0");
  }
  if (options.trace_stride < 0) {
    throw Error(ErrorCode::kInvalidInput, "trace_stride must be >= 0");
  }

  internal::MsaEngine engine(nodes);
  MsaResult result;
  std::int64_t m = 0;
  bool done = false;
  auto finish_iteration = [&] {
    result.relative_gap = engine.RelativeGap();
    done = result.relative_gap <= options.gap_tolerance ||
           m >= options.max_iterations;
    if (OnTraceSchedule(m, options.trace_stride) || done) {
      const double upper = engine.Upper(m);
      const double lower = engine.Lower(m);
      result.trace.records.push_back({m, upper, lower, upper - lower});
      if (options.trace_stride > 0) {
        result.trace.snapshots.push_back(
            {m, engine.AttachmentAverage(m), engine.DualAverage(m)});
      }
    }
  };
  while (!done) {
    ++m;
    const std::size_t attached = engine.LowestWeightedUnfitness();
    engine.AddAttachment(attached);
    const std::size_t dual = engine.HighestExposure();
    engine.AddDual(dual);
    finish_iteration();
    if (done || !options.fast_forward || m < 2) continue;

    // Skipped iterations neither stop the loop nor hit the trace schedule.
    const std::int64_t repeats = std::min(
        {engine.RepeatCount(attached, dual, options.gap_tolerance),
         options.max_iterations - m,
         internal::NextScheduledIteration(m, options.trace_stride) - m});
    if (repeats > 0) {
      engine.AddAttachment(attached, repeats);
      engine.AddDual(dual, repeats);
      m += repeats;
      finish_iteration();
    }
  }

  result.converged = result.relative_gap <= options.gap_tolerance;
  result.iterations = m;
  std::vector<double> p = engine.AttachmentAverage(m);
  const double value = MaxExposure(nodes, p);
  result.solution.p = AttachmentDistribution(std::move(p));
  result.solution.q = DualDistribution(engine.DualAverage(m));
  result.solution.value = value;
  result.solution.lambda = value;
  return result;
}

bool KktReport::AllPassed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const KktCheck& c) { return c.passed; });
}

const KktCheck* KktReport::Find(const std::string& name) const {
  for (const KktCheck& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

// Records a violation amount; the check fails once it exceeds the tolerance.
class CheckBuilder {
 public:
  CheckBuilder(std::string name, double tolerance)
      : check_{std::move(name), true, 0.0}, tolerance_(tolerance) {}

  void Violation(double amount) {
    if (std::isnan(amount)) amount = std::numeric_limits<double>::infinity();
    check_.worst_violation = std::max(check_.worst_violation, amount);
    if (amount > tolerance_) check_.passed = false;
  }

  KktCheck Done() const { return check_; }

 private:
  KktCheck check_;
  double tolerance_;
};

KktCheck SimplexCheck(std::string name, std::span<const double> v,
                      double tolerance) {
  CheckBuilder check(std::move(name), tolerance);
  double sum = 0.0;
  for (double x : v) {
    check.Violation(-x);
    sum += x;
  }
  check.Violation(std::abs(sum - 1.0));
  return check.Done();
}

}  // namespace

KktReport VerifyKkt(std::span<const NodeRecord> nodes,
                    const CandidateView& candidate, double tolerance) {
  if (candidate.p.size() != nodes.size() ||
      candidate.q.size() != nodes.size()) {
    throw Error(ErrorCode::kInvalidInput,
                "candidate size does not match the population");
  }
  const double v = candidate.value;
  CheckBuilder feasibility("feasibility", tolerance);
  CheckBuilder slackness("complementary-slackness", tolerance);
  CheckBuilder equality("primal-dual-equality", tolerance);
  CheckBuilder dual_feasibility("dual-feasibility", tolerance);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double u = nodes[j].unfitness();
    const double exposure = candidate.p[j] * u;
    feasibility.Violation(exposure - v);
    if (candidate.q[j] > tolerance) {
      slackness.Violation(std::abs(exposure - v));
    }
    equality.Violation(std::abs(candidate.p[j] - candidate.q[j]));
    dual_feasibility.Violation(candidate.lambda - u * candidate.q[j]);
  }
  CheckBuilder lambda_check("lambda-equals-value", tolerance);
  lambda_check.Violation(std::abs(candidate.lambda - v));

  KktReport report;
  report.checks = {feasibility.Done(),
                   slackness.Done(),
                   equality.Done(),
                   lambda_check.Done(),
                   dual_feasibility.Done(),
                   SimplexCheck("primal-simplex", candidate.p, tolerance),
                   SimplexCheck("dual-simplex", candidate.q, tolerance)};
  return report;
}

KktReport VerifyKkt(std::span<const NodeRecord> nodes,
                    const MinmaxSolution& candidate, double tolerance) {
  return VerifyKkt(nodes,
                   CandidateView{candidate.p.values(), candidate.q.values(),
                                 candidate.value, candidate.lambda},
                   tolerance);
}

}  // namespace minmaxfit
