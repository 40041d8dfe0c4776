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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace minmaxfit::testing {

std::vector<double> ProportionalOracle(std::span<const double> fitness) {
  long double total = 0.0L;
  for (double f : fitness) total += f;
  std::vector<double> p;
  for (double f : fitness) p.push_back(static_cast<double>(f / total));
  return p;
}

double SimplexGridMinimum(const std::array<double, 3>& unfitness,
                          int resolution) {
  double best = std::numeric_limits<double>::infinity();
  const double r = resolution;
  for (int a = 0; a <= resolution; ++a) {
    for (int b = 0; a + b <= resolution; ++b) {
      const int c = resolution - a - b;
      const double worst = std::max({a / r * unfitness[0], b / r * unfitness[1],
                                     c / r * unfitness[2]});
      best = std::min(best, worst);
    }
  }
  return best;
}

ReferenceMsaRun ReferenceMsa(std::span<const double> unfitness,
                             std::int64_t iterations) {
  const std::size_t n = unfitness.size();
  ReferenceMsaRun run;
  run.p.assign(n, 1.0 / static_cast<double>(n));
  run.q.assign(n, 1.0 / static_cast<double>(n));
  run.attach_hits.assign(n, 0);
  run.dual_hits.assign(n, 0);
  for (std::int64_t m = 1; m <= iterations; ++m) {
    const double step = 1.0 / static_cast<double>(m);
    std::size_t argmin = 0;
    for (std::size_t j = 1; j < n; ++j) {
      if (unfitness[j] * run.q[j] < unfitness[argmin] * run.q[argmin]) {
        argmin = j;
      }
    }
    ++run.attach_hits[argmin];
    for (std::size_t j = 0; j < n; ++j) {
      run.p[j] = (j == argmin ? step : 0.0) + (1.0 - step) * run.p[j];
    }
    std::size_t argmax = 0;
    for (std::size_t j = 1; j < n; ++j) {
      if (run.p[j] * unfitness[j] > run.p[argmax] * unfitness[argmax]) {
        argmax = j;
      }
    }
    ++run.dual_hits[argmax];
    for (std::size_t j = 0; j < n; ++j) {
      run.q[j] = (j == argmax ? step : 0.0) + (1.0 - step) * run.q[j];
    }
    double upper = 0.0;
    double lower = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      upper = std::max(upper, run.p[j] * unfitness[j]);
      lower = std::min(lower, unfitness[j] * run.q[j]);
    }
    run.upper.push_back(upper);
    run.lower.push_back(lower);
  }
  return run;
}

namespace {

void Enumerate(const std::vector<std::vector<double>>& cost, std::size_t k,
               std::vector<std::size_t>& current, double partial,
               std::vector<std::size_t>& best, double& best_cost) {
  if (k == cost.size()) {
    if (partial < best_cost) {
      best_cost = partial;
      best = current;
    }
    return;
  }
  for (std::size_t j = 0; j < cost[k].size(); ++j) {
    current[k] = j;
    Enumerate(cost, k + 1, current, partial + cost[k][j], best, best_cost);
  }
}

std::vector<double> AverageRanks(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(x.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && x[order[j + 1]] == x[order[i]]) ++j;
    const double rank = (static_cast<double>(i + j) / 2.0) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

std::vector<std::size_t> EnumerateCheapestPath(
    const std::vector<std::vector<double>>& cost) {
  std::vector<std::size_t> current(cost.size(), 0);
  std::vector<std::size_t> best;
  double best_cost = std::numeric_limits<double>::infinity();
  Enumerate(cost, 0, current, 0.0, best, best_cost);
  return best;
}

double SpearmanRho(std::span<const double> x, std::span<const double> y) {
  const std::vector<double> rx = AverageRanks(x);
  const std::vector<double> ry = AverageRanks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

double BinomialThreeSigma(double p, std::uint64_t n) {
  return 3.0 * std::sqrt(static_cast<double>(n) * p * (1.0 - p));
}

std::vector<double> MixedFitness(Rng& rng, std::size_t count) {
  std::vector<double> out;
  switch (rng.NextBits() % 4) {
    case 0: {
      const double sigma = 3.0 * rng.Uniform01();
      for (std::size_t i = 0; i < count; ++i) {
        out.push_back(std::exp(sigma * rng.StandardNormal()));
      }
      break;
    }
    case 1:
      for (std::size_t i = 0; i < count; ++i) {
        out.push_back(0.01 + 100.0 * rng.Uniform01());
      }
      break;
    case 2:
      for (std::size_t i = 0; i < count; ++i) {
        out.push_back(static_cast<double>(1 + rng.NextBits() % 5));
      }
      break;
    default:
      out.assign(count, 0.5 + rng.Uniform01());
      break;
  }
  return out;
}

TieredPopulation RandomTiered(Rng& rng, std::span<const std::size_t> sizes) {
  std::vector<std::vector<NodeRecord>> tiers;
  for (std::size_t size : sizes) {
    std::vector<NodeRecord> tier;
    for (double f : MixedFitness(rng, size)) {
      tier.emplace_back(tier.size(), f);
    }
    tiers.push_back(std::move(tier));
  }
  return TieredPopulation(std::move(tiers));
}

std::vector<double> RandomSimplexPoint(Rng& rng, std::size_t size) {
  std::vector<double> x(size);
  double total = 0.0;
  for (double& v : x) {
    v = -std::log(1.0 - rng.Uniform01());
    total += v;
  }
  for (double& v : x) v /= total;
  return x;
}

}  // namespace minmaxfit::testing
