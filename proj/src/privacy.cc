//
// Copyright 2026 The PACA Authors
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
//

#include "paca/privacy.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

#include "paca/candidates.h"
#include "paca/errors.h"

namespace paca {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEdgeTol = 1e-12;
constexpr std::uint64_t kMcBatch = 1 << 16;
constexpr std::uint64_t kMcMinSamples = 10000;

// Boundary between an accurate and an inaccurate region of the error map.
double BisectTransition(const std::function<bool(double)>& accurate, double a,
                        bool state_a, double b) {
  for (int i = 0; i < 200 && b - a > kEdgeTol; ++i) {
    const double m = 0.5 * (a + b);
    if (accurate(m) == state_a) {
      a = m;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Shared batching loop: `sample` consumes one stream and reports success.
McEstimate RunBatches(std::uint64_t n, std::uint64_t seed,
                      const std::function<std::uint64_t(
                          RngStream&, std::uint64_t)>& count_batch) {
  if (n < kMcMinSamples) {
    throw std::invalid_argument("Monte Carlo needs at least 10^4 samples");
  }
  const std::uint64_t batches = (n + kMcBatch - 1) / kMcBatch;
  std::vector<std::uint64_t> counts(batches, 0);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&]() {
    for (;;) {
      const std::uint64_t b = next.fetch_add(1);
      if (b >= batches) return;
      const std::uint64_t m = std::min(kMcBatch, n - b * kMcBatch);
      RngStream rng(seed, b);
      counts[b] = count_batch(rng, m);
    }
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = static_cast<unsigned>(
      std::min<std::uint64_t>(std::min(hw, 8u), batches));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::uint64_t successes = 0;
  for (std::uint64_t c : counts) successes += c;
  McEstimate est;
  est.n = n;
  est.delta = static_cast<double>(successes) / static_cast<double>(n);
  est.stderr_ = std::sqrt(est.delta * (1.0 - est.delta) /
                          static_cast<double>(n));
  return est;
}

KnowledgeRegime BuildRegime(const McScenario& s) {
  switch (s.regime) {
    case RegimeKind::kIndependentNoise:
      return KnowledgeRegime::Independent();
    case RegimeKind::kPartialNeighborhood:
      return KnowledgeRegime::Partial();
    case RegimeKind::kFullKnowledge:
      return KnowledgeRegime::Full(s.graph, s.weights, s.target, s.observer);
  }
  throw std::invalid_argument("unknown regime");
}

}  // namespace

double DeltaWholeLine(const NoiseDistribution& dist0, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  const CandidateSet stationary =
      StationarySet(dist0, eps, DomainSet::WholeLine());
  double best = 0.0;
  for (double p : stationary.points) {
    best = std::max(best, ShadedArea(dist0, p, eps));
  }
  for (const Interval& flat : stationary.intervals) {
    best = std::max(best, ShadedArea(dist0, flat.Midpoint(), eps));
  }
  return best;
}

AccurateNoiseSet ComputeAccurateNoiseSet(const NoiseDistribution& dist0,
                                         const DomainSet& domain, double x0,
                                         double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  if (!domain.Contains(x0)) {
    throw std::invalid_argument("x0 must lie in the domain");
  }
  const InitialStateEstimator estimator(dist0, eps);

  if (domain.whole_line()) {
    // The estimate of theta is constant in x_plus, so accuracy is exactly
    // |theta - e*| <= eps.
    const double e_star = estimator.Estimate(0.0, domain).e_hat;
    return {{Interval{e_star - eps, e_star + eps}}};
  }

  const std::function<bool(double)> accurate = [&](double th) {
    return std::fabs(estimator.Estimate(x0 + th, domain).x_hat - x0) <= eps;
  };

  // Beyond the scan window the argmax tracks a fixed domain endpoint and the
  // estimation error is constant, so the endpoint states decide the tails.
  const double pad = 8.0 * dist0.Stddev() + eps + 1.0;
  const double t_lo = domain.intervals().front().lo - x0 - pad;
  const double t_hi = domain.intervals().back().hi - x0 + pad;
  const double span = t_hi - t_lo;
  const std::size_t grid = std::max<std::size_t>(
      4096, std::min<std::size_t>(1 << 20,
                                  static_cast<std::size_t>(span * 8.0 / eps)));

  std::vector<double> ts(grid + 1);
  std::vector<char> state(grid + 1);
  for (std::size_t i = 0; i <= grid; ++i) {
    ts[i] = (i == grid) ? t_hi : t_lo + span * static_cast<double>(i) / grid;
    state[i] = accurate(ts[i]) ? 1 : 0;
  }

  AccurateNoiseSet set;
  std::size_t i = 0;
  while (i <= grid) {
    if (!state[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 <= grid && state[j + 1]) ++j;
    double lo = ts[i];
    double hi = ts[j];
    if (i > 0) lo = BisectTransition(accurate, ts[i - 1], false, ts[i]);
    if (j < grid) hi = BisectTransition(accurate, ts[j], true, ts[j + 1]);
    if (i == 0) lo = -kInf;
    if (j == grid) hi = kInf;
    set.intervals.push_back(Interval{lo, hi});
    i = j + 1;
  }
  return set;
}

double DeltaGeneral(const NoiseDistribution& dist0, const DomainSet& domain,
                    double x0, double eps) {
  const AccurateNoiseSet set =
      ComputeAccurateNoiseSet(dist0, domain, x0, eps);
  double mass = 0.0;
  for (const Interval& iv : set.intervals) {
    const double hi = std::isinf(iv.hi) ? 1.0 : dist0.Cumulative(iv.hi);
    const double lo = std::isinf(iv.lo) ? 0.0 : dist0.Cumulative(iv.lo);
    mass += hi - lo;
  }
  return std::clamp(mass, 0.0, 1.0);
}

McEstimate DeltaMonteCarloK0(const NoiseDistribution& dist0,
                             const DomainSet& domain, double x0, double eps,
                             std::uint64_t n, std::uint64_t seed) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  if (!domain.Contains(x0)) {
    throw std::invalid_argument("x0 must lie in the domain");
  }
  const InitialStateEstimator estimator(dist0, eps);
  return RunBatches(n, seed, [&](RngStream& rng, std::uint64_t m) {
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < m; ++s) {
      const double theta = dist0.Sample(rng);
      const auto est = estimator.Estimate(x0 + theta, domain);
      if (std::fabs(est.x_hat - x0) <= eps) ++hits;
    }
    return hits;
  });
}

McEstimate DeltaMonteCarlo(const McScenario& scenario, double eps,
                           std::uint64_t n, std::uint64_t seed) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  if (scenario.x0.size() != static_cast<std::size_t>(scenario.graph.n())) {
    throw std::invalid_argument("x0 length does not match the graph");
  }
  const double x0_target = scenario.x0[scenario.target];
  if (!scenario.domain.Contains(x0_target)) {
    throw std::invalid_argument("x0 of the target must lie in the domain");
  }
  const NoiseDistribution dist0 = scenario.schedule.Theta0Distribution();
  if (scenario.k == 0) {
    return DeltaMonteCarloK0(dist0, scenario.domain, x0_target, eps, n, seed);
  }

  const KnowledgeRegime regime = BuildRegime(scenario);
  const InitialStateEstimator estimator(dist0, eps);
  const int run_T = std::max(scenario.k, scenario.schedule.horizon);

  return RunBatches(n, seed, [&](RngStream& rng, std::uint64_t m) {
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < m; ++s) {
      const Trace trace = RunPaca(scenario.graph, scenario.weights,
                                  scenario.x0, scenario.schedule, run_T, rng);
      const InfoSet info =
          ExtractInfoSet(trace, scenario.observer, scenario.target,
                         scenario.k);
      const ResidualSequence residuals = ComputeResiduals(info, regime);
      const EstimationResult est = EstimateK(
          scenario.schedule, info, residuals, scenario.domain, eps, regime,
          estimator);
      if (std::fabs(est.x_hat - x0_target) <= eps) ++hits;
    }
    return hits;
  });
}

double DeltaUpperBoundK(const McScenario& scenario, double eps) {
  if (scenario.regime == RegimeKind::kFullKnowledge) {
    throw StateError(
        "no closed accurate-noise set exists under full knowledge; the "
        "disclosure probability reaches 1 at the schedule horizon");
  }
  const NoiseDistribution dist0 = scenario.schedule.Theta0Distribution();
  if (scenario.domain.whole_line()) {
    return DeltaWholeLine(dist0, eps);
  }
  return DeltaGeneral(dist0, scenario.domain, scenario.x0[scenario.target],
                      eps);
}

std::vector<FamilyDelta> CompareNoiseFamilies(
    double sigma, double eps, const std::vector<NoiseKind>& families) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  if (families.empty()) {
    throw std::invalid_argument("the families list is empty");
  }
  std::vector<FamilyDelta> rows;
  rows.reserve(families.size());
  for (NoiseKind kind : families) {
    const NoiseDistribution dist =
        NoiseDistribution::FromVariance(kind, 0.0, sigma * sigma);
    rows.push_back({kind, dist.scale(), DeltaWholeLine(dist, eps), false});
  }
  const double min_delta =
      std::min_element(rows.begin(), rows.end(),
                       [](const FamilyDelta& a, const FamilyDelta& b) {
                         return a.delta < b.delta;
                       })
          ->delta;
  for (FamilyDelta& row : rows) row.is_minimizer = row.delta == min_delta;
  return rows;
}

}  // namespace paca
