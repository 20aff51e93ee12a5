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

#ifndef PACA_PRIVACY_H_
#define PACA_PRIVACY_H_

#include <cstdint>
#include <vector>

#include "paca/distribution.h"
#include "paca/domain.h"
#include "paca/estimator.h"
#include "paca/info_set.h"
#include "paca/trace.h"

namespace paca {

// Disclosure probability for a whole-line prior: the largest eps-shaded area
// of the noise density. Equals the shaded area at the symmetry center for
// every supported kind.
double DeltaWholeLine(const NoiseDistribution& dist0, double eps);

// Noise values theta_i(0) whose k=0 optimal estimate at output x0 + theta is
// eps-accurate. Intervals are sorted; the first/last may extend to -/+
// infinity when x0 sits within eps of a domain endpoint (boundary leakage).
struct AccurateNoiseSet {
  std::vector<Interval> intervals;
};

// Requires x0 in domain and eps > 0. Whole-line priors give the closed form
// [e* - eps, e* + eps]; bounded priors are resolved by scanning the
// estimator's error map theta -> x_hat(x0 + theta) - x0 and bisecting the
// branch boundaries to 1e-12. Constant tails are extended analytically, not
// truncated.
AccurateNoiseSet ComputeAccurateNoiseSet(const NoiseDistribution& dist0,
                                         const DomainSet& domain, double x0,
                                         double eps);

// Integral of the noise density over the accurate-noise set, via CDF
// differences per interval (unbounded ends use the CDF limits).
double DeltaGeneral(const NoiseDistribution& dist0, const DomainSet& domain,
                    double x0, double eps);

// One eavesdropping scenario: who attacks whom, on what graph, under which
// schedule and knowledge regime. x0 holds every node's initial state; the
// disclosure event concerns x0[target] only.
struct McScenario {
  Graph graph;
  WeightMatrix weights;
  NoiseSchedule schedule;
  DomainSet domain;
  std::vector<double> x0;
  int target = 0;
  int observer = 1;
  int k = 0;
  RegimeKind regime = RegimeKind::kIndependentNoise;
};

struct McEstimate {
  double delta = 0.0;
  double stderr_ = 0.0;  // binomial standard error sqrt(p(1-p)/n)
  std::uint64_t n = 0;
};

// Empirical disclosure frequency over n independent seeded simulations
// (requires n >= 10^4). At k = 0 one simulation is a single theta_i(0) draw
// (nothing else of the trace reaches the estimator); for k >= 1 each sample
// runs the full pipeline: consensus trace, information set, residuals,
// regime estimator. Batches run on a small worker pool with independent
// (seed, batch) streams; the reduction is an order-independent sum, so the
// result is reproducible regardless of thread interleaving.
McEstimate DeltaMonteCarlo(const McScenario& scenario, double eps,
                           std::uint64_t n, std::uint64_t seed);

// k = 0 form without consensus machinery: draw theta, estimate, count.
McEstimate DeltaMonteCarloK0(const NoiseDistribution& dist0,
                             const DomainSet& domain, double x0, double eps,
                             std::uint64_t n, std::uint64_t seed);

// Upper bound on the iteration-k disclosure probability. Under independent
// noises, or a hidden neighbor (whose unknown output sweeps the residual
// domain over the whole line), the accurate-noise set at iteration k equals
// the k=0 set and the bound is delta(0) itself. Full knowledge admits no
// such bound; requesting it is a state error.
double DeltaUpperBoundK(const McScenario& scenario, double eps);

struct FamilyDelta {
  NoiseKind kind = NoiseKind::kGaussian;
  double scale = 0.0;  // native scale realizing the common variance
  double delta = 0.0;
  bool is_minimizer = false;
};

// Disclosure probability of each family calibrated to variance sigma^2, with
// the minimizer flagged. Uniform noise is the minimizer whenever eps <=
// sigma.
std::vector<FamilyDelta> CompareNoiseFamilies(
    double sigma, double eps, const std::vector<NoiseKind>& families);

}  // namespace paca

#endif  // PACA_PRIVACY_H_
