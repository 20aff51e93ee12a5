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

#ifndef PACA_ESTIMATOR_H_
#define PACA_ESTIMATOR_H_

#include <string>

#include "paca/candidates.h"
#include "paca/distribution.h"
#include "paca/domain.h"
#include "paca/info_set.h"
#include "paca/trace.h"

namespace paca {

struct EstimationResult {
  double e_hat = 0.0;  // estimated theta_i(0)
  double x_hat = 0.0;  // estimated initial state, x_plus0 - e_hat
  int k = 0;
  RegimeKind regime = RegimeKind::kIndependentNoise;
  int candidate_count = 0;
  double objective = 0.0;  // shaded-area mass achieved at e_hat
};

// Key-value text record (documented keys: target, observer, k, regime,
// e_hat, x_hat, objective).
std::string ToKeyValueText(const EstimationResult& result, int target,
                           int observer);

// Maximizer of the noise density's eps-shaded area over the shifted domain
// {x_plus0 - domain}. The stationary set of the density is computed once at
// construction and reused for every Estimate call, which makes per-draw
// estimation cheap inside Monte Carlo loops.
//
// The maximization only ever evaluates the finite candidate list: stationary
// points inside the shifted domain, the midpoint of each flat stationary
// stretch intersected with it, and the shifted domain's boundary points.
// Ties (within 1e-12 of mass) resolve to the smallest candidate.
class InitialStateEstimator {
 public:
  InitialStateEstimator(const NoiseDistribution& dist0, double eps);

  EstimationResult Estimate(double x_plus0, const DomainSet& domain) const;

  const NoiseDistribution& dist0() const { return dist0_; }
  double eps() const { return eps_; }

 private:
  NoiseDistribution dist0_;
  double eps_;
  CandidateSet stationary_;  // over the whole line
};

// One-shot form of the estimator above.
EstimationResult EstimateK0(const NoiseDistribution& dist0, double x_plus0,
                            const DomainSet& domain, double eps);

// Closed-form optimal noise estimate for a symmetric unimodal zero-mode
// density and domain [-a, 0]: x_plus0 above 0 hits the left boundary, below
// -a the right boundary, and the mode otherwise.
double PiecewiseOracle(double x_plus0, double a, double eps);

// Optimal estimate given k rounds of observations, dispatched by regime:
// independent noises and partial neighborhood reduce to the k=0 estimate;
// full knowledge over a telescoping schedule conditions theta_i(0) on the
// recovered residuals (exact linear-Gaussian conditioning for Gaussian base
// noise when k < K, exact point collapse -sum(theta') for any base once
// k >= K).
EstimationResult EstimateK(const NoiseSchedule& schedule, const InfoSet& info,
                           const ResidualSequence& residuals,
                           const DomainSet& domain, double eps,
                           const KnowledgeRegime& regime);

// Hot-path overload: `k0` must wrap schedule.Theta0Distribution() and eps.
EstimationResult EstimateK(const NoiseSchedule& schedule, const InfoSet& info,
                           const ResidualSequence& residuals,
                           const DomainSet& domain, double eps,
                           const KnowledgeRegime& regime,
                           const InitialStateEstimator& k0);

// Perfect-inference attack: exact recovery of x_target(0) from a telescoping
// zero-sum trace when the observer sees all of the target's update inputs.
// Throws StateError (naming the missing outputs) when the neighborhood
// precondition fails or the trace is unsuitable.
EstimationResult AttackFullKnowledge(const Trace& trace, int observer,
                                     int target);

}  // namespace paca

#endif  // PACA_ESTIMATOR_H_
