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

#ifndef PACA_NOISE_SCHEDULE_H_
#define PACA_NOISE_SCHEDULE_H_

#include <vector>

#include "paca/distribution.h"

namespace paca {

enum class ScheduleKind { kIndependentDecaying, kTelescopingZeroSum };

const char* ScheduleKindLabel(ScheduleKind kind);

// Per-node noise sequence generator over steps k = 0..K (zero afterwards).
//
// IndependentDecaying draws theta_i(k) independently with standard deviation
// sigma0 * rho^(k/2).
//
// TelescopingZeroSum draws independent latents nu_i(t), t = 0..K-1, with
// standard deviation c * rho^(t/2) where c = sigma0 / sqrt(1 + 1/rho), and
// emits
//     theta_i(0) = nu_i(0),
//     theta_i(k) = nu_i(k) - nu_i(k-1)   for 1 <= k < K,
//     theta_i(K) = -nu_i(K-1),
// so each node's noise sums to exactly zero. The calibration makes
// Var theta_i(k) = sigma0^2 * rho^k for every interior step 1 <= k < K, and
// Var theta_i(k) <= sigma0^2 * rho^k for all 0 <= k <= K. The per-step ratio
// Var theta(k) / Var theta(k-1) equals rho exactly for 2 <= k < K; the first
// difference (k = 1) necessarily exceeds it because independent latents give
// Var theta(1) = Var nu(1) + Var nu(0) >= Var theta(0).
struct NoiseSchedule {
  ScheduleKind kind = ScheduleKind::kIndependentDecaying;
  NoiseKind base = NoiseKind::kGaussian;
  double sigma0 = 1.0;  // may be zero: a silent (noise-free) schedule
  double rho = 0.5;     // variance decay ratio, in (0, 1)
  int horizon = 1;      // truncation step K

  static NoiseSchedule IndependentDecaying(NoiseKind base, double sigma0,
                                           double rho, int horizon);
  static NoiseSchedule TelescopingZeroSum(NoiseKind base, double sigma0,
                                          double rho, int horizon);

  bool silent() const { return sigma0 == 0.0; }

  // Marginal distribution of theta_i(0); requires sigma0 > 0.
  NoiseDistribution Theta0Distribution() const;

  // Telescoping latent standard deviation c * rho^(t/2), t in [0, K).
  double LatentStddev(int t) const;

  // Analytic Var theta_i(k) of the construction; zero for k > K.
  double ThetaVariance(int k) const;
};

// Telescoping assembly: latents (nu_0..nu_{K-1}) -> (nu_0, nu_1 - nu_0, ...,
// -nu_{K-1}), K+1 values summing to exactly zero.
std::vector<double> TelescopeLatents(const std::vector<double>& latent);

// Noise tensor: out[i][k] = theta_i(k) for i in [0, nodes), k in [0, K].
// Draws are node-major, so a fixed (seed, stream) fixes the tensor.
std::vector<std::vector<double>> GenerateNoise(const NoiseSchedule& schedule,
                                               int nodes, RngStream& rng);

}  // namespace paca

#endif  // PACA_NOISE_SCHEDULE_H_
