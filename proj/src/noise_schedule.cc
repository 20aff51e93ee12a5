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

#include "paca/noise_schedule.h"

#include <cmath>
#include <stdexcept>

namespace paca {
namespace {

void Validate(const NoiseSchedule& s) {
  if (!(s.sigma0 >= 0.0) || !std::isfinite(s.sigma0)) {
    throw std::invalid_argument("schedule sigma0 must be >= 0");
  }
  if (!(s.rho > 0.0 && s.rho < 1.0)) {
    throw std::invalid_argument("schedule rho must be in (0, 1)");
  }
  const int min_k = s.kind == ScheduleKind::kTelescopingZeroSum ? 1 : 0;
  if (s.horizon < min_k) {
    throw std::invalid_argument("schedule horizon K is too small");
  }
}

double TelescopingC(const NoiseSchedule& s) {
  return s.sigma0 / std::sqrt(1.0 + 1.0 / s.rho);
}

}  // namespace

const char* ScheduleKindLabel(ScheduleKind kind) {
  return kind == ScheduleKind::kTelescopingZeroSum ? "telescoping"
                                                   : "independent";
}

NoiseSchedule NoiseSchedule::IndependentDecaying(NoiseKind base, double sigma0,
                                                 double rho, int horizon) {
  NoiseSchedule s{ScheduleKind::kIndependentDecaying, base, sigma0, rho,
                  horizon};
  Validate(s);
  return s;
}

NoiseSchedule NoiseSchedule::TelescopingZeroSum(NoiseKind base, double sigma0,
                                                double rho, int horizon) {
  NoiseSchedule s{ScheduleKind::kTelescopingZeroSum, base, sigma0, rho,
                  horizon};
  Validate(s);
  return s;
}

NoiseDistribution NoiseSchedule::Theta0Distribution() const {
  if (silent()) {
    throw std::invalid_argument(
        "a silent schedule has no theta(0) distribution");
  }
  const double sd = kind == ScheduleKind::kTelescopingZeroSum
                        ? TelescopingC(*this)
                        : sigma0;
  return NoiseDistribution::FromVariance(base, 0.0, sd * sd);
}

double NoiseSchedule::LatentStddev(int t) const {
  if (kind != ScheduleKind::kTelescopingZeroSum) {
    throw std::invalid_argument("latent stddev only exists for telescoping");
  }
  if (t < 0 || t >= horizon) {
    throw std::invalid_argument("latent index out of range");
  }
  return TelescopingC(*this) * std::pow(rho, 0.5 * t);
}

double NoiseSchedule::ThetaVariance(int k) const {
  if (k < 0) throw std::invalid_argument("step index must be >= 0");
  if (k > horizon || silent()) return 0.0;
  if (kind == ScheduleKind::kIndependentDecaying) {
    return sigma0 * sigma0 * std::pow(rho, k);
  }
  const double c2 = TelescopingC(*this) * TelescopingC(*this);
  if (k == 0) return c2;
  if (k == horizon) return c2 * std::pow(rho, horizon - 1);
  return c2 * std::pow(rho, k - 1) * (1.0 + rho);
}

std::vector<double> TelescopeLatents(const std::vector<double>& latent) {
  if (latent.empty()) {
    throw std::invalid_argument("telescoping needs at least one latent");
  }
  const int k_max = static_cast<int>(latent.size());
  std::vector<double> theta(k_max + 1);
  theta[0] = latent[0];
  for (int k = 1; k < k_max; ++k) theta[k] = latent[k] - latent[k - 1];
  theta[k_max] = -latent[k_max - 1];
  return theta;
}

std::vector<std::vector<double>> GenerateNoise(const NoiseSchedule& schedule,
                                               int nodes, RngStream& rng) {
  Validate(schedule);
  if (nodes < 1) throw std::invalid_argument("node count must be >= 1");
  const int k_max = schedule.horizon;
  std::vector<std::vector<double>> theta(nodes,
                                         std::vector<double>(k_max + 1, 0.0));
  if (schedule.silent()) return theta;

  if (schedule.kind == ScheduleKind::kIndependentDecaying) {
    for (int i = 0; i < nodes; ++i) {
      for (int k = 0; k <= k_max; ++k) {
        const double sd = schedule.sigma0 * std::pow(schedule.rho, 0.5 * k);
        theta[i][k] =
            NoiseDistribution::FromVariance(schedule.base, 0.0, sd * sd)
                .Sample(rng);
      }
    }
    return theta;
  }

  for (int i = 0; i < nodes; ++i) {
    std::vector<double> latent(k_max);
    for (int t = 0; t < k_max; ++t) {
      const double sd = schedule.LatentStddev(t);
      latent[t] = NoiseDistribution::FromVariance(schedule.base, 0.0, sd * sd)
                      .Sample(rng);
    }
    theta[i] = TelescopeLatents(latent);
  }
  return theta;
}

}  // namespace paca
