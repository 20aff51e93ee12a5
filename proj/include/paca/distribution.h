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

#ifndef PACA_DISTRIBUTION_H_
#define PACA_DISTRIBUTION_H_

#include <cstddef>
#include <string>
#include <vector>

#include "paca/interval.h"
#include "paca/rng.h"

namespace paca {

enum class NoiseKind { kGaussian, kLaplace, kUniform };

const char* NoiseKindLabel(NoiseKind kind);

// Scalar location-scale noise density with exact CDF and quantile. `scale`
// uses the conventional parameter per kind: Gaussian standard deviation,
// Laplace diversity b, Uniform half-width (width M = 2 * scale). Support is
// closed; the Uniform density is 1/M at both endpoints.
class NoiseDistribution {
 public:
  static NoiseDistribution Gaussian(double mean, double stddev);
  static NoiseDistribution Laplace(double location, double diversity);
  static NoiseDistribution Uniform(double center, double half_width);

  // The member of `kind` centered at `location` with the given variance.
  static NoiseDistribution FromVariance(NoiseKind kind, double location,
                                        double variance);

  double Density(double z) const;
  double Cumulative(double z) const;
  double Quantile(double p) const;
  double Variance() const;
  double Stddev() const;
  Interval Support() const;

  // One i.i.d. draw; consumes exactly one uniform from the stream.
  double Sample(RngStream& rng) const;

  NoiseKind kind() const { return kind_; }
  double location() const { return location_; }
  double scale() const { return scale_; }
  std::string Label() const;  // e.g. "gaussian(0,1)"

 private:
  NoiseDistribution(NoiseKind kind, double location, double scale);

  NoiseKind kind_;
  double location_;
  double scale_;
};

// n i.i.d. draws, in stream order.
std::vector<double> SampleMany(const NoiseDistribution& dist, RngStream& rng,
                               std::size_t n);

// Probability mass of dist on [y - eps, y + eps], computed from CDF
// differences. Throws std::invalid_argument for eps < 0.
double ShadedArea(const NoiseDistribution& dist, double y, double eps);

}  // namespace paca

#endif  // PACA_DISTRIBUTION_H_
