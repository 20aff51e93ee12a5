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

#include "paca/distribution.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace paca {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kInvSqrt2Pi = 0.39894228040143267793994605993438;
constexpr double kSqrt2 = 1.4142135623730950488016887242097;

void CheckScale(double location, double scale) {
  if (!std::isfinite(location)) {
    throw std::invalid_argument("distribution location must be finite");
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("distribution scale must be positive");
  }
}

}  // namespace

const char* NoiseKindLabel(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::kGaussian:
      return "gaussian";
    case NoiseKind::kLaplace:
      return "laplace";
    case NoiseKind::kUniform:
      return "uniform";
  }
  return "unknown";
}

NoiseDistribution::NoiseDistribution(NoiseKind kind, double location,
                                     double scale)
    : kind_(kind), location_(location), scale_(scale) {
  CheckScale(location, scale);
}

NoiseDistribution NoiseDistribution::Gaussian(double mean, double stddev) {
  return NoiseDistribution(NoiseKind::kGaussian, mean, stddev);
}

NoiseDistribution NoiseDistribution::Laplace(double location,
                                             double diversity) {
  return NoiseDistribution(NoiseKind::kLaplace, location, diversity);
}

NoiseDistribution NoiseDistribution::Uniform(double center,
                                             double half_width) {
  return NoiseDistribution(NoiseKind::kUniform, center, half_width);
}

NoiseDistribution NoiseDistribution::FromVariance(NoiseKind kind,
                                                  double location,
                                                  double variance) {
  if (!(variance > 0.0)) {
    throw std::invalid_argument("variance must be positive");
  }
  switch (kind) {
    case NoiseKind::kGaussian:
      return Gaussian(location, std::sqrt(variance));
    case NoiseKind::kLaplace:
      return Laplace(location, std::sqrt(0.5 * variance));
    case NoiseKind::kUniform:
      return Uniform(location, std::sqrt(3.0 * variance));
  }
  throw std::invalid_argument("unknown noise kind");
}

double NoiseDistribution::Density(double z) const {
  const double t = z - location_;
  switch (kind_) {
    case NoiseKind::kGaussian: {
      const double u = t / scale_;
      return kInvSqrt2Pi / scale_ * std::exp(-0.5 * u * u);
    }
    case NoiseKind::kLaplace:
      return 0.5 / scale_ * std::exp(-std::fabs(t) / scale_);
    case NoiseKind::kUniform:
      return std::fabs(t) <= scale_ ? 0.5 / scale_ : 0.0;
  }
  return 0.0;
}

double NoiseDistribution::Cumulative(double z) const {
  const double t = z - location_;
  switch (kind_) {
    case NoiseKind::kGaussian:
      return 0.5 * std::erfc(-t / (scale_ * kSqrt2));
    case NoiseKind::kLaplace:
      return t < 0.0 ? 0.5 * std::exp(t / scale_)
                     : 1.0 - 0.5 * std::exp(-t / scale_);
    case NoiseKind::kUniform: {
      if (t <= -scale_) return 0.0;
      if (t >= scale_) return 1.0;
      return 0.5 * (t / scale_ + 1.0);
    }
  }
  return 0.0;
}

double NoiseDistribution::Quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("quantile argument must be in [0, 1]");
  }
  switch (kind_) {
    case NoiseKind::kGaussian:
      return location_ + scale_ * InverseStandardNormalCdf(p);
    case NoiseKind::kLaplace:
      if (p == 0.0) return -kInf;
      if (p == 1.0) return kInf;
      return p < 0.5 ? location_ + scale_ * std::log(2.0 * p)
                     : location_ - scale_ * std::log(2.0 * (1.0 - p));
    case NoiseKind::kUniform:
      return location_ + scale_ * (2.0 * p - 1.0);
  }
  return 0.0;
}

double NoiseDistribution::Variance() const {
  switch (kind_) {
    case NoiseKind::kGaussian:
      return scale_ * scale_;
    case NoiseKind::kLaplace:
      return 2.0 * scale_ * scale_;
    case NoiseKind::kUniform:
      // Width M = 2 * scale, variance M^2 / 12.
      return scale_ * scale_ / 3.0;
  }
  return 0.0;
}

double NoiseDistribution::Stddev() const { return std::sqrt(Variance()); }

Interval NoiseDistribution::Support() const {
  if (kind_ == NoiseKind::kUniform) {
    return {location_ - scale_, location_ + scale_};
  }
  return {-kInf, kInf};
}

double NoiseDistribution::Sample(RngStream& rng) const {
  return Quantile(rng.NextUniform());
}

std::string NoiseDistribution::Label() const {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s(%g,%g)", NoiseKindLabel(kind_),
                location_, scale_);
  return buf;
}

std::vector<double> SampleMany(const NoiseDistribution& dist, RngStream& rng,
                               std::size_t n) {
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(dist.Sample(rng));
  return out;
}

double ShadedArea(const NoiseDistribution& dist, double y, double eps) {
  if (!(eps >= 0.0)) {
    throw std::invalid_argument("shaded-area half-width eps must be >= 0");
  }
  return dist.Cumulative(y + eps) - dist.Cumulative(y - eps);
}

}  // namespace paca
