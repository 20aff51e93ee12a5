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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "paca/candidates.h"
#include "paca/distribution.h"
#include "paca/domain.h"
#include "paca/rng.h"
#include "support/test_oracles.h"

using namespace paca;

namespace {

const NoiseDistribution kStdGaussian = NoiseDistribution::Gaussian(0.0, 1.0);
const NoiseDistribution kStdLaplace = NoiseDistribution::Laplace(0.0, 1.0);
const NoiseDistribution kUnitUniform = NoiseDistribution::Uniform(0.0, 1.0);

}  // namespace

TEST_CASE("density point values") {
  CHECK(kStdGaussian.Density(0.0) ==
        doctest::Approx(0.39894228040143267).epsilon(1e-12));
  CHECK(kUnitUniform.Density(0.5) == 0.5);
  CHECK(kUnitUniform.Density(1.0) == 0.5);  // support is closed
  CHECK(kUnitUniform.Density(1.0000001) == 0.0);
  CHECK(kStdLaplace.Density(0.0) == 0.5);
}

TEST_CASE("cumulative point values and monotonicity") {
  CHECK(kStdGaussian.Cumulative(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(kUnitUniform.Cumulative(-1.0) == 0.0);
  CHECK(kStdLaplace.Cumulative(1.0) ==
        doctest::Approx(0.8160602794142788).epsilon(1e-12));

  for (const auto& dist : {kStdGaussian, kStdLaplace, kUnitUniform}) {
    double prev = 0.0;
    for (double z = -12.0; z <= 12.0; z += 0.05) {
      const double F = dist.Cumulative(z);
      CHECK(F >= prev - 1e-15);
      CHECK(F >= 0.0);
      CHECK(F <= 1.0);
      prev = F;
    }
    CHECK(dist.Cumulative(-1e308) == doctest::Approx(0.0));
    CHECK(dist.Cumulative(1e308) == doctest::Approx(1.0));
  }
}

TEST_CASE("variance closed forms and quadrature normalization") {
  CHECK(NoiseDistribution::Gaussian(0.3, 2.0).Variance() == 4.0);
  CHECK(kStdLaplace.Variance() == 2.0);
  CHECK(kUnitUniform.Variance() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  for (const auto& dist : {kStdGaussian, kStdLaplace, kUnitUniform}) {
    const Interval support = dist.Support();
    const double lo = std::isinf(support.lo) ? -40.0 * dist.Stddev()
                                             : support.lo;
    const double hi = std::isinf(support.hi) ? 40.0 * dist.Stddev()
                                             : support.hi;
    const double mass = testing::AdaptiveSimpson(
        [&](double z) { return dist.Density(z); }, lo, hi);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("variance calibration helper") {
  for (NoiseKind kind :
       {NoiseKind::kGaussian, NoiseKind::kLaplace, NoiseKind::kUniform}) {
    const auto dist = NoiseDistribution::FromVariance(kind, 0.0, 1.7);
    CHECK(dist.Variance() == doctest::Approx(1.7).epsilon(1e-12));
  }
  CHECK_THROWS_AS(NoiseDistribution::Gaussian(0.0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(NoiseDistribution::Uniform(0.0, -1.0),
                  std::invalid_argument);
}

TEST_CASE("shaded area examples") {
  CHECK(ShadedArea(kStdGaussian, 0.0, 0.5) ==
        doctest::Approx(0.3829249225480262).epsilon(1e-12));
  CHECK(ShadedArea(kUnitUniform, 0.0, 0.1) ==
        doctest::Approx(0.1).epsilon(1e-12));
  CHECK(ShadedArea(kStdLaplace, 0.0, 0.0) == 0.0);
  CHECK(ShadedArea(kStdGaussian, 1.3, 0.0) == 0.0);
  CHECK_THROWS_AS(ShadedArea(kStdGaussian, 0.0, -0.1), std::invalid_argument);

  // Nondecreasing in eps.
  double prev = 0.0;
  for (double eps = 0.0; eps <= 3.0; eps += 0.05) {
    const double area = ShadedArea(kStdLaplace, 0.7, eps);
    CHECK(area >= prev - 1e-15);
    prev = area;
  }
}

TEST_CASE("shaded area matches quadrature on a random grid") {
  RngStream rng(20260810, 1);
  for (const auto& dist : {kStdGaussian, kStdLaplace, kUnitUniform}) {
    const Interval support = dist.Support();
    std::vector<double> breaks;
    if (std::isfinite(support.lo)) breaks.push_back(support.lo);
    if (std::isfinite(support.hi)) breaks.push_back(support.hi);
    for (int i = 0; i < 100; ++i) {
      const double y = 6.0 * (rng.NextUniform() - 0.5);
      const double eps = 0.02 + rng.NextUniform();
      const double by_quadrature = testing::AdaptiveSimpsonSplit(
          [&](double z) { return dist.Density(z); }, y - eps, y + eps,
          breaks);
      CHECK(ShadedArea(dist, y, eps) ==
            doctest::Approx(by_quadrature).scale(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("stationary set: symmetric unimodal kinds give the center") {
  for (double sigma : {0.5, 1.0, 2.5}) {
    const auto gauss = NoiseDistribution::Gaussian(0.0, sigma);
    const auto set = StationarySet(gauss, 0.3, DomainSet::WholeLine());
    REQUIRE(set.points.size() == 1);
    CHECK(std::fabs(set.points[0]) < 1e-11);
    CHECK(set.intervals.empty());
  }
  const auto laplace_set =
      StationarySet(kStdLaplace, 0.25, DomainSet::WholeLine());
  REQUIRE(laplace_set.points.size() == 1);
  CHECK(std::fabs(laplace_set.points[0]) < 1e-11);

  // Shifted location follows the distribution.
  const auto shifted = NoiseDistribution::Gaussian(1.75, 0.5);
  const auto set = StationarySet(shifted, 0.1, DomainSet::WholeLine());
  REQUIRE(set.points.size() == 1);
  CHECK(set.points[0] == doctest::Approx(1.75).epsilon(1e-10));
}

TEST_CASE("stationary set: uniform density yields one flat interval") {
  const auto set = StationarySet(kUnitUniform, 0.1, DomainSet::WholeLine());
  CHECK(set.points.empty());
  REQUIRE(set.intervals.size() == 1);
  CHECK(set.intervals[0].lo == doctest::Approx(-0.9).epsilon(1e-9));
  CHECK(set.intervals[0].hi == doctest::Approx(0.9).epsilon(1e-9));

  // eps wider than the support: the full-mass plateau around the center.
  const auto wide = StationarySet(kUnitUniform, 1.5, DomainSet::WholeLine());
  REQUIRE(wide.intervals.size() == 1);
  CHECK(wide.intervals[0].lo == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(wide.intervals[0].hi == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(ShadedArea(kUnitUniform, wide.intervals[0].Midpoint(), 1.5) ==
        doctest::Approx(1.0));
}

TEST_CASE("stationary set respects the search region") {
  const auto within = DomainSet::SingleInterval(0.5, 3.0);
  const auto set = StationarySet(kStdGaussian, 0.2, within);
  CHECK(set.points.empty());  // the only root (0) is outside
  CHECK(set.intervals.empty());

  const auto straddling = DomainSet::SingleInterval(-1.0, 1.0);
  const auto set2 = StationarySet(kStdGaussian, 0.2, straddling);
  REQUIRE(set2.points.size() == 1);
  CHECK(std::fabs(set2.points[0]) < 1e-11);

  const auto uniform_cut = DomainSet::SingleInterval(-0.5, 0.2);
  const auto set3 = StationarySet(kUnitUniform, 0.1, uniform_cut);
  REQUIRE(set3.intervals.size() == 1);
  CHECK(set3.intervals[0].lo == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(set3.intervals[0].hi == doctest::Approx(0.2).epsilon(1e-9));
}

TEST_CASE("dense grid maximum of the shaded area sits on the stationary set") {
  RngStream rng(42, 7);
  for (int trial = 0; trial < 20; ++trial) {
    const int pick = trial % 3;
    const double scale = 0.4 + 2.0 * rng.NextUniform();
    const NoiseDistribution dist =
        pick == 0   ? NoiseDistribution::Gaussian(0.0, scale)
        : pick == 1 ? NoiseDistribution::Laplace(0.0, scale)
                    : NoiseDistribution::Uniform(0.0, scale);
    const double eps = 0.05 + 0.5 * rng.NextUniform();
    const auto set = StationarySet(dist, eps, DomainSet::WholeLine());

    const double half = 8.0 * dist.Stddev() + eps;
    const int grid_n = 20000;
    double best_y = -half;
    double best = -1.0;
    for (int i = 0; i <= grid_n; ++i) {
      const double y = -half + 2.0 * half * i / grid_n;
      const double area = ShadedArea(dist, y, eps);
      if (area > best) {
        best = area;
        best_y = y;
      }
    }
    const double step = 2.0 * half / grid_n;
    bool near_member = false;
    for (double p : set.points) {
      if (std::fabs(p - best_y) <= step) near_member = true;
    }
    for (const Interval& iv : set.intervals) {
      if (best_y >= iv.lo - step && best_y <= iv.hi + step) {
        near_member = true;
      }
    }
    CHECK(near_member);
  }
}

TEST_CASE("shift reflect") {
  const auto domain = DomainSet::SingleInterval(-2.0, 0.0);
  const auto shifted = ShiftReflect(1.3, domain);
  REQUIRE(shifted.intervals().size() == 1);
  CHECK(shifted.intervals()[0].lo == doctest::Approx(1.3));
  CHECK(shifted.intervals()[0].hi == doctest::Approx(3.3));

  CHECK(ShiftReflect(123.4, DomainSet::WholeLine()).whole_line());

  const auto negated = ShiftReflect(0.0, DomainSet::SingleInterval(1.0, 2.0));
  CHECK(negated.intervals()[0].lo == -2.0);
  CHECK(negated.intervals()[0].hi == -1.0);
}

TEST_CASE("shift reflect is an involution") {
  RngStream rng(9, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Interval> pieces;
    const int count = 1 + rng.NextInt(3);
    double cursor = -5.0;
    for (int p = 0; p < count; ++p) {
      const double lo = cursor + rng.NextUniform();
      const double hi = lo + rng.NextUniform();
      pieces.push_back({lo, hi});
      cursor = hi + 0.1;
    }
    const auto domain = DomainSet::FromIntervals(pieces);
    const double x_plus = 10.0 * (rng.NextUniform() - 0.5);
    const auto twice = ShiftReflect(x_plus, ShiftReflect(x_plus, domain));
    REQUIRE(twice.intervals().size() == domain.intervals().size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      CHECK(twice.intervals()[i].lo ==
            doctest::Approx(domain.intervals()[i].lo).epsilon(1e-12));
      CHECK(twice.intervals()[i].hi ==
            doctest::Approx(domain.intervals()[i].hi).epsilon(1e-12));
    }
  }
}

TEST_CASE("domain set construction rules") {
  CHECK_THROWS_AS(DomainSet::SingleInterval(2.0, 1.0), std::invalid_argument);
  const auto merged = DomainSet::FromIntervals(
      {Interval{0.0, 1.0}, Interval{0.5, 2.0}, Interval{3.0, 4.0}});
  REQUIRE(merged.intervals().size() == 2);
  CHECK(merged.intervals()[0].hi == 2.0);
  CHECK(merged.Contains(0.75));
  CHECK(!merged.Contains(2.5));
  CHECK(DomainSet::WholeLine().Contains(1e300));
  CHECK(DomainSet::FromIntervals({}).Empty());
}

TEST_CASE("sampling determinism and basic shape") {
  RngStream a(77, 3), b(77, 3), c(77, 4);
  const auto draws_a = SampleMany(kStdGaussian, a, 64);
  const auto draws_b = SampleMany(kStdGaussian, b, 64);
  const auto draws_c = SampleMany(kStdGaussian, c, 64);
  CHECK(draws_a == draws_b);
  CHECK(draws_a != draws_c);

  RngStream empty_rng(1);
  CHECK(SampleMany(kUnitUniform, empty_rng, 0).empty());
}

TEST_CASE("sample moments obey CLT bounds") {
  RngStream rng(13, 0);
  const std::size_t n = 1000000;

  const auto uniform_draws = SampleMany(kUnitUniform, rng, n);
  double mean = 0.0;
  for (double v : uniform_draws) mean += v;
  mean /= n;
  CHECK(std::fabs(mean) < 0.004);

  const auto gauss_draws = SampleMany(kStdGaussian, rng, n);
  double gmean = 0.0;
  for (double v : gauss_draws) gmean += v;
  gmean /= n;
  double var = 0.0;
  for (double v : gauss_draws) var += (v - gmean) * (v - gmean);
  var /= (n - 1);
  CHECK(std::fabs(var - 1.0) < 0.005);
}

TEST_CASE("samples agree with the CDF (Kolmogorov-Smirnov)") {
  const std::size_t n = 100000;
  const double critical_1pct = 1.6276236 / std::sqrt(static_cast<double>(n));
  int stream = 0;
  for (const auto& dist : {kStdGaussian, kStdLaplace, kUnitUniform}) {
    RngStream rng(2024, 100 + stream++);
    const double d = testing::KsStatistic(
        SampleMany(dist, rng, n),
        [&](double z) { return dist.Cumulative(z); });
    CHECK(d < critical_1pct);
  }
}

TEST_CASE("quantile inverts the cumulative") {
  for (const auto& dist : {kStdGaussian, kStdLaplace, kUnitUniform}) {
    for (double p = 0.01; p < 1.0; p += 0.01) {
      CHECK(dist.Cumulative(dist.Quantile(p)) ==
            doctest::Approx(p).epsilon(1e-10));
    }
  }
  CHECK(InverseStandardNormalCdf(0.5) == doctest::Approx(0.0));
  CHECK(InverseStandardNormalCdf(0.9750021048517795) ==
        doctest::Approx(1.96).epsilon(1e-9));
}
