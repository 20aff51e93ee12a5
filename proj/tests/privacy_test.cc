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

#include "paca/errors.h"
#include "paca/privacy.h"
#include "paca/report.h"

using namespace paca;

namespace {

const NoiseDistribution kStdGaussian = NoiseDistribution::Gaussian(0.0, 1.0);

McScenario WholeLineScenario(RegimeKind regime, int k,
                             const NoiseSchedule& schedule) {
  RngStream rng(50, 0);
  Graph g = Graph::RandomConnected(4, 0.0, rng);  // a random tree
  WeightMatrix w = WeightMatrix::Metropolis(g);
  McScenario s{std::move(g), std::move(w), schedule,
               DomainSet::WholeLine(), {0.4, -1.0, 2.0, 0.7}, 0, 0, k,
               regime};
  s.observer = s.graph.Neighbors(0)[0];
  return s;
}

}  // namespace

TEST_CASE("whole-line disclosure probabilities, closed forms") {
  CHECK(DeltaWholeLine(kStdGaussian, 0.5) ==
        doctest::Approx(0.3829249225480262).epsilon(1e-9));
  CHECK(DeltaWholeLine(NoiseDistribution::Uniform(0.0, 1.0), 0.1) ==
        doctest::Approx(0.1).epsilon(1e-9));
  CHECK(DeltaWholeLine(NoiseDistribution::Laplace(0.0, 1.0), 1.0) ==
        doctest::Approx(0.6321205588285577).epsilon(1e-9));
  CHECK_THROWS_AS(DeltaWholeLine(kStdGaussian, 0.0), std::invalid_argument);
}

TEST_CASE("accurate noise set on the whole line") {
  const auto set = ComputeAccurateNoiseSet(kStdGaussian,
                                           DomainSet::WholeLine(), 3.0, 0.25);
  REQUIRE(set.intervals.size() == 1);
  CHECK(set.intervals[0].lo == doctest::Approx(-0.25).epsilon(1e-10));
  CHECK(set.intervals[0].hi == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("accurate noise set on [-2, 0]") {
  const auto domain = DomainSet::SingleInterval(-2.0, 0.0);

  // Interior point: only the middle branch admits accuracy.
  const auto interior =
      ComputeAccurateNoiseSet(kStdGaussian, domain, -1.0, 0.1);
  REQUIRE(interior.intervals.size() == 1);
  CHECK(interior.intervals[0].lo ==
        doctest::Approx(-0.1).scale(1.0).epsilon(1e-9));
  CHECK(interior.intervals[0].hi ==
        doctest::Approx(0.1).scale(1.0).epsilon(1e-9));

  // Boundary point: every theta >= -eps estimates x0 = 0 exactly.
  const auto boundary =
      ComputeAccurateNoiseSet(kStdGaussian, domain, 0.0, 0.1);
  REQUIRE(boundary.intervals.size() == 1);
  CHECK(boundary.intervals[0].lo ==
        doctest::Approx(-0.1).scale(1.0).epsilon(1e-9));
  CHECK(std::isinf(boundary.intervals[0].hi));

  CHECK_THROWS_AS(ComputeAccurateNoiseSet(kStdGaussian, domain, 1.0, 0.1),
                  std::invalid_argument);  // x0 outside the domain
}

TEST_CASE("accurate noise set members make accurate estimates") {
  const auto domain = DomainSet::SingleInterval(-2.0, 0.0);
  const double eps = 0.15;
  for (double x0 : {-2.0, -1.3, -0.4, 0.0}) {
    const auto set = ComputeAccurateNoiseSet(kStdGaussian, domain, x0, eps);
    const InitialStateEstimator est(kStdGaussian, eps);
    RngStream rng(1000 + static_cast<std::uint64_t>(x0 * 8), 0);
    for (const Interval& iv : set.intervals) {
      for (int i = 0; i < 20; ++i) {
        const double lo = std::isinf(iv.lo) ? iv.hi - 5.0 : iv.lo;
        const double hi = std::isinf(iv.hi) ? lo + 5.0 : iv.hi;
        // Stay one bisection tolerance inside the edges.
        const double margin = 1e-9 * (1.0 + hi - lo);
        const double theta = lo + margin +
                             (hi - lo - 2.0 * margin) * rng.NextUniform();
        const auto r = est.Estimate(x0 + theta, domain);
        CHECK(std::fabs(r.x_hat - x0) <= eps + 1e-9);
      }
    }
  }
}

TEST_CASE("general delta values") {
  const auto domain = DomainSet::SingleInterval(-2.0, 0.0);
  CHECK(DeltaGeneral(kStdGaussian, DomainSet::WholeLine(), 0.0, 0.1) ==
        doctest::Approx(0.07965567455405804).epsilon(1e-9));
  CHECK(DeltaGeneral(kStdGaussian, domain, -1.0, 0.1) ==
        doctest::Approx(0.07965567455405804).epsilon(1e-7));
  CHECK(DeltaGeneral(kStdGaussian, domain, 0.0, 0.1) ==
        doctest::Approx(0.539827837277029).epsilon(1e-7));
}

TEST_CASE("general delta equals the closed form on the whole line") {
  for (const auto& dist :
       {kStdGaussian, NoiseDistribution::Laplace(0.0, 0.7),
        NoiseDistribution::Uniform(0.0, 1.4)}) {
    for (double eps : {0.05, 0.2, 0.8}) {
      CHECK(DeltaGeneral(dist, DomainSet::WholeLine(), 0.0, eps) ==
            doctest::Approx(DeltaWholeLine(dist, eps)).epsilon(1e-9));
    }
  }
}

TEST_CASE("delta is nondecreasing in eps") {
  const auto domain = DomainSet::SingleInterval(-2.0, 0.0);
  double prev_closed = 0.0, prev_general = 0.0;
  for (double eps = 0.02; eps <= 1.4; eps += 0.04) {
    const double closed = DeltaWholeLine(kStdGaussian, eps);
    const double general = DeltaGeneral(kStdGaussian, domain, -0.5, eps);
    CHECK(closed >= prev_closed - 1e-12);
    CHECK(general >= prev_general - 1e-12);
    prev_closed = closed;
    prev_general = general;
  }
}

TEST_CASE("delta is scale equivariant") {
  for (NoiseKind kind :
       {NoiseKind::kGaussian, NoiseKind::kLaplace, NoiseKind::kUniform}) {
    for (double c : {0.25, 3.0, 10.0}) {
      const auto base = NoiseDistribution::FromVariance(kind, 0.0, 1.0);
      const auto scaled = NoiseDistribution::FromVariance(kind, 0.0, c * c);
      CHECK(DeltaWholeLine(base, 0.3) ==
            doctest::Approx(DeltaWholeLine(scaled, 0.3 * c)).epsilon(1e-9));

      // Bounded domains scale alongside.
      const auto domain = DomainSet::SingleInterval(-2.0, 0.0);
      const auto domain_scaled =
          DomainSet::SingleInterval(-2.0 * c, 0.0);
      CHECK(DeltaGeneral(base, domain, -0.4, 0.3) ==
            doctest::Approx(DeltaGeneral(scaled, domain_scaled, -0.4 * c,
                                         0.3 * c))
                .epsilon(1e-7));
    }
  }
}

TEST_CASE("monte carlo at k=0 agrees with the closed forms") {
  const std::uint64_t n = 200000;

  const auto gauss_mc = DeltaMonteCarloK0(
      kStdGaussian, DomainSet::WholeLine(), 0.0, 0.5, n, 99);
  CHECK(std::fabs(gauss_mc.delta - 0.3829249225480262) <=
        3.0 * gauss_mc.stderr_);

  const auto uniform_mc = DeltaMonteCarloK0(
      NoiseDistribution::Uniform(0.0, 1.0), DomainSet::WholeLine(), 0.0, 0.1,
      n, 100);
  CHECK(std::fabs(uniform_mc.delta - 0.1) <= 3.0 * uniform_mc.stderr_);

  const auto bounded_mc = DeltaMonteCarloK0(
      kStdGaussian, DomainSet::SingleInterval(-2.0, 0.0), 0.0, 0.1, n, 101);
  CHECK(std::fabs(bounded_mc.delta - 0.539827837277029) <=
        3.0 * bounded_mc.stderr_);

  CHECK_THROWS_AS(DeltaMonteCarloK0(kStdGaussian, DomainSet::WholeLine(),
                                    0.0, 0.5, 100, 1),
                  std::invalid_argument);  // n below the floor
}

TEST_CASE("monte carlo is reproducible and batch-order independent") {
  const auto a = DeltaMonteCarloK0(kStdGaussian, DomainSet::WholeLine(), 0.0,
                                   0.25, 150000, 7);
  const auto b = DeltaMonteCarloK0(kStdGaussian, DomainSet::WholeLine(), 0.0,
                                   0.25, 150000, 7);
  CHECK(a.delta == b.delta);
  CHECK(a.stderr_ == b.stderr_);
}

TEST_CASE("full-knowledge scenario discloses everything at the horizon") {
  const auto schedule =
      NoiseSchedule::TelescopingZeroSum(NoiseKind::kGaussian, 1.0, 0.5, 6);
  RngStream rng(1, 1);
  Graph g = Graph::Triangle();
  WeightMatrix w = WeightMatrix::Metropolis(g);
  McScenario scenario{std::move(g), std::move(w), schedule,
                      DomainSet::WholeLine(), {5.0, 1.0, 2.0}, 0, 1, 6,
                      RegimeKind::kFullKnowledge};
  for (double eps : {0.1, 0.5}) {
    const auto mc = DeltaMonteCarlo(scenario, eps, 10000, 2026);
    CHECK(mc.delta == 1.0);
  }
}

TEST_CASE("partial-knowledge disclosure stays at the k=0 level") {
  const auto schedule =
      NoiseSchedule::TelescopingZeroSum(NoiseKind::kGaussian, 1.0, 0.5, 8);
  Graph g = Graph::Path(4);
  WeightMatrix w = WeightMatrix::Metropolis(g);
  McScenario scenario{std::move(g), std::move(w), schedule,
                      DomainSet::WholeLine(), {0.5, -1.0, 2.0, 0.0},
                      /*target=*/1, /*observer=*/0, /*k=*/3,
                      RegimeKind::kPartialNeighborhood};

  const double eps = 0.5;
  const double delta0 =
      DeltaWholeLine(schedule.Theta0Distribution(), eps);
  const double bound = DeltaUpperBoundK(scenario, eps);
  CHECK(bound == doctest::Approx(delta0).epsilon(1e-12));

  const auto mc = DeltaMonteCarlo(scenario, eps, 20000, 555);
  CHECK(std::fabs(mc.delta - delta0) <= 3.0 * mc.stderr_);
  CHECK(mc.delta <= bound + 3.0 * mc.stderr_);
}

TEST_CASE("upper bound reduces to delta(0) under independent noises") {
  const auto indep =
      NoiseSchedule::IndependentDecaying(NoiseKind::kLaplace, 0.9, 0.4, 5);
  auto scenario = WholeLineScenario(RegimeKind::kIndependentNoise, 4, indep);
  CHECK(DeltaUpperBoundK(scenario, 0.3) ==
        doctest::Approx(DeltaWholeLine(indep.Theta0Distribution(), 0.3))
            .epsilon(1e-12));

  scenario.regime = RegimeKind::kFullKnowledge;
  CHECK_THROWS_AS(DeltaUpperBoundK(scenario, 0.3), StateError);
}

TEST_CASE("noise family comparison at fixed variance") {
  const auto rows = CompareNoiseFamilies(
      1.0, 0.1,
      {NoiseKind::kUniform, NoiseKind::kGaussian, NoiseKind::kLaplace});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].delta == doctest::Approx(0.057735026918962574).epsilon(1e-9));
  CHECK(rows[1].delta == doctest::Approx(0.07965567455405804).epsilon(1e-9));
  CHECK(rows[2].delta == doctest::Approx(0.13187655460541514).epsilon(1e-9));
  CHECK(rows[0].is_minimizer);
  CHECK(!rows[1].is_minimizer);
  CHECK(!rows[2].is_minimizer);

  for (double eps : {0.1, 0.5, 1.0}) {
    const auto r = CompareNoiseFamilies(
        1.0, eps,
        {NoiseKind::kGaussian, NoiseKind::kLaplace, NoiseKind::kUniform});
    double uniform = 0, gaussian = 0, laplace = 0;
    for (const auto& row : r) {
      if (row.kind == NoiseKind::kUniform) uniform = row.delta;
      if (row.kind == NoiseKind::kGaussian) gaussian = row.delta;
      if (row.kind == NoiseKind::kLaplace) laplace = row.delta;
    }
    CHECK(uniform < gaussian);
    CHECK(gaussian < laplace);
  }
  CHECK_THROWS_AS(CompareNoiseFamilies(1.0, 0.1, {}), std::invalid_argument);
}

TEST_CASE("small-eps deltas approach the density-peak ratios") {
  const double eps = 1e-5;
  const auto rows = CompareNoiseFamilies(
      1.0, eps,
      {NoiseKind::kUniform, NoiseKind::kGaussian, NoiseKind::kLaplace});
  CHECK(rows[0].delta / (2.0 * eps) ==
        doctest::Approx(0.2886751345948129).epsilon(1e-4));
  CHECK(rows[1].delta / (2.0 * eps) ==
        doctest::Approx(0.3989422804014327).epsilon(1e-4));
  CHECK(rows[2].delta / (2.0 * eps) ==
        doctest::Approx(0.7071067811865476).epsilon(1e-4));
}

TEST_CASE("csv report rows match the schema and round-trip") {
  CHECK(std::string(kCsvHeader) ==
        "dist,sigma,epsilon,x0,domain,k,regime,delta_closed,delta_general,"
        "delta_mc,stderr,n,seed");

  PrivacyReport report;
  report.dist = "gaussian";
  report.sigma = 1.0;
  report.epsilon = 0.5;
  report.domain = "whole-line";
  report.k = 0;
  report.regime = "independent";
  report.delta_closed = 0.3829249225480262;
  report.delta_mc = 0.382871;
  report.mc_stderr = 0.000486;
  report.mc_n = 1000000;
  report.seed = 7;

  const std::string row = ToCsvRow(report);
  CHECK(row.find("gaussian,1,0.5,,whole-line,0,independent,") == 0);
  const PrivacyReport parsed = ParseCsvRow(row);
  CHECK(ToCsvRow(parsed) == row);
  CHECK(!parsed.x0.has_value());
  CHECK(!parsed.delta_general.has_value());
  CHECK(parsed.mc_n == 1000000);

  PrivacyReport bounded;
  bounded.dist = "laplace";
  bounded.sigma = 0.8;
  bounded.epsilon = 0.1;
  bounded.x0 = -1.0;
  bounded.domain = "[-2..0]";
  bounded.k = 3;
  bounded.regime = "partial";
  bounded.delta_general = 0.25;
  const std::string row2 = ToCsvRow(bounded);
  CHECK(ToCsvRow(ParseCsvRow(row2)) == row2);
}
