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

#include "paca/estimator.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "paca/errors.h"

namespace paca {
namespace {

// Mass ties within this relative margin resolve to the smaller candidate.
constexpr double kTieTol = 1e-12;

EstimationResult ArgmaxOverCandidates(const NoiseDistribution& dist,
                                      double eps, double x_plus0,
                                      std::vector<double> candidates) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  if (candidates.empty()) {
    throw std::invalid_argument("no estimation candidates in the domain");
  }
  double best_y = candidates.front();
  double best_mass = ShadedArea(dist, best_y, eps);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double y = candidates[i];
    const double mass = ShadedArea(dist, y, eps);
    if (mass > best_mass + kTieTol * std::max(mass, best_mass)) {
      best_mass = mass;
      best_y = y;
    }
  }
  EstimationResult result;
  result.e_hat = best_y;
  result.x_hat = x_plus0 - best_y;
  result.candidate_count = static_cast<int>(candidates.size());
  result.objective = best_mass;
  return result;
}

}  // namespace

std::string ToKeyValueText(const EstimationResult& result, int target,
                           int observer) {
  std::string out;
  out += "target " + std::to_string(target) + "\n";
  out += "observer " + std::to_string(observer) + "\n";
  out += "k " + std::to_string(result.k) + "\n";
  out += std::string("regime ") + RegimeKindLabel(result.regime) + "\n";
  out += "e_hat " + FormatDouble(result.e_hat) + "\n";
  out += "x_hat " + FormatDouble(result.x_hat) + "\n";
  out += "objective " + FormatDouble(result.objective) + "\n";
  return out;
}

InitialStateEstimator::InitialStateEstimator(const NoiseDistribution& dist0,
                                             double eps)
    : dist0_(dist0), eps_(eps),
      stationary_(StationarySet(dist0, eps, DomainSet::WholeLine())) {}

EstimationResult InitialStateEstimator::Estimate(
    double x_plus0, const DomainSet& domain) const {
  if (domain.Empty()) {
    throw std::invalid_argument("estimation domain is empty");
  }
  const DomainSet shifted = ShiftReflect(x_plus0, domain);

  std::vector<double> candidates;
  if (shifted.whole_line()) {
    candidates = stationary_.points;
    for (const Interval& flat : stationary_.intervals) {
      candidates.push_back(flat.Midpoint());
    }
  } else {
    for (const Interval& piece : shifted.intervals()) {
      candidates.push_back(piece.lo);
      candidates.push_back(piece.hi);
      for (double p : stationary_.points) {
        if (piece.Contains(p)) candidates.push_back(p);
      }
      for (const Interval& flat : stationary_.intervals) {
        if (auto cut = Intersect(flat, piece)) {
          candidates.push_back(cut->Midpoint());
        }
      }
    }
  }

  EstimationResult result =
      ArgmaxOverCandidates(dist0_, eps_, x_plus0, std::move(candidates));
  result.k = 0;
  result.regime = RegimeKind::kIndependentNoise;
  return result;
}

EstimationResult EstimateK0(const NoiseDistribution& dist0, double x_plus0,
                            const DomainSet& domain, double eps) {
  return InitialStateEstimator(dist0, eps).Estimate(x_plus0, domain);
}

double PiecewiseOracle(double x_plus0, double a, double eps) {
  if (!(a > 0.0)) throw std::invalid_argument("branch width a must be > 0");
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  if (x_plus0 >= 0.0) return x_plus0;
  if (x_plus0 >= -a) return 0.0;
  return x_plus0 + a;
}

EstimationResult EstimateK(const NoiseSchedule& schedule, const InfoSet& info,
                           const ResidualSequence& residuals,
                           const DomainSet& domain, double eps,
                           const KnowledgeRegime& regime) {
  const InitialStateEstimator k0(schedule.Theta0Distribution(), eps);
  return EstimateK(schedule, info, residuals, domain, eps, regime, k0);
}

EstimationResult EstimateK(const NoiseSchedule& schedule, const InfoSet& info,
                           const ResidualSequence& residuals,
                           const DomainSet& domain, double eps,
                           const KnowledgeRegime& regime,
                           const InitialStateEstimator& k0) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  if (static_cast<int>(residuals.values.size()) != info.k) {
    throw std::invalid_argument("residual sequence length != info horizon");
  }
  const double x_plus0 = info.OutputsOf(info.target)[0];
  if (regime.kind == RegimeKind::kFullKnowledge && !residuals.AllKnown()) {
    throw StateError(
        "full-knowledge estimation requested but some residuals are unknown");
  }

  // Independent noises (any regime) and the hidden-neighbor regime both
  // leave the k=0 estimate unchanged: conditioning on nothing, or
  // marginalizing the unknown residuals over their full range, drops out of
  // the argmax.
  if (regime.kind != RegimeKind::kFullKnowledge ||
      schedule.kind == ScheduleKind::kIndependentDecaying || info.k == 0) {
    EstimationResult result = k0.Estimate(x_plus0, domain);
    result.k = info.k;
    result.regime = regime.kind;
    return result;
  }

  const int horizon = schedule.horizon;
  if (info.k >= horizon) {
    // Zero-sum identity: theta(0) = -(theta(1) + ... + theta(K)) exactly.
    double sum = 0.0;
    for (int t = 1; t <= horizon; ++t) sum += *residuals.values[t - 1];
    EstimationResult result;
    result.e_hat = -sum;
    result.x_hat = x_plus0 + sum;
    result.k = info.k;
    result.regime = regime.kind;
    result.candidate_count = 1;
    result.objective = 1.0;  // the conditional is a point mass
    return result;
  }

  if (schedule.base != NoiseKind::kGaussian) {
    throw StateError(
        "conditional estimation below the schedule horizon is only exact for "
        "Gaussian telescoping noise; run with k >= K or a Gaussian base");
  }

  // Linear-Gaussian conditioning. Observing theta(t) = r_t for t = 1..k
  // pins every latent to nu(t) = nu(0) + S_t with S_t the residual prefix
  // sum, so the posterior over theta(0) = nu(0) is the normalized product
  // of the latent priors evaluated along that line.
  double precision = 0.0;
  double weighted = 0.0;
  double prefix = 0.0;
  for (int t = 0; t <= info.k; ++t) {
    if (t > 0) prefix += *residuals.values[t - 1];
    const double sd = schedule.LatentStddev(t);
    const double inv_var = 1.0 / (sd * sd);
    precision += inv_var;
    weighted += prefix * inv_var;
  }
  const double post_mean = -weighted / precision;
  const double post_sd = std::sqrt(1.0 / precision);
  const NoiseDistribution posterior =
      NoiseDistribution::Gaussian(post_mean, post_sd);

  EstimationResult result =
      InitialStateEstimator(posterior, eps).Estimate(x_plus0, domain);
  result.k = info.k;
  result.regime = regime.kind;
  return result;
}

EstimationResult AttackFullKnowledge(const Trace& trace, int observer,
                                     int target) {
  if (trace.schedule.kind != ScheduleKind::kTelescopingZeroSum) {
    throw StateError("the perfect-inference attack needs a telescoping "
                     "zero-sum schedule");
  }
  if (trace.T < trace.schedule.horizon) {
    throw StateError("trace is shorter than the schedule horizon K");
  }
  const KnowledgeRegime regime = KnowledgeRegime::Full(
      trace.graph, trace.weights, target, observer);
  const InfoSet info =
      ExtractInfoSet(trace, observer, target, trace.schedule.horizon);
  const ResidualSequence residuals = ComputeResiduals(info, regime);

  // k = K collapses the conditional to the exact noise value; no density
  // evaluation is needed, so any sigma0 > 0 schedule works here.
  double sum = 0.0;
  for (const auto& r : residuals.values) sum += *r;
  EstimationResult result;
  result.e_hat = -sum;
  result.x_hat = info.OutputsOf(target)[0] + sum;
  result.k = trace.schedule.horizon;
  result.regime = RegimeKind::kFullKnowledge;
  result.candidate_count = 1;
  result.objective = 1.0;
  return result;
}

}  // namespace paca
