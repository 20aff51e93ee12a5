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

#include "paca/candidates.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace paca {
namespace {

constexpr double kRootTol = 1e-12;
constexpr int kMaxBisect = 200;

double Deriv(const NoiseDistribution& dist, double eps, double y) {
  return dist.Density(y + eps) - dist.Density(y - eps);
}

// Root of the derivative between a and b, where the signs at the endpoints
// differ. Converges to the discontinuity for jump crossings as well.
double BisectRoot(const NoiseDistribution& dist, double eps, double a,
                  double fa, double b) {
  for (int i = 0; i < kMaxBisect && b - a > kRootTol; ++i) {
    const double m = 0.5 * (a + b);
    const double fm = Deriv(dist, eps, m);
    if (fm == 0.0 || (fm > 0.0) == (fa > 0.0)) {
      a = m;
      fa = fm;
      if (fm == 0.0) break;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Edge of a flat run: `inside` has derivative exactly zero, `outside` does
// not. Returns the innermost point of the zero region found.
double BisectFlatEdge(const NoiseDistribution& dist, double eps,
                      double outside, double inside) {
  for (int i = 0; i < kMaxBisect && std::fabs(inside - outside) > kRootTol;
       ++i) {
    const double m = 0.5 * (outside + inside);
    if (Deriv(dist, eps, m) == 0.0) {
      inside = m;
    } else {
      outside = m;
    }
  }
  return inside;
}

void ScanSegment(const NoiseDistribution& dist, double eps, double lo,
                 double hi, int grid_points, CandidateSet* out) {
  if (hi < lo) return;
  if (hi == lo) {
    if (Deriv(dist, eps, lo) == 0.0) out->points.push_back(lo);
    return;
  }

  const int n = std::max(grid_points, 16);
  const double step = (hi - lo) / n;
  std::vector<double> ys(n + 1), fs(n + 1);
  for (int i = 0; i <= n; ++i) {
    ys[i] = (i == n) ? hi : lo + i * step;
    fs[i] = Deriv(dist, eps, ys[i]);
  }

  int i = 0;
  while (i <= n) {
    if (fs[i] == 0.0) {
      int j = i;
      while (j + 1 <= n && fs[j + 1] == 0.0) ++j;
      if (j == i) {
        out->points.push_back(ys[i]);
      } else {
        double left = ys[i];
        double right = ys[j];
        if (i > 0) left = BisectFlatEdge(dist, eps, ys[i - 1], ys[i]);
        if (j < n) right = BisectFlatEdge(dist, eps, ys[j + 1], ys[j]);
        out->intervals.push_back(Interval{left, right});
      }
      i = j + 1;
      continue;
    }
    if (i < n && fs[i + 1] != 0.0 && (fs[i] > 0.0) != (fs[i + 1] > 0.0)) {
      out->points.push_back(BisectRoot(dist, eps, ys[i], fs[i], ys[i + 1]));
    }
    ++i;
  }
}

}  // namespace

CandidateSet StationarySet(const NoiseDistribution& dist, double eps,
                           const DomainSet& within, int grid_points) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("stationary-set eps must be positive");
  }
  const double half = 8.0 * dist.Stddev() + eps;
  const Interval window{dist.location() - half, dist.location() + half};

  CandidateSet raw;
  if (within.whole_line()) {
    ScanSegment(dist, eps, window.lo, window.hi, grid_points, &raw);
  } else {
    for (const Interval& piece : within.intervals()) {
      if (auto seg = Intersect(piece, window)) {
        ScanSegment(dist, eps, seg->lo, seg->hi, grid_points, &raw);
      }
    }
  }

  CandidateSet result;
  for (double p : raw.points) result.points.push_back(p);
  for (const Interval& iv : raw.intervals) {
    if (ShadedArea(dist, iv.Midpoint(), eps) > 0.0) {
      result.intervals.push_back(iv);
    }
  }
  std::sort(result.points.begin(), result.points.end());
  result.points.erase(
      std::unique(result.points.begin(), result.points.end()),
      result.points.end());
  std::sort(result.intervals.begin(), result.intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return result;
}

}  // namespace paca
