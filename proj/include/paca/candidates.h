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

#ifndef PACA_CANDIDATES_H_
#define PACA_CANDIDATES_H_

#include <vector>

#include "paca/distribution.h"
#include "paca/domain.h"
#include "paca/interval.h"

namespace paca {

// Zero set of the shaded-area derivative: isolated roots plus maximal
// intervals where the derivative vanishes identically (flat-density case).
struct CandidateSet {
  std::vector<double> points;
  std::vector<Interval> intervals;

  bool EmptySet() const { return points.empty() && intervals.empty(); }
};

// All stationary points of y -> ShadedArea(dist, y, eps) inside `within`,
// i.e. solutions of density(y + eps) = density(y - eps). Isolated roots are
// bracketed by sign change on a uniform scan grid over a working window of
// +/-(8 stddev + eps) around the location, then bisected to 1e-12. Flat
// stretches (the derivative identically zero over a run) are returned as
// intervals with their edges bisected to the same tolerance; flats carrying
// zero probability mass (a bounded support's outer tails) are dropped since
// no argmax of a positive objective can live there.
CandidateSet StationarySet(const NoiseDistribution& dist, double eps,
                           const DomainSet& within, int grid_points = 2048);

}  // namespace paca

#endif  // PACA_CANDIDATES_H_
