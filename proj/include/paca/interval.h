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

#ifndef PACA_INTERVAL_H_
#define PACA_INTERVAL_H_

#include <optional>

namespace paca {

// Closed interval [lo, hi]. Endpoints may be +/-infinity where the holding
// type allows it (noise-set arithmetic); domain sets reject infinite ends.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double Length() const { return hi - lo; }
  double Midpoint() const { return lo + 0.5 * (hi - lo); }
  bool Contains(double v) const { return v >= lo && v <= hi; }
  bool operator==(const Interval& other) const = default;
};

// Intersection of two closed intervals, empty -> nullopt.
std::optional<Interval> Intersect(const Interval& a, const Interval& b);

}  // namespace paca

#endif  // PACA_INTERVAL_H_
