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

#include "paca/domain.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace paca {

std::optional<Interval> Intersect(const Interval& a, const Interval& b) {
  const double lo = std::max(a.lo, b.lo);
  const double hi = std::min(a.hi, b.hi);
  if (lo > hi) return std::nullopt;
  return Interval{lo, hi};
}

DomainSet DomainSet::WholeLine() {
  DomainSet d;
  d.whole_line_ = true;
  return d;
}

DomainSet DomainSet::FromIntervals(std::vector<Interval> intervals) {
  for (const Interval& iv : intervals) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
      throw std::invalid_argument("domain intervals must be finite");
    }
    if (iv.lo > iv.hi) {
      throw std::invalid_argument("domain interval has lo > hi");
    }
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (const Interval& iv : intervals) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  DomainSet d;
  d.intervals_ = std::move(merged);
  return d;
}

DomainSet DomainSet::SingleInterval(double lo, double hi) {
  return FromIntervals({Interval{lo, hi}});
}

bool DomainSet::Contains(double v) const {
  if (whole_line_) return true;
  for (const Interval& iv : intervals_) {
    if (iv.Contains(v)) return true;
    if (v < iv.lo) break;
  }
  return false;
}

std::string DomainSet::Label() const {
  if (whole_line_) return "whole-line";
  std::string out;
  char buf[80];
  for (const Interval& iv : intervals_) {
    if (!out.empty()) out += ';';
    std::snprintf(buf, sizeof(buf), "[%.17g..%.17g]", iv.lo, iv.hi);
    out += buf;
  }
  return out.empty() ? "empty" : out;
}

DomainSet ShiftReflect(double x_plus, const DomainSet& domain) {
  if (domain.whole_line()) return DomainSet::WholeLine();
  std::vector<Interval> out;
  out.reserve(domain.intervals().size());
  for (const Interval& iv : domain.intervals()) {
    out.push_back(Interval{x_plus - iv.hi, x_plus - iv.lo});
  }
  return DomainSet::FromIntervals(std::move(out));
}

}  // namespace paca
