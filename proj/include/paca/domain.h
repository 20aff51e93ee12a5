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

#ifndef PACA_DOMAIN_H_
#define PACA_DOMAIN_H_

#include <string>
#include <vector>

#include "paca/interval.h"

namespace paca {

// Prior support of an initial state: either the whole real line or a finite
// union of closed intervals (sorted, pairwise disjoint; overlapping or
// touching inputs are merged at construction).
class DomainSet {
 public:
  static DomainSet WholeLine();
  static DomainSet FromIntervals(std::vector<Interval> intervals);
  static DomainSet SingleInterval(double lo, double hi);

  bool whole_line() const { return whole_line_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  bool Empty() const { return !whole_line_ && intervals_.empty(); }
  bool Contains(double v) const;

  // "whole-line" or ";"-joined pieces like "[-2..0];[1..3]" (no commas, so
  // the label embeds directly into a CSV cell).
  std::string Label() const;

  bool operator==(const DomainSet& other) const = default;

 private:
  DomainSet() = default;

  bool whole_line_ = false;
  std::vector<Interval> intervals_;
};

// The set {x_plus - v : v in domain}; the whole line maps to itself.
DomainSet ShiftReflect(double x_plus, const DomainSet& domain);

}  // namespace paca

#endif  // PACA_DOMAIN_H_
