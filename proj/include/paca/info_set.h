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

#ifndef PACA_INFO_SET_H_
#define PACA_INFO_SET_H_

#include <map>
#include <optional>
#include <vector>

#include "paca/trace.h"

namespace paca {

// What observer j sees about target i through iteration k: the broadcast
// outputs of i, of j itself, and of every common neighbor — nothing else
// from the trace leaks through this type.
struct InfoSet {
  int target = -1;
  int observer = -1;
  int k = 0;
  std::vector<int> nodes;                      // sorted
  std::map<int, std::vector<double>> outputs;  // node -> x_plus(0..k)

  bool Has(int node) const { return outputs.count(node) != 0; }
  const std::vector<double>& OutputsOf(int node) const;
};

// Requires (target, observer) to be an edge and k <= trace.T.
InfoSet ExtractInfoSet(const Trace& trace, int observer, int target, int k);

enum class RegimeKind {
  kIndependentNoise,
  kPartialNeighborhood,
  kFullKnowledge,
};

const char* RegimeKindLabel(RegimeKind kind);
std::optional<RegimeKind> ParseRegimeKind(const std::string& label);

// Adversary model. Full knowledge additionally carries the target's neighbor
// list and weight row (the Kerckhoffs stance: the update rule is public) and
// is only constructible when the observer actually sees every input of the
// target's update, i.e. N_i is a subset of N_j plus j itself.
struct KnowledgeRegime {
  RegimeKind kind = RegimeKind::kIndependentNoise;
  std::vector<int> target_neighbors;  // full knowledge only
  std::vector<double> weight_row;     // row i of W, full knowledge only

  static KnowledgeRegime Independent();
  static KnowledgeRegime Partial();
  // Throws StateError naming the hidden neighbors when the containment
  // precondition fails.
  static KnowledgeRegime Full(const Graph& graph, const WeightMatrix& weights,
                              int target, int observer);
};

// theta'_i(t) = x_i^+(t) - f_i(x^+(t-1)), t = 1..k. Entry t is known only
// when the observer can evaluate f_i completely (full knowledge); under the
// other regimes every entry is unknown.
struct ResidualSequence {
  std::vector<std::optional<double>> values;  // index t-1 holds theta'(t)

  bool AllKnown() const;
};

ResidualSequence ComputeResiduals(const InfoSet& info,
                                  const KnowledgeRegime& regime);

}  // namespace paca

#endif  // PACA_INFO_SET_H_
