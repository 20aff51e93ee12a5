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

#include "paca/info_set.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "paca/errors.h"

namespace paca {
namespace {

// Neighbors of `target` invisible to `observer`: N_i \ (N_j u {j}).
std::vector<int> HiddenNeighbors(const Graph& graph, int target,
                                 int observer) {
  std::vector<int> hidden;
  for (int nb : graph.Neighbors(target)) {
    if (nb != observer && !graph.HasEdge(observer, nb)) {
      hidden.push_back(nb);
    }
  }
  return hidden;
}

}  // namespace

const std::vector<double>& InfoSet::OutputsOf(int node) const {
  auto it = outputs.find(node);
  if (it == outputs.end()) {
    throw std::invalid_argument("node " + std::to_string(node) +
                                " is not part of this information set");
  }
  return it->second;
}

InfoSet ExtractInfoSet(const Trace& trace, int observer, int target, int k) {
  const Graph& g = trace.graph;
  if (target < 0 || target >= g.n() || observer < 0 || observer >= g.n()) {
    throw std::invalid_argument("node id out of range");
  }
  if (!g.HasEdge(observer, target)) {
    throw std::invalid_argument("observer must be a neighbor of the target");
  }
  if (k < 0 || k > trace.T) {
    throw std::invalid_argument("horizon k exceeds the trace length");
  }

  InfoSet info;
  info.target = target;
  info.observer = observer;
  info.k = k;
  info.nodes.push_back(target);
  info.nodes.push_back(observer);
  for (int nb : g.Neighbors(target)) {
    if (nb != observer && g.HasEdge(observer, nb)) info.nodes.push_back(nb);
  }
  std::sort(info.nodes.begin(), info.nodes.end());
  for (int node : info.nodes) {
    std::vector<double> seq(k + 1);
    for (int t = 0; t <= k; ++t) seq[t] = trace.x_plus[t][node];
    info.outputs.emplace(node, std::move(seq));
  }
  return info;
}

const char* RegimeKindLabel(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::kIndependentNoise:
      return "independent";
    case RegimeKind::kPartialNeighborhood:
      return "partial";
    case RegimeKind::kFullKnowledge:
      return "full";
  }
  return "unknown";
}

std::optional<RegimeKind> ParseRegimeKind(const std::string& label) {
  if (label == "independent") return RegimeKind::kIndependentNoise;
  if (label == "partial") return RegimeKind::kPartialNeighborhood;
  if (label == "full") return RegimeKind::kFullKnowledge;
  return std::nullopt;
}

KnowledgeRegime KnowledgeRegime::Independent() {
  return {RegimeKind::kIndependentNoise, {}, {}};
}

KnowledgeRegime KnowledgeRegime::Partial() {
  return {RegimeKind::kPartialNeighborhood, {}, {}};
}

KnowledgeRegime KnowledgeRegime::Full(const Graph& graph,
                                      const WeightMatrix& weights, int target,
                                      int observer) {
  const auto hidden = HiddenNeighbors(graph, target, observer);
  if (!hidden.empty()) {
    std::string names;
    for (int h : hidden) {
      if (!names.empty()) names += ", ";
      names += std::to_string(h);
    }
    throw StateError(
        "full knowledge requires every neighbor of the target to be visible; "
        "missing outputs of node(s) " +
        names);
  }
  KnowledgeRegime regime;
  regime.kind = RegimeKind::kFullKnowledge;
  regime.target_neighbors = graph.Neighbors(target);
  regime.weight_row.assign(weights.Row(target).begin(),
                           weights.Row(target).end());
  return regime;
}

bool ResidualSequence::AllKnown() const {
  return std::all_of(values.begin(), values.end(),
                     [](const auto& v) { return v.has_value(); });
}

ResidualSequence ComputeResiduals(const InfoSet& info,
                                  const KnowledgeRegime& regime) {
  ResidualSequence seq;
  seq.values.assign(info.k, std::nullopt);
  if (regime.kind != RegimeKind::kFullKnowledge) return seq;

  const int i = info.target;
  for (int t = 1; t <= info.k; ++t) {
    // f_i applied to the previous round of outputs; every term is in the
    // info set by the full-knowledge precondition.
    double f = regime.weight_row[i] * info.OutputsOf(i)[t - 1];
    for (int nb : regime.target_neighbors) {
      f += regime.weight_row[nb] * info.OutputsOf(nb)[t - 1];
    }
    seq.values[t - 1] = info.OutputsOf(i)[t] - f;
  }
  return seq;
}

}  // namespace paca
