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

#include "paca/graph.h"

#include <algorithm>
#include <stdexcept>

namespace paca {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 3) {
    throw std::invalid_argument("graph needs at least 3 nodes");
  }
  adj_.assign(n, {});
  for (auto [a, b] : edges) {
    if (a == b) throw std::invalid_argument("self-loops are not allowed");
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (std::find(adj_[a].begin(), adj_[a].end(), b) != adj_[a].end()) {
      continue;  // duplicate edge
    }
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

  // BFS connectivity check.
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int nb : adj_[queue[head]]) {
      if (!seen[nb]) {
        seen[nb] = 1;
        queue.push_back(nb);
      }
    }
  }
  if (queue.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("graph must be connected");
  }
}

Graph Graph::Path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph Graph::Star(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph(n, edges);
}

Graph Graph::Complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph Graph::RandomConnected(int n, double p, RngStream& rng) {
  if (n < 3) throw std::invalid_argument("graph needs at least 3 nodes");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("edge probability must be in [0, 1]");
  }
  std::vector<std::pair<int, int>> edges;
  // Random spanning tree: attach each node to a uniformly chosen earlier one.
  for (int v = 1; v < n; ++v) {
    edges.emplace_back(rng.NextInt(v), v);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.NextUniform() < p) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

bool Graph::HasEdge(int i, int j) const {
  return std::binary_search(adj_[i].begin(), adj_[i].end(), j);
}

int Graph::EdgeCount() const {
  int total = 0;
  for (const auto& nbrs : adj_) total += static_cast<int>(nbrs.size());
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::Edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j : adj_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace paca
