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

#ifndef PACA_GRAPH_H_
#define PACA_GRAPH_H_

#include <utility>
#include <vector>

#include "paca/rng.h"

namespace paca {

// Undirected connected graph on nodes 0..n-1, n >= 3. No self-loops;
// connectivity is checked at construction.
class Graph {
 public:
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  static Graph Path(int n);
  static Graph Star(int n);  // hub is node 0
  static Graph Complete(int n);
  static Graph Triangle() { return Complete(3); }

  // Erdos-Renyi edges at probability p on top of a random spanning tree, so
  // the result is connected for every p in [0, 1].
  static Graph RandomConnected(int n, double p, RngStream& rng);

  int n() const { return n_; }
  int Degree(int i) const { return static_cast<int>(adj_[i].size()); }
  const std::vector<int>& Neighbors(int i) const { return adj_[i]; }
  bool HasEdge(int i, int j) const;
  int EdgeCount() const;
  std::vector<std::pair<int, int>> Edges() const;  // sorted, i < j

 private:
  int n_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace paca

#endif  // PACA_GRAPH_H_
