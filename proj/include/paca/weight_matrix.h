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

#ifndef PACA_WEIGHT_MATRIX_H_
#define PACA_WEIGHT_MATRIX_H_

#include <span>
#include <vector>

#include "paca/graph.h"

namespace paca {

// Doubly stochastic consensus weights: rows and columns sum to one, all
// entries nonnegative, positive diagonal, positive off-diagonal exactly on
// edges.
class WeightMatrix {
 public:
  // Metropolis-Hastings weights: w_ij = 1 / (1 + max(deg_i, deg_j)) on edges,
  // w_ii = 1 - sum of the row's edge weights. Symmetric, hence doubly
  // stochastic.
  static WeightMatrix Metropolis(const Graph& g);

  // Raw entries (row-major, n*n); validates every invariant above against
  // the given graph.
  static WeightMatrix FromEntries(const Graph& g, std::vector<double> entries);

  int n() const { return n_; }
  double At(int i, int j) const { return w_[i * n_ + j]; }
  std::span<const double> Row(int i) const { return {&w_[i * n_], size_t(n_)}; }

  // W * x.
  std::vector<double> Apply(const std::vector<double>& x) const;

 private:
  explicit WeightMatrix(int n) : n_(n), w_(n * n, 0.0) {}

  int n_;
  std::vector<double> w_;
};

}  // namespace paca

#endif  // PACA_WEIGHT_MATRIX_H_
