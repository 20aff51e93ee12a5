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

#include "paca/weight_matrix.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace paca {
namespace {

constexpr double kStochasticTol = 1e-12;

}  // namespace

WeightMatrix WeightMatrix::Metropolis(const Graph& g) {
  const int n = g.n();
  WeightMatrix w(n);
  for (int i = 0; i < n; ++i) {
    double off = 0.0;
    for (int j : g.Neighbors(i)) {
      const double wij = 1.0 / (1.0 + std::max(g.Degree(i), g.Degree(j)));
      w.w_[i * n + j] = wij;
      off += wij;
    }
    w.w_[i * n + i] = 1.0 - off;
  }
  return w;
}

WeightMatrix WeightMatrix::FromEntries(const Graph& g,
                                       std::vector<double> entries) {
  const int n = g.n();
  if (entries.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("weight matrix size mismatch");
  }
  WeightMatrix w(n);
  w.w_ = std::move(entries);
  for (int i = 0; i < n; ++i) {
    double row = 0.0, col = 0.0;
    for (int j = 0; j < n; ++j) {
      const double v = w.At(i, j);
      if (v < 0.0) throw std::invalid_argument("negative weight entry");
      if (i != j && (v > 0.0) != g.HasEdge(i, j)) {
        throw std::invalid_argument("off-diagonal weight pattern != edges");
      }
      row += v;
      col += w.At(j, i);
    }
    if (w.At(i, i) <= 0.0) {
      throw std::invalid_argument("diagonal weights must be positive");
    }
    if (std::fabs(row - 1.0) > kStochasticTol ||
        std::fabs(col - 1.0) > kStochasticTol) {
      throw std::invalid_argument("weight matrix is not doubly stochastic");
    }
  }
  return w;
}

std::vector<double> WeightMatrix::Apply(const std::vector<double>& x) const {
  if (x.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("vector length != matrix dimension");
  }
  std::vector<double> y(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    const double* row = &w_[i * n_];
    double acc = 0.0;
    for (int j = 0; j < n_; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
  return y;
}

}  // namespace paca
