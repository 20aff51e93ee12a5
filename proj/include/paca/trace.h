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

#ifndef PACA_TRACE_H_
#define PACA_TRACE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "paca/graph.h"
#include "paca/noise_schedule.h"
#include "paca/weight_matrix.h"

namespace paca {

// Full record of one consensus run x(k+1) = W (x(k) + theta(k)):
//   x[k]      internal states,      k = 0..T
//   x_plus[k] broadcast outputs,    k = 0..T   (x_plus = x + theta)
//   theta[k]  injected noises,      k = 0..T   (zero for k > schedule K)
// Immutable once produced; safe to share across threads.
struct Trace {
  Graph graph;
  WeightMatrix weights;
  NoiseSchedule schedule;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::string config_digest = "-";
  std::vector<double> x0;
  double xbar = 0.0;
  int T = 0;
  std::vector<std::vector<double>> x;
  std::vector<std::vector<double>> x_plus;
  std::vector<std::vector<double>> theta;
};

// Runs the consensus iteration for T steps (requires T >= schedule horizon,
// so the full noise sequence is spent inside the trace).
Trace RunPaca(const Graph& graph, const WeightMatrix& weights,
              const std::vector<double>& x0, const NoiseSchedule& schedule,
              int T, RngStream& rng);

// Self-describing text form. Doubles are printed with 17 significant digits,
// so serialize -> parse -> serialize is byte-identical and values round-trip
// bit-exactly.
std::string SerializeTrace(const Trace& trace);
Trace ParseTrace(const std::string& text);

void WriteTraceFile(const std::string& path, const Trace& trace);
Trace ReadTraceFile(const std::string& path);

// 17-significant-digit decimal form that round-trips IEEE doubles exactly.
std::string FormatDouble(double v);

}  // namespace paca

#endif  // PACA_TRACE_H_
