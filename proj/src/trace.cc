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

#include "paca/trace.h"

#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace paca {
namespace {

std::string JoinDoubles(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += FormatDouble(v[i]);
  }
  return out;
}

class LineReader {
 public:
  explicit LineReader(const std::string& text) : in_(text) {}

  // Next non-empty line, split on single spaces.
  std::vector<std::string> Next() {
    std::string line;
    while (std::getline(in_, line)) {
      if (line.empty()) continue;
      std::vector<std::string> tokens;
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return tokens;
    }
    throw std::invalid_argument("trace file truncated");
  }

  std::vector<std::string> Expect(const std::string& head,
                                  std::size_t min_tokens) {
    auto tokens = Next();
    if (tokens[0] != head || tokens.size() < min_tokens) {
      throw std::invalid_argument("trace file: expected '" + head +
                                  "' record, got '" + tokens[0] + "'");
    }
    return tokens;
  }

 private:
  std::istringstream in_;
};

double ParseDouble(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) {
    throw std::invalid_argument("trace file: bad number '" + s + "'");
  }
  return v;
}

std::vector<double> ParseVector(const std::vector<std::string>& tokens,
                                std::size_t offset, int n) {
  if (tokens.size() != offset + static_cast<std::size_t>(n)) {
    throw std::invalid_argument("trace file: wrong vector length");
  }
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = ParseDouble(tokens[offset + i]);
  return v;
}

NoiseKind ParseNoiseKind(const std::string& s) {
  if (s == "gaussian") return NoiseKind::kGaussian;
  if (s == "laplace") return NoiseKind::kLaplace;
  if (s == "uniform") return NoiseKind::kUniform;
  throw std::invalid_argument("trace file: unknown noise kind '" + s + "'");
}

}  // namespace

std::string FormatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Trace RunPaca(const Graph& graph, const WeightMatrix& weights,
              const std::vector<double>& x0, const NoiseSchedule& schedule,
              int T, RngStream& rng) {
  const int n = graph.n();
  if (weights.n() != n) {
    throw std::invalid_argument("weight matrix does not match graph");
  }
  if (x0.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("initial state length does not match graph");
  }
  if (T < schedule.horizon) {
    throw std::invalid_argument(
        "iteration count T must be >= schedule horizon K");
  }

  const auto noise = GenerateNoise(schedule, n, rng);
  Trace trace{graph,
              weights,
              schedule,
              rng.seed(),
              rng.stream(),
              "-",
              x0,
              std::accumulate(x0.begin(), x0.end(), 0.0) / n,
              T,
              {},
              {},
              {}};
  trace.x.reserve(T + 1);
  trace.x_plus.reserve(T + 1);
  trace.theta.reserve(T + 1);

  std::vector<double> state = x0;
  for (int k = 0; k <= T; ++k) {
    std::vector<double> th(n, 0.0);
    if (k <= schedule.horizon) {
      for (int i = 0; i < n; ++i) th[i] = noise[i][k];
    }
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = state[i] + th[i];
    trace.x.push_back(state);
    trace.x_plus.push_back(out);
    trace.theta.push_back(std::move(th));
    if (k < T) state = weights.Apply(out);
  }
  return trace;
}

std::string SerializeTrace(const Trace& trace) {
  const int n = trace.graph.n();
  std::string out;
  out += "paca-trace 1\n";
  out += "seed " + std::to_string(trace.seed) + "\n";
  out += "stream " + std::to_string(trace.stream) + "\n";
  out += "digest " + trace.config_digest + "\n";
  out += std::string("schedule ") + ScheduleKindLabel(trace.schedule.kind) +
         " " + NoiseKindLabel(trace.schedule.base) + " " +
         FormatDouble(trace.schedule.sigma0) + " " +
         FormatDouble(trace.schedule.rho) + " " +
         std::to_string(trace.schedule.horizon) + "\n";
  out += "n " + std::to_string(n) + "\n";
  out += "T " + std::to_string(trace.T) + "\n";
  const auto edges = trace.graph.Edges();
  out += "edges " + std::to_string(edges.size()) + "\n";
  for (auto [a, b] : edges) {
    out += "e " + std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  for (int i = 0; i < n; ++i) {
    std::vector<double> row(trace.weights.Row(i).begin(),
                            trace.weights.Row(i).end());
    out += "w " + std::to_string(i) + " " + JoinDoubles(row) + "\n";
  }
  out += "x0 " + JoinDoubles(trace.x0) + "\n";
  out += "xbar " + FormatDouble(trace.xbar) + "\n";
  for (int k = 0; k <= trace.T; ++k) {
    out += "iter " + std::to_string(k) + "\n";
    out += "x " + JoinDoubles(trace.x[k]) + "\n";
    out += "xp " + JoinDoubles(trace.x_plus[k]) + "\n";
    out += "th " + JoinDoubles(trace.theta[k]) + "\n";
  }
  out += "end\n";
  return out;
}

Trace ParseTrace(const std::string& text) {
  LineReader reader(text);
  {
    auto magic = reader.Next();
    if (magic.size() != 2 || magic[0] != "paca-trace" || magic[1] != "1") {
      throw std::invalid_argument("not a paca-trace v1 file");
    }
  }
  const std::uint64_t seed = std::stoull(reader.Expect("seed", 2)[1]);
  const std::uint64_t stream = std::stoull(reader.Expect("stream", 2)[1]);
  const std::string digest = reader.Expect("digest", 2)[1];

  auto sched_tokens = reader.Expect("schedule", 6);
  NoiseSchedule schedule;
  const NoiseKind base = ParseNoiseKind(sched_tokens[2]);
  const double sigma0 = ParseDouble(sched_tokens[3]);
  const double rho = ParseDouble(sched_tokens[4]);
  const int horizon = std::stoi(sched_tokens[5]);
  if (sched_tokens[1] == "telescoping") {
    schedule = NoiseSchedule::TelescopingZeroSum(base, sigma0, rho, horizon);
  } else if (sched_tokens[1] == "independent") {
    schedule = NoiseSchedule::IndependentDecaying(base, sigma0, rho, horizon);
  } else {
    throw std::invalid_argument("trace file: unknown schedule kind");
  }

  const int n = std::stoi(reader.Expect("n", 2)[1]);
  const int T = std::stoi(reader.Expect("T", 2)[1]);
  const int edge_count = std::stoi(reader.Expect("edges", 2)[1]);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edge_count);
  for (int m = 0; m < edge_count; ++m) {
    auto e = reader.Expect("e", 3);
    edges.emplace_back(std::stoi(e[1]), std::stoi(e[2]));
  }
  Graph graph(n, edges);

  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    auto w = reader.Expect("w", 2 + n);
    if (std::stoi(w[1]) != i) {
      throw std::invalid_argument("trace file: weight rows out of order");
    }
    auto row = ParseVector(w, 2, n);
    entries.insert(entries.end(), row.begin(), row.end());
  }
  WeightMatrix weights = WeightMatrix::FromEntries(graph, std::move(entries));

  auto x0 = ParseVector(reader.Expect("x0", 1 + n), 1, n);
  const double xbar = ParseDouble(reader.Expect("xbar", 2)[1]);

  Trace trace{std::move(graph), std::move(weights), schedule, seed,
              stream,           digest,             x0,       xbar,
              T,                {},                 {},       {}};
  for (int k = 0; k <= T; ++k) {
    auto iter = reader.Expect("iter", 2);
    if (std::stoi(iter[1]) != k) {
      throw std::invalid_argument("trace file: iterations out of order");
    }
    trace.x.push_back(ParseVector(reader.Expect("x", 1 + n), 1, n));
    trace.x_plus.push_back(ParseVector(reader.Expect("xp", 1 + n), 1, n));
    trace.theta.push_back(ParseVector(reader.Expect("th", 1 + n), 1, n));
  }
  reader.Expect("end", 1);
  return trace;
}

void WriteTraceFile(const std::string& path, const Trace& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open trace file for writing");
  const std::string text = SerializeTrace(trace);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("trace file write failed");
}

Trace ReadTraceFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open trace file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseTrace(buf.str());
}

}  // namespace paca
