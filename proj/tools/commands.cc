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

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <map>
#include <optional>

#include <json.hpp>

#include "paca/errors.h"
#include "paca/estimator.h"
#include "paca/privacy.h"
#include "paca/report.h"
#include "paca/trace.h"
#include "paca/version.h"

namespace paca::tools {
namespace {

using nlohmann::json;

std::string NowIso8601() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Primary output plus its side-car manifest.
void EmitOutputs(const Config& config, const std::string& primary_path,
                 const std::string& primary_content, std::ostream& out) {
  WriteTextFile(primary_path, primary_content);
  RunManifest manifest;
  manifest.version = kToolVersion;
  manifest.seed = config.GetUint64("seed", 0);
  manifest.config_digest = ConfigDigest(config);
  manifest.timestamp = NowIso8601();
  manifest.outputs = {primary_path};
  const std::string manifest_path = primary_path + ".manifest.json";
  WriteTextFile(manifest_path, ManifestJson(manifest));
  out << "wrote " << primary_path << " (manifest " << manifest_path << ")\n";
}

json ReportToJson(const PrivacyReport& r) {
  json j;
  j["dist"] = r.dist;
  j["sigma"] = r.sigma;
  j["epsilon"] = r.epsilon;
  j["x0"] = r.x0 ? json(*r.x0) : json(nullptr);
  j["domain"] = r.domain;
  j["k"] = r.k;
  j["regime"] = r.regime;
  j["delta_closed"] = r.delta_closed ? json(*r.delta_closed) : json(nullptr);
  j["delta_general"] =
      r.delta_general ? json(*r.delta_general) : json(nullptr);
  j["delta_mc"] = r.delta_mc ? json(*r.delta_mc) : json(nullptr);
  j["stderr"] = r.mc_stderr ? json(*r.mc_stderr) : json(nullptr);
  j["n"] = r.mc_n;
  j["seed"] = r.seed;
  return j;
}

std::string RowsToOutput(const std::vector<PrivacyReport>& rows,
                         const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& row : rows) arr.push_back(ReportToJson(row));
    return arr.dump(2) + "\n";
  }
  std::string csv = std::string(kCsvHeader) + "\n";
  for (const auto& row : rows) csv += ToCsvRow(row) + "\n";
  return csv;
}

std::string GetFormat(const Config& config, const std::string& fallback) {
  const std::string format = config.GetString("output.format", fallback);
  if (format != "csv" && format != "json" && format != "text") {
    throw ConfigError("output.format: expected csv|json|text");
  }
  return format;
}

std::vector<double> GetEpsList(const Config& config) {
  const auto eps = config.GetDoubleList("eps");
  for (double e : eps) {
    if (!(e > 0.0)) throw ConfigError("eps: values must be positive");
  }
  return eps;
}

NoiseDistribution DistFromKeys(const Config& config, NoiseKind kind) {
  if (config.Has("dist.sigma") && config.Has("dist.scale")) {
    throw ConfigError("dist.sigma: give either dist.sigma or dist.scale");
  }
  if (config.Has("dist.scale")) {
    const double scale = config.GetDouble("dist.scale");
    if (!(scale > 0.0)) throw ConfigError("dist.scale: must be positive");
    switch (kind) {
      case NoiseKind::kGaussian:
        return NoiseDistribution::Gaussian(0.0, scale);
      case NoiseKind::kLaplace:
        return NoiseDistribution::Laplace(0.0, scale);
      case NoiseKind::kUniform:
        return NoiseDistribution::Uniform(0.0, scale);
    }
  }
  const double sigma = config.GetDouble("dist.sigma", 1.0);
  if (!(sigma > 0.0)) throw ConfigError("dist.sigma: must be positive");
  return NoiseDistribution::FromVariance(kind, 0.0, sigma * sigma);
}

std::uint64_t RowSeed(std::uint64_t base, std::size_t index) {
  return base + static_cast<std::uint64_t>(index) + 1;
}

std::vector<std::optional<double>> DeltaX0Values(const Config& config,
                                                 const DomainSet& domain) {
  std::vector<std::optional<double>> x0s;
  if (config.Has("x0")) {
    for (double v : config.GetDoubleList("x0")) {
      if (!domain.Contains(v)) {
        throw ConfigError("x0: value " + std::to_string(v) +
                          " lies outside the domain");
      }
      x0s.emplace_back(v);
    }
  }
  if (config.Has("x0.grid")) {
    const int count = config.GetInt("x0.grid");
    if (count < 2) throw ConfigError("x0.grid: needs at least 2 points");
    if (domain.whole_line()) {
      throw ConfigError("x0.grid: needs a bounded domain to sweep");
    }
    for (const Interval& piece : domain.intervals()) {
      for (int i = 0; i < count; ++i) {
        x0s.emplace_back(piece.lo + piece.Length() * i / (count - 1));
      }
    }
  }
  if (x0s.empty()) {
    if (!domain.whole_line()) {
      throw ConfigError("x0: required for a bounded domain (or use x0.grid)");
    }
    x0s.emplace_back(std::nullopt);
  }
  return x0s;
}

Trace TraceFromConfig(const Config& config) {
  if (config.Has("trace.path")) {
    return ReadTraceFile(config.GetString("trace.path"));
  }
  const std::uint64_t seed = config.GetUint64("seed", 0);
  RngStream graph_rng(seed, 0);
  const Graph graph = BuildGraph(config, graph_rng);
  const WeightMatrix weights = WeightMatrix::Metropolis(graph);
  const NoiseSchedule schedule = BuildSchedule(config);
  const auto x0 = BuildInitialStates(config, graph.n());
  const int T = config.GetInt("sim.T");
  if (T < schedule.horizon) {
    throw ConfigError("sim.T: must be >= schedule.K");
  }
  RngStream rng(seed, 1);
  Trace trace = RunPaca(graph, weights, x0, schedule, T, rng);
  trace.config_digest = ConfigDigest(config);
  return trace;
}

const std::vector<std::string> kSimKeys = {
    "seed",           "output.path",    "output.format", "graph.n",
    "graph.p",        "graph.kind",     "graph.edges",   "schedule.kind",
    "schedule.dist",  "schedule.sigma0", "schedule.rho",  "schedule.K",
    "sim.T",          "x0",             "x0.lo",         "x0.hi"};

std::vector<std::string> WithSimKeys(std::vector<std::string> extra) {
  extra.insert(extra.end(), kSimKeys.begin(), kSimKeys.end());
  return extra;
}

json EstimationToJson(const EstimationResult& r, int target, int observer) {
  json j;
  j["target"] = target;
  j["observer"] = observer;
  j["k"] = r.k;
  j["regime"] = RegimeKindLabel(r.regime);
  j["e_hat"] = r.e_hat;
  j["x_hat"] = r.x_hat;
  j["objective"] = r.objective;
  j["candidate_count"] = r.candidate_count;
  return j;
}

// Minimal static line chart: delta as a function of eps, one polyline per
// noise family.
std::string DeltaSvg(const std::vector<double>& eps,
                     const std::vector<std::pair<std::string,
                                                 std::vector<double>>>& rows) {
  const int width = 640, height = 440;
  const double left = 70, right = 20, top = 20, bottom = 50;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;
  double y_max = 0.0;
  for (const auto& [label, deltas] : rows) {
    for (double d : deltas) y_max = std::max(y_max, d);
  }
  if (y_max <= 0.0) y_max = 1.0;
  y_max *= 1.05;
  const double x_min = eps.front(), x_max = eps.back();
  auto sx = [&](double e) {
    return left + (x_max == x_min ? 0.5 * plot_w
                                  : (e - x_min) / (x_max - x_min) * plot_w);
  };
  auto sy = [&](double d) { return top + plot_h - d / y_max * plot_h; };

  const char* colors[] = {"#4363d8", "#e6194b", "#3cb44b", "#f58231"};
  char buf[256];
  std::string svg;
  std::snprintf(buf, sizeof(buf),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" "
                "height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                width, height, width, height);
  svg += buf;
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Axes.
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" "
                "stroke=\"black\"/>\n",
                left, top + plot_h, left + plot_w, top + plot_h);
  svg += buf;
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" "
                "stroke=\"black\"/>\n",
                left, top, left, top + plot_h);
  svg += buf;
  for (int t = 0; t <= 5; ++t) {
    const double e = x_min + (x_max - x_min) * t / 5.0;
    const double d = y_max * t / 5.0;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%g\" y=\"%g\" font-size=\"11\" "
                  "text-anchor=\"middle\">%.3g</text>\n",
                  sx(e), top + plot_h + 18, e);
    svg += buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%g\" y=\"%g\" font-size=\"11\" "
                  "text-anchor=\"end\">%.3g</text>\n",
                  left - 6, sy(d) + 4, d);
    svg += buf;
  }
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%g\" y=\"%g\" font-size=\"13\" "
                "text-anchor=\"middle\">epsilon</text>\n",
                left + plot_w / 2, static_cast<double>(height) - 10);
  svg += buf;
  std::snprintf(buf, sizeof(buf),
                "<text x=\"16\" y=\"%g\" font-size=\"13\" "
                "text-anchor=\"middle\" transform=\"rotate(-90 16 %g)\">"
                "delta</text>\n",
                top + plot_h / 2, top + plot_h / 2);
  svg += buf;
  int color_idx = 0;
  for (const auto& [label, deltas] : rows) {
    const char* color = colors[color_idx % 4];
    std::string points;
    for (std::size_t i = 0; i < eps.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%g,%g ", sx(eps[i]), sy(deltas[i]));
      points += buf;
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.8\" points=\"" + points + "\"/>\n";
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%g\" y=\"%g\" font-size=\"12\" fill=\"%s\">"
                  "%s</text>\n",
                  left + 12.0, top + 16.0 + 16.0 * color_idx, color,
                  label.c_str());
    svg += buf;
    ++color_idx;
  }
  svg += "</svg>\n";
  return svg;
}

// Shared by sweep and compare: one report row per (family, eps).
std::vector<PrivacyReport> FamilyRows(const Config& config,
                                      std::vector<NoiseKind>* kinds_out) {
  const auto family_names = config.GetStringList("families");
  if (family_names.empty()) throw ConfigError("families: empty list");
  std::vector<NoiseKind> kinds;
  for (const auto& name : family_names) {
    kinds.push_back(ParseNoiseKindValue("families", name));
  }
  const double sigma = config.GetDouble("sigma", 1.0);
  if (!(sigma > 0.0)) throw ConfigError("sigma: must be positive");
  const auto eps_list = GetEpsList(config);
  const std::uint64_t mc_n = config.GetUint64("mc.n", 0);
  const std::uint64_t seed = config.GetUint64("seed", 0);

  std::vector<PrivacyReport> rows;
  for (double eps : eps_list) {
    const auto comparison = CompareNoiseFamilies(sigma, eps, kinds);
    for (const auto& family : comparison) {
      PrivacyReport row;
      row.dist = NoiseKindLabel(family.kind);
      row.sigma = sigma;
      row.epsilon = eps;
      row.delta_closed = family.delta;
      row.seed = RowSeed(seed, rows.size());
      if (mc_n > 0) {
        const auto dist =
            NoiseDistribution::FromVariance(family.kind, 0.0, sigma * sigma);
        const auto mc = DeltaMonteCarloK0(dist, DomainSet::WholeLine(), 0.0,
                                          eps, mc_n, row.seed);
        row.delta_mc = mc.delta;
        row.mc_stderr = mc.stderr_;
        row.mc_n = mc.n;
      }
      rows.push_back(std::move(row));
    }
  }
  if (kinds_out) *kinds_out = kinds;
  return rows;
}

}  // namespace

void CmdDelta(const Config& config, std::ostream& out) {
  config.RequireOnly({"seed", "output.path", "output.format", "dist.kind",
                      "dist.sigma", "dist.scale", "eps", "domain", "x0",
                      "x0.grid", "mc.n"});
  const auto kind_names = config.GetStringList("dist.kind");
  if (kind_names.empty()) throw ConfigError("dist.kind: empty list");
  const DomainSet domain =
      ParseDomainValue("domain", config.GetString("domain", "whole-line"));
  const auto eps_list = GetEpsList(config);
  const auto x0s = DeltaX0Values(config, domain);
  const std::uint64_t mc_n = config.GetUint64("mc.n", 0);
  const std::uint64_t seed = config.GetUint64("seed", 0);

  std::vector<PrivacyReport> rows;
  for (const auto& kind_name : kind_names) {
    const NoiseKind kind = ParseNoiseKindValue("dist.kind", kind_name);
    const NoiseDistribution dist = DistFromKeys(config, kind);
    for (double eps : eps_list) {
      for (const auto& x0 : x0s) {
        PrivacyReport row;
        row.dist = NoiseKindLabel(kind);
        row.sigma = dist.Stddev();
        row.epsilon = eps;
        row.x0 = x0;
        row.domain = domain.Label();
        row.seed = RowSeed(seed, rows.size());
        if (domain.whole_line()) {
          row.delta_closed = DeltaWholeLine(dist, eps);
        } else {
          row.delta_general = DeltaGeneral(dist, domain, *x0, eps);
        }
        if (mc_n > 0) {
          const auto mc = DeltaMonteCarloK0(dist, domain, x0 ? *x0 : 0.0,
                                            eps, mc_n, row.seed);
          row.delta_mc = mc.delta;
          row.mc_stderr = mc.stderr_;
          row.mc_n = mc.n;
        }
        rows.push_back(std::move(row));
      }
    }
  }

  const std::string format = GetFormat(config, "csv");
  const std::string path = ResolveOutputPath(
      config, format == "json" ? "delta.json" : "delta.csv");
  EmitOutputs(config, path, RowsToOutput(rows, format), out);
  out << rows.size() << " row(s)\n";
}

void CmdSimulate(const Config& config, std::ostream& out) {
  config.RequireOnly(kSimKeys);
  const Trace trace = TraceFromConfig(config);
  const std::string path = ResolveOutputPath(config, "trace.txt");
  EmitOutputs(config, path, SerializeTrace(trace), out);

  double worst = 0.0;
  for (double v : trace.x[trace.T]) {
    worst = std::max(worst, std::fabs(v - trace.xbar));
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf),
                "final max deviation from the average: %.3e\n", worst);
  out << buf;
}

void CmdEstimate(const Config& config, std::ostream& out) {
  config.RequireOnly(WithSimKeys({"trace.path", "target", "observer", "k",
                                  "regime", "eps", "domain"}));
  const Trace trace = TraceFromConfig(config);
  const int target = config.GetInt("target");
  const int observer = config.GetInt("observer");
  const int k = config.GetInt("k", 0);
  const double eps = config.GetDouble("eps");
  if (!(eps > 0.0)) throw ConfigError("eps: must be positive");
  const DomainSet domain =
      ParseDomainValue("domain", config.GetString("domain", "whole-line"));
  const RegimeKind regime_kind =
      ParseRegimeValue("regime", config.GetString("regime", "independent"));

  const KnowledgeRegime regime =
      regime_kind == RegimeKind::kFullKnowledge
          ? KnowledgeRegime::Full(trace.graph, trace.weights, target,
                                  observer)
          : (regime_kind == RegimeKind::kPartialNeighborhood
                 ? KnowledgeRegime::Partial()
                 : KnowledgeRegime::Independent());
  const InfoSet info = ExtractInfoSet(trace, observer, target, k);
  const ResidualSequence residuals = ComputeResiduals(info, regime);
  const EstimationResult result =
      EstimateK(trace.schedule, info, residuals, domain, eps, regime);

  const std::string format = GetFormat(config, "json");
  const std::string content =
      format == "text"
          ? ToKeyValueText(result, target, observer)
          : EstimationToJson(result, target, observer).dump(2) + "\n";
  const std::string path = ResolveOutputPath(
      config, format == "text" ? "estimate.txt" : "estimate.json");
  EmitOutputs(config, path, content, out);
  char buf[128];
  std::snprintf(buf, sizeof(buf), "e_hat %.9g x_hat %.9g (objective %.6g)\n",
                result.e_hat, result.x_hat, result.objective);
  out << buf;
}

void CmdAttack(const Config& config, std::ostream& out) {
  config.RequireOnly(WithSimKeys({"trace.path", "target", "observer"}));
  const Trace trace = TraceFromConfig(config);
  const int observer = config.GetInt("observer");
  const std::string target_arg = config.GetString("target", "all");

  std::vector<int> targets;
  if (target_arg == "all") {
    for (int t : trace.graph.Neighbors(observer)) {
      bool visible = true;
      for (int nb : trace.graph.Neighbors(t)) {
        if (nb != observer && !trace.graph.HasEdge(observer, nb)) {
          visible = false;
          break;
        }
      }
      if (visible) targets.push_back(t);
    }
    if (targets.empty()) {
      throw StateError("no neighbor of the observer is fully visible");
    }
  } else {
    try {
      targets.push_back(std::stoi(target_arg));
    } catch (const std::exception&) {
      throw ConfigError("target: expected a node id or 'all'");
    }
  }

  json arr = json::array();
  std::string table = "target   x_hat          true_x0        abs_error\n";
  for (int target : targets) {
    const EstimationResult result =
        AttackFullKnowledge(trace, observer, target);
    json j = EstimationToJson(result, target, observer);
    const double truth = trace.x0[target];
    j["true_x0"] = truth;
    j["abs_error"] = std::fabs(result.x_hat - truth);
    arr.push_back(std::move(j));
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%-8d %-14.9g %-14.9g %.3e\n", target,
                  result.x_hat, truth, std::fabs(result.x_hat - truth));
    table += buf;
  }
  out << table;

  const std::string format = GetFormat(config, "json");
  std::string content;
  if (format == "text") {
    for (const auto& j : arr) {
      EstimationResult r;
      r.e_hat = j["e_hat"];
      r.x_hat = j["x_hat"];
      r.k = j["k"];
      r.regime = RegimeKind::kFullKnowledge;
      r.objective = j["objective"];
      content += ToKeyValueText(r, j["target"], j["observer"]) + "\n";
    }
  } else {
    content = arr.dump(2) + "\n";
  }
  const std::string path = ResolveOutputPath(
      config, format == "text" ? "attack.txt" : "attack.json");
  EmitOutputs(config, path, content, out);
}

void CmdSweep(const Config& config, std::ostream& out) {
  config.RequireOnly({"seed", "output.path", "output.format", "families",
                      "sigma", "eps", "mc.n", "plot.path"});
  std::vector<NoiseKind> kinds;
  const auto rows = FamilyRows(config, &kinds);

  const std::string format = GetFormat(config, "csv");
  const std::string path = ResolveOutputPath(
      config, format == "json" ? "sweep.json" : "sweep.csv");
  EmitOutputs(config, path, RowsToOutput(rows, format), out);

  if (config.Has("plot.path")) {
    std::vector<double> eps_grid;
    std::vector<std::pair<std::string, std::vector<double>>> series;
    for (NoiseKind kind : kinds) {
      series.emplace_back(NoiseKindLabel(kind), std::vector<double>{});
    }
    for (const auto& row : rows) {
      if (eps_grid.empty() || row.epsilon != eps_grid.back()) {
        eps_grid.push_back(row.epsilon);
      }
      for (auto& [label, deltas] : series) {
        if (label == row.dist) deltas.push_back(*row.delta_closed);
      }
    }
    const std::string plot_path = config.GetString("plot.path");
    WriteTextFile(plot_path, DeltaSvg(eps_grid, series));
    out << "wrote plot " << plot_path << "\n";
  }
  out << rows.size() << " row(s)\n";
}

void CmdCompare(const Config& config, std::ostream& out) {
  config.RequireOnly({"seed", "output.path", "output.format", "families",
                      "sigma", "eps", "mc.n"});
  std::vector<NoiseKind> kinds;
  const auto rows = FamilyRows(config, &kinds);
  const double sigma = config.GetDouble("sigma", 1.0);

  const std::string format = GetFormat(config, "csv");
  const std::string path = ResolveOutputPath(
      config, format == "json" ? "compare.json" : "compare.csv");
  EmitOutputs(config, path, RowsToOutput(rows, format), out);

  // Per-eps minimizer table.
  out << "eps        family     delta\n";
  double current_eps = -1.0;
  std::string best_family;
  double best_delta = 0.0;
  auto flush = [&]() {
    if (current_eps >= 0.0) {
      char buf[96];
      std::snprintf(buf, sizeof(buf), "%-10.4g %-10s %.9g%s\n", current_eps,
                    best_family.c_str(), best_delta,
                    current_eps <= sigma ? "" : "  (eps > sigma)");
      out << buf;
    }
  };
  for (const auto& row : rows) {
    if (row.epsilon != current_eps) {
      flush();
      current_eps = row.epsilon;
      best_family = row.dist;
      best_delta = *row.delta_closed;
    } else if (*row.delta_closed < best_delta) {
      best_family = row.dist;
      best_delta = *row.delta_closed;
    }
  }
  flush();
}

}  // namespace paca::tools
