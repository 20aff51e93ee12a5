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

#include "config.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "paca/version.h"

namespace paca::tools {
namespace {

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double ParseDoubleValue(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": not a number: '" + text + "'");
  }
}

std::vector<std::string> SplitList(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(text);
  while (std::getline(in, cell, sep)) out.push_back(Trim(cell));
  return out;
}

}  // namespace

Config Config::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return FromString(buf.str());
}

Config Config::FromString(const std::string& text) {
  Config config;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value', got '" + line + "'");
    }
    const std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    }
    if (config.entries_.count(key)) {
      throw ConfigError(key + ": duplicate key");
    }
    config.entries_[key] = value;
  }
  return config;
}

bool Config::Has(const std::string& key) const {
  return entries_.count(key) != 0;
}

void Config::Set(const std::string& key, const std::string& value) {
  entries_[key] = value;
}

std::string Config::GetString(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw ConfigError(key + ": required key missing");
  return it->second;
}

std::string Config::GetString(const std::string& key,
                              const std::string& fallback) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? fallback : it->second;
}

double Config::GetDouble(const std::string& key) const {
  return ParseDoubleValue(key, GetString(key));
}

double Config::GetDouble(const std::string& key, double fallback) const {
  return Has(key) ? GetDouble(key) : fallback;
}

int Config::GetInt(const std::string& key) const {
  const double v = GetDouble(key);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v) {
    throw ConfigError(key + ": expected an integer");
  }
  return i;
}

int Config::GetInt(const std::string& key, int fallback) const {
  return Has(key) ? GetInt(key) : fallback;
}

std::uint64_t Config::GetUint64(const std::string& key,
                                std::uint64_t fallback) const {
  if (!Has(key)) return fallback;
  try {
    return std::stoull(GetString(key));
  } catch (const std::exception&) {
    throw ConfigError(key + ": not an unsigned integer");
  }
}

std::vector<double> Config::GetDoubleList(const std::string& key) const {
  const std::string text = GetString(key);
  std::vector<double> values;
  if (text.find(':') != std::string::npos) {
    const auto parts = SplitList(text, ':');
    if (parts.size() != 3) {
      throw ConfigError(key + ": range must be start:stop:step");
    }
    const double start = ParseDoubleValue(key, parts[0]);
    const double stop = ParseDoubleValue(key, parts[1]);
    const double step = ParseDoubleValue(key, parts[2]);
    if (!(step > 0.0) || stop < start) {
      throw ConfigError(key + ": range must increase with a positive step");
    }
    for (int i = 0;; ++i) {
      const double v = start + i * step;
      if (v > stop + 1e-9 * step) break;
      values.push_back(v);
    }
  } else {
    for (const std::string& cell : SplitList(text, ',')) {
      if (!cell.empty()) values.push_back(ParseDoubleValue(key, cell));
    }
  }
  if (values.empty()) throw ConfigError(key + ": empty list");
  return values;
}

std::vector<std::string> Config::GetStringList(const std::string& key) const {
  std::vector<std::string> out;
  for (const std::string& cell : SplitList(GetString(key), ',')) {
    if (!cell.empty()) out.push_back(cell);
  }
  return out;
}

void Config::RequireOnly(const std::vector<std::string>& allowed) const {
  for (const auto& [key, value] : entries_) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError(key + ": unknown key for this command");
    }
  }
}

std::string Config::CanonicalText() const {
  std::string out;
  for (const auto& [key, value] : entries_) {
    out += key + " = " + value + "\n";
  }
  return out;
}

std::uint64_t Fnv1a64(const std::string& text) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string ConfigDigest(const Config& config) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(
                    Fnv1a64(config.CanonicalText())));
  return buf;
}

NoiseKind ParseNoiseKindValue(const std::string& key,
                              const std::string& value) {
  if (value == "gaussian") return NoiseKind::kGaussian;
  if (value == "laplace") return NoiseKind::kLaplace;
  if (value == "uniform") return NoiseKind::kUniform;
  throw ConfigError(key + ": unknown noise kind '" + value +
                    "' (gaussian|laplace|uniform)");
}

RegimeKind ParseRegimeValue(const std::string& key,
                            const std::string& value) {
  const auto kind = ParseRegimeKind(value);
  if (!kind) {
    throw ConfigError(key + ": unknown regime '" + value +
                      "' (independent|partial|full)");
  }
  return *kind;
}

DomainSet ParseDomainValue(const std::string& key, const std::string& value) {
  if (value == "whole-line") return DomainSet::WholeLine();
  std::vector<Interval> pieces;
  for (const std::string& part : SplitList(value, ';')) {
    if (part.size() < 2 || part.front() != '[' || part.back() != ']') {
      throw ConfigError(key + ": expected 'whole-line' or '[lo..hi]' pieces");
    }
    const std::string body = part.substr(1, part.size() - 2);
    const auto dots = body.find("..");
    if (dots == std::string::npos) {
      throw ConfigError(key + ": interval must look like [lo..hi]");
    }
    const double lo = ParseDoubleValue(key, Trim(body.substr(0, dots)));
    const double hi = ParseDoubleValue(key, Trim(body.substr(dots + 2)));
    if (lo > hi) throw ConfigError(key + ": interval has lo > hi");
    pieces.push_back(Interval{lo, hi});
  }
  if (pieces.empty()) throw ConfigError(key + ": empty domain");
  return DomainSet::FromIntervals(std::move(pieces));
}

std::vector<std::pair<int, int>> ParseEdgeListValue(const std::string& key,
                                                    const std::string& value) {
  std::vector<std::pair<int, int>> edges;
  for (const std::string& part : SplitList(value, ';')) {
    const auto dash = part.find('-');
    if (dash == std::string::npos) {
      throw ConfigError(key + ": edges look like 'a-b;c-d'");
    }
    try {
      edges.emplace_back(std::stoi(part.substr(0, dash)),
                         std::stoi(part.substr(dash + 1)));
    } catch (const std::exception&) {
      throw ConfigError(key + ": bad edge '" + part + "'");
    }
  }
  if (edges.empty()) throw ConfigError(key + ": empty edge list");
  return edges;
}

Graph BuildGraph(const Config& config, RngStream& rng) {
  const int n = config.GetInt("graph.n");
  if (n < 3) throw ConfigError("graph.n: must be at least 3");
  if (config.Has("graph.edges")) {
    return Graph(n,
                 ParseEdgeListValue("graph.edges",
                                    config.GetString("graph.edges")));
  }
  const std::string kind = config.GetString("graph.kind", "random");
  if (kind == "path") return Graph::Path(n);
  if (kind == "star") return Graph::Star(n);
  if (kind == "complete") return Graph::Complete(n);
  if (kind != "random") {
    throw ConfigError("graph.kind: unknown kind '" + kind +
                      "' (random|path|star|complete)");
  }
  const double p = config.GetDouble("graph.p");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ConfigError("graph.p: must be in [0, 1]");
  }
  return Graph::RandomConnected(n, p, rng);
}

NoiseSchedule BuildSchedule(const Config& config) {
  const std::string kind = config.GetString("schedule.kind");
  const double sigma0 = config.GetDouble("schedule.sigma0");
  const double rho = config.GetDouble("schedule.rho");
  const int horizon = config.GetInt("schedule.K");
  if (!(sigma0 >= 0.0)) throw ConfigError("schedule.sigma0: must be >= 0");
  if (!(rho > 0.0 && rho < 1.0)) {
    throw ConfigError("schedule.rho: must be in (0, 1)");
  }
  const NoiseKind base = ParseNoiseKindValue(
      "schedule.dist", config.GetString("schedule.dist", "gaussian"));
  if (kind == "independent") {
    if (horizon < 0) throw ConfigError("schedule.K: must be >= 0");
    return NoiseSchedule::IndependentDecaying(base, sigma0, rho, horizon);
  }
  if (kind == "telescoping") {
    if (horizon < 1) throw ConfigError("schedule.K: must be >= 1");
    return NoiseSchedule::TelescopingZeroSum(base, sigma0, rho, horizon);
  }
  throw ConfigError("schedule.kind: unknown kind '" + kind +
                    "' (independent|telescoping)");
}

std::vector<double> BuildInitialStates(const Config& config, int n) {
  if (config.Has("x0")) {
    const auto values = config.GetDoubleList("x0");
    if (static_cast<int>(values.size()) != n) {
      throw ConfigError("x0: expected " + std::to_string(n) + " values, got " +
                        std::to_string(values.size()));
    }
    return values;
  }
  if (config.Has("x0.lo") && config.Has("x0.hi")) {
    const double lo = config.GetDouble("x0.lo");
    const double hi = config.GetDouble("x0.hi");
    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) {
      values[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    }
    return values;
  }
  throw ConfigError("x0: provide either 'x0 = v1,...,vn' or x0.lo and x0.hi");
}

std::string ManifestJson(const RunManifest& manifest) {
  std::string out = "{\n";
  out += "  \"tool\": \"paca\",\n";
  out += "  \"version\": \"" + manifest.version + "\",\n";
  out += "  \"seed\": " + std::to_string(manifest.seed) + ",\n";
  out += "  \"config_digest\": \"" + manifest.config_digest + "\",\n";
  out += "  \"timestamp\": \"" + manifest.timestamp + "\",\n";
  out += "  \"outputs\": [";
  for (std::size_t i = 0; i < manifest.outputs.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + manifest.outputs[i] + "\"";
  }
  out += "]\n}\n";
  return out;
}

std::string ResolveOutputPath(const Config& config,
                              const std::string& default_name) {
  std::string path = config.GetString("output.path", default_name);
  if (!path.empty() && path.front() != '/') {
    if (const char* dir = std::getenv("PACA_OUTPUT_DIR")) {
      if (dir[0] != '\0') path = std::string(dir) + "/" + path;
    }
  }
  return path;
}

void WriteTextFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace paca::tools
