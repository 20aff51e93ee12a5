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

#ifndef PACA_TOOLS_CONFIG_H_
#define PACA_TOOLS_CONFIG_H_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "paca/distribution.h"
#include "paca/domain.h"
#include "paca/graph.h"
#include "paca/info_set.h"
#include "paca/noise_schedule.h"

namespace paca::tools {

// A config problem always names the offending key.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Flat key = value experiment config with dotted keys. '#' starts a comment;
// blank lines are ignored; unknown keys are rejected by RequireOnly.
class Config {
 public:
  static Config FromFile(const std::string& path);
  static Config FromString(const std::string& text);

  bool Has(const std::string& key) const;
  void Set(const std::string& key, const std::string& value);

  std::string GetString(const std::string& key) const;
  std::string GetString(const std::string& key,
                        const std::string& fallback) const;
  double GetDouble(const std::string& key) const;
  double GetDouble(const std::string& key, double fallback) const;
  int GetInt(const std::string& key) const;
  int GetInt(const std::string& key, int fallback) const;
  std::uint64_t GetUint64(const std::string& key,
                          std::uint64_t fallback) const;

  // Comma list ("0.1,0.5") or inclusive range ("0.05:1.0:0.05").
  std::vector<double> GetDoubleList(const std::string& key) const;
  std::vector<std::string> GetStringList(const std::string& key) const;

  // Rejects any present key that is not in `allowed`.
  void RequireOnly(const std::vector<std::string>& allowed) const;

  // Sorted "key = value" lines; the digest input.
  std::string CanonicalText() const;

  const std::map<std::string, std::string>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::string> entries_;
};

std::uint64_t Fnv1a64(const std::string& text);
std::string ConfigDigest(const Config& config);

// Value parsers shared by the commands; all raise ConfigError with the key
// name on bad input.
NoiseKind ParseNoiseKindValue(const std::string& key,
                              const std::string& value);
RegimeKind ParseRegimeValue(const std::string& key, const std::string& value);
DomainSet ParseDomainValue(const std::string& key, const std::string& value);
std::vector<std::pair<int, int>> ParseEdgeListValue(const std::string& key,
                                                    const std::string& value);

// Graph / schedule / x0 assembly from their config keys (validating ranges
// against the keys that carry them).
Graph BuildGraph(const Config& config, RngStream& rng);
NoiseSchedule BuildSchedule(const Config& config);
std::vector<double> BuildInitialStates(const Config& config, int n);

struct RunManifest {
  std::string version;
  std::uint64_t seed = 0;
  std::string config_digest;
  std::string timestamp;
  std::vector<std::string> outputs;
};

std::string ManifestJson(const RunManifest& manifest);

// Output path resolution: explicit path wins; relative paths (and default
// file names) land in $PACA_OUTPUT_DIR when it is set.
std::string ResolveOutputPath(const Config& config,
                              const std::string& default_name);

void WriteTextFile(const std::string& path, const std::string& content);

}  // namespace paca::tools

#endif  // PACA_TOOLS_CONFIG_H_
