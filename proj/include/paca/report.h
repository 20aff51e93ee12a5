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

#ifndef PACA_REPORT_H_
#define PACA_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>

namespace paca {

// One (epsilon, delta) result row. Optional fields serialize as empty CSV
// cells. Field names mirror the CSV schema below.
struct PrivacyReport {
  std::string dist;    // noise kind label
  double sigma = 0.0;  // standard deviation of theta_i(0)
  double epsilon = 0.0;
  std::optional<double> x0;  // absent for whole-line priors
  std::string domain = "whole-line";
  int k = 0;
  std::string regime = "independent";
  std::optional<double> delta_closed;   // whole-line closed form
  std::optional<double> delta_general;  // bounded-domain set integral
  std::optional<double> delta_mc;
  std::optional<double> mc_stderr;
  std::uint64_t mc_n = 0;
  std::uint64_t seed = 0;
};

// Exact column schema for sweep outputs.
inline constexpr const char* kCsvHeader =
    "dist,sigma,epsilon,x0,domain,k,regime,delta_closed,delta_general,"
    "delta_mc,stderr,n,seed";

std::string ToCsvRow(const PrivacyReport& report);

// Strict inverse of ToCsvRow (tests round-trip every emitted row).
PrivacyReport ParseCsvRow(const std::string& line);

}  // namespace paca

#endif  // PACA_REPORT_H_
