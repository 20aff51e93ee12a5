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

#include "paca/report.h"

#include <cstdio>
#include <stdexcept>
#include <vector>

namespace paca {
namespace {

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string OptNum(const std::optional<double>& v) {
  return v ? Num(*v) : std::string();
}

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else {
      cell += c;
    }
  }
  cells.push_back(cell);
  return cells;
}

std::optional<double> ParseOpt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stod(s);
}

}  // namespace

std::string ToCsvRow(const PrivacyReport& r) {
  std::string out;
  out += r.dist;
  out += ',' + Num(r.sigma);
  out += ',' + Num(r.epsilon);
  out += ',' + OptNum(r.x0);
  out += ',' + r.domain;
  out += ',' + std::to_string(r.k);
  out += ',' + r.regime;
  out += ',' + OptNum(r.delta_closed);
  out += ',' + OptNum(r.delta_general);
  out += ',' + OptNum(r.delta_mc);
  out += ',' + OptNum(r.mc_stderr);
  out += ',' + std::to_string(r.mc_n);
  out += ',' + std::to_string(r.seed);
  return out;
}

PrivacyReport ParseCsvRow(const std::string& line) {
  const auto cells = SplitCsv(line);
  if (cells.size() != 13) {
    throw std::invalid_argument("report row must have 13 cells");
  }
  PrivacyReport r;
  r.dist = cells[0];
  r.sigma = std::stod(cells[1]);
  r.epsilon = std::stod(cells[2]);
  r.x0 = ParseOpt(cells[3]);
  r.domain = cells[4];
  r.k = std::stoi(cells[5]);
  r.regime = cells[6];
  r.delta_closed = ParseOpt(cells[7]);
  r.delta_general = ParseOpt(cells[8]);
  r.delta_mc = ParseOpt(cells[9]);
  r.mc_stderr = ParseOpt(cells[10]);
  r.mc_n = std::stoull(cells[11]);
  r.seed = std::stoull(cells[12]);
  return r;
}

}  // namespace paca
