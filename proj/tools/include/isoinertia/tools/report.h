// Copyright 2026 The isoinertia Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ISOINERTIA_TOOLS_REPORT_H_
#define ISOINERTIA_TOOLS_REPORT_H_

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "isoinertia/inequalities.h"
#include "isoinertia/optimizer.h"
#include "isoinertia/parallel.h"
#include "isoinertia/stekloff.h"

namespace isoinertia::tools {

using Json = nlohmann::ordered_json;

inline constexpr char kToolVersion[] = "0.1.0";

Json ToJson(const VecX& v);
Json ToJson(const MatX& m);
Json ToJson(const MomentSummary& m);
Json ToJson(const InequalityReport& r);
Json ToJson(const ExpansionFit& fit);
Json ToJson(const ConcavityReport& r);
Json ToJson(const StekloffBounds& b);
Json ToJson(const ChainLink& link);
Json ToJson(const StekloffChainReport& r);
Json ToJson(const StationarityReport& r);
// Summary plus the full iterate list.
Json ToJson(const OptimizationTrace& trace);

// Run report envelope: tool version, command echo, results, summary and the
// wall-clock time (the only field that varies between identical runs).
Json MakeRunReport(const std::vector<std::string>& command, Json results,
                   Json summary, double wall_clock_seconds);

// Comma-separated table with a header row. Numbers are printed with 17
// significant digits.
class Table {
 public:
  explicit Table(std::vector<std::string> header);

  void AddRow(std::vector<std::string> cells);
  void Write(std::ostream& out) const;

  static std::string Number(double value);

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace isoinertia::tools

#endif  // ISOINERTIA_TOOLS_REPORT_H_
