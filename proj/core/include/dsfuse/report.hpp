// Copyright 2026 The dsfuse Authors.
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

#ifndef DSFUSE_REPORT_HPP_
#define DSFUSE_REPORT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "dsfuse/fusion.hpp"
#include "dsfuse/scenario.hpp"

namespace dsfuse {

inline constexpr int kDefaultPrecision = 4;
inline constexpr int kMinPrecision = 1;
inline constexpr int kMaxPrecision = 12;

// Everything a `fuse` run prints. Rendering reads these values and never
// recomputes them.
struct RunReport {
  std::string scenario_name;
  std::string scenario_hash;
  std::vector<std::string> source_names;
  std::vector<std::string> descriptions;
  FusionReport fusion;
  Prediction prediction;
};

// Throws kConditionOutOfRange or TotalConflictError.
RunReport MakeRunReport(const Scenario& s, std::size_t condition);

// Fixed-point with `precision` decimals; throws kValidationError outside
// [kMinPrecision, kMaxPrecision].
std::string FormatFixed(double value, int precision);
// Up to 12 significant digits, as used in CSV output.
std::string FormatCsvNumber(double value);

// "B (back)" or "L+B (left/back)" when descriptions exist, else "L+B".
std::string DescribeSubset(const Subset& s,
                           const std::vector<std::string>& descriptions);

// Cross-product table: left focal elements as rows, right focal elements as
// columns, intersection and product in each cell, then k and the normalized
// result. Byte-identical for identical input.
std::string RenderTrace(const CombinationTrace& trace, int precision);

std::string RenderRunTable(const RunReport& report, bool with_trace, int precision);
std::string RenderRunJson(const RunReport& report);
std::string RenderRunCsv(const RunReport& report, bool with_trace);

std::string RenderSweepTable(const Scenario& s,
                             const std::vector<ConditionOutcome>& outcomes,
                             int precision);
// Header: condition,winner,winner_mass,winner_belief,winner_plausibility.
// Failed conditions are omitted.
std::string RenderSweepCsv(const std::vector<ConditionOutcome>& outcomes);
std::string RenderSweepJson(const Scenario& s,
                            const std::vector<ConditionOutcome>& outcomes);

// Long-form plot data, header condition,motions,focal,mass: the combined
// masses after folding the first `motions` sources of every condition.
std::string RenderPlotData(const Scenario& s);

}  // namespace dsfuse

#endif  // DSFUSE_REPORT_HPP_
