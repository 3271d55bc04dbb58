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

#ifndef DSFUSE_SCENARIO_IO_HPP_
#define DSFUSE_SCENARIO_IO_HPP_

#include <string>
#include <string_view>

#include "dsfuse/scenario.hpp"

namespace dsfuse {

// Scenario documents are UTF-8 JSON:
//
//   {
//     "name": "takraw",                      (optional)
//     "frame": ["F", "L", "R", "B"],
//     "descriptions": ["front", ...],        (optional, one per label)
//     "sources": [
//       {"name": "left foot moves to front", "focal": ["F"],
//        "bpa": [0.75, 0.55, ...]},          (one weight per condition)
//       ...
//     ]
//   }
//
// Errors: ParseError (malformed JSON, with line and column), kSchemaError
// (missing or mistyped fields, unknown keys, ragged bpa lists) and
// kValidationError (bad labels or weights, duplicate source names).
Scenario ParseScenario(std::string_view text);

// Pretty-printed document; ParseScenario(EmitScenario(s)) == s.
std::string EmitScenario(const Scenario& s);

// 64-bit FNV-1a of the emitted document, as 16 hex digits.
std::string ScenarioHash(const Scenario& s);

}  // namespace dsfuse

#endif  // DSFUSE_SCENARIO_IO_HPP_
