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

#ifndef DSFUSE_SCENARIO_HPP_
#define DSFUSE_SCENARIO_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dsfuse/error.hpp"
#include "dsfuse/frame.hpp"
#include "dsfuse/fusion.hpp"
#include "dsfuse/mass.hpp"

namespace dsfuse {

// An evidence source: a named observation supporting one direction set.
struct Motion {
  std::string name;
  Subset direction;
};

// Motions plus a weight matrix indexed [condition][motion]. Each condition
// turns every motion into a simple-support mass with that weight.
class Scenario {
 public:
  // Validates: at least one motion and one condition, every direction a
  // non-empty proper subset of `frame`, every row as long as the motion
  // list, every weight in (0, 1], unique motion names, and `descriptions`
  // either empty or one per frame label. Throws kValidationError or
  // kFrameMismatch.
  static Scenario Create(Frame frame, std::vector<Motion> motions,
                         std::vector<std::vector<double>> bpa,
                         std::vector<std::string> descriptions = {},
                         std::string name = {});

  const Frame& frame() const noexcept { return frame_; }
  const std::vector<Motion>& motions() const noexcept { return motions_; }
  const std::vector<std::vector<double>>& bpa() const noexcept { return bpa_; }
  std::size_t condition_count() const noexcept { return bpa_.size(); }
  // Human-readable names for frame labels; may be empty.
  const std::vector<std::string>& descriptions() const noexcept {
    return descriptions_;
  }
  const std::string& name() const noexcept { return name_; }

  // Weight of `motion` (0-based) under `condition` (1-based).
  double weight(std::size_t condition, std::size_t motion) const;

  // Structural equality: labels, descriptions, motion names, direction
  // masks and weights (bit-exact). Frame identity is not compared.
  friend bool operator==(const Scenario& a, const Scenario& b);

 private:
  Scenario(Frame frame, std::vector<Motion> motions,
           std::vector<std::vector<double>> bpa,
           std::vector<std::string> descriptions, std::string name);

  Frame frame_;
  std::vector<Motion> motions_;
  std::vector<std::vector<double>> bpa_;
  std::vector<std::string> descriptions_;
  std::string name_;
};

struct Prediction {
  std::size_t condition;  // 1-based
  MassFunction final_mass;
  Subset winner;
  double winner_mass;
  double winner_belief;
  double winner_plausibility;
  std::vector<double> steps_conflict;
};

struct ConditionFailure {
  ErrorCode code;
  std::string message;
};

struct ConditionOutcome {
  std::size_t condition;
  std::optional<Prediction> prediction;
  std::optional<ConditionFailure> failure;

  bool ok() const noexcept { return prediction.has_value(); }
};

// Frame (F, L, R, B) with ten motions and nine conditions of weights.
Scenario BuiltinTakrawScenario();

// Throws kConditionOutOfRange.
std::vector<MassFunction> EvidenceFor(const Scenario& s, std::size_t condition);

// Picks the focal element of largest mass, excluding Θ. Ties go to the
// higher belief, then to the smaller mask. Throws kNoCandidate when Θ is
// the only focal element.
Prediction Decide(const FusionReport& report, std::size_t condition);

// Throws kConditionOutOfRange or TotalConflictError.
Prediction Predict(const Scenario& s, std::size_t condition);

struct SweepOptions {
  bool parallel = false;
};

// One outcome per condition, in condition order; a failing condition does
// not stop the others.
std::vector<ConditionOutcome> Sweep(const Scenario& s, SweepOptions options = {});

}  // namespace dsfuse

#endif  // DSFUSE_SCENARIO_HPP_
