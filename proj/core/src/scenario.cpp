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

#include "dsfuse/scenario.hpp"

#include <future>
#include <set>
#include <utility>

namespace dsfuse {

namespace {

Error Invalid(const std::string& message) {
  return Error(ErrorCode::kValidationError, message);
}

}  // namespace

Scenario::Scenario(Frame frame, std::vector<Motion> motions,
                   std::vector<std::vector<double>> bpa,
                   std::vector<std::string> descriptions, std::string name)
    : frame_(std::move(frame)),
      motions_(std::move(motions)),
      bpa_(std::move(bpa)),
      descriptions_(std::move(descriptions)),
      name_(std::move(name)) {}

Scenario Scenario::Create(Frame frame, std::vector<Motion> motions,
                          std::vector<std::vector<double>> bpa,
                          std::vector<std::string> descriptions,
                          std::string name) {
  if (motions.empty()) throw Invalid("scenario has no evidence sources");
  if (bpa.empty()) throw Invalid("scenario has no conditions");
  std::set<std::string> names;
  for (const auto& m : motions) {
    RequireSameFrame(frame, m.direction.frame());
    if (m.name.empty()) throw Invalid("source name is empty");
    if (!names.insert(m.name).second) {
      throw Invalid("duplicate source name '" + m.name + "'");
    }
    if (m.direction.empty()) {
      throw Invalid("source '" + m.name + "' has an empty focal set");
    }
    if (m.direction.full()) {
      throw Invalid("source '" + m.name + "' supports the whole frame");
    }
  }
  for (std::size_t c = 0; c < bpa.size(); ++c) {
    if (bpa[c].size() != motions.size()) {
      throw Invalid("condition " + std::to_string(c + 1) + " has " +
                    std::to_string(bpa[c].size()) + " weights for " +
                    std::to_string(motions.size()) + " sources");
    }
    for (std::size_t i = 0; i < bpa[c].size(); ++i) {
      const double w = bpa[c][i];
      if (!(w > 0.0 && w <= 1.0)) {
        throw Invalid("weight of source '" + motions[i].name +
                      "' in condition " + std::to_string(c + 1) +
                      " is outside (0, 1]");
      }
    }
  }
  if (!descriptions.empty() && descriptions.size() != frame.size()) {
    throw Invalid("descriptions must name every frame label");
  }
  return Scenario(std::move(frame), std::move(motions), std::move(bpa),
                  std::move(descriptions), std::move(name));
}

double Scenario::weight(std::size_t condition, std::size_t motion) const {
  if (condition < 1 || condition > bpa_.size()) {
    throw Error(ErrorCode::kConditionOutOfRange,
                "condition " + std::to_string(condition) + " is outside 1.." +
                    std::to_string(bpa_.size()));
  }
  return bpa_[condition - 1].at(motion);
}

bool operator==(const Scenario& a, const Scenario& b) {
  if (!a.frame_.SameLabels(b.frame_)) return false;
  if (a.descriptions_ != b.descriptions_ || a.bpa_ != b.bpa_) return false;
  if (a.motions_.size() != b.motions_.size()) return false;
  for (std::size_t i = 0; i < a.motions_.size(); ++i) {
    if (a.motions_[i].name != b.motions_[i].name ||
        a.motions_[i].direction.mask() != b.motions_[i].direction.mask()) {
      return false;
    }
  }
  return true;
}

Scenario BuiltinTakrawScenario() {
  Frame frame = MakeFrame({"F", "L", "R", "B"});
  const Subset front = frame.SubsetOf({"F"});
  const Subset left_back = frame.SubsetOf({"L", "B"});
  const Subset right_back = frame.SubsetOf({"R", "B"});
  const Subset back = frame.SubsetOf({"B"});

  std::vector<Motion> motions{
      {"left foot moves to front", front},
      {"right foot moves to front", front},
      {"right hand moves to front", front},
      {"left hand moves to front", front},
      {"left foot turning left", left_back},
      {"right foot turning left", left_back},
      {"left foot turning right", right_back},
      {"right foot turning right", right_back},
      {"left foot turning back", back},
      {"right foot turning back", back},
  };

  // Per-motion weights for conditions 1..9. The source table prints a
  // tenth value on some rows; only the first nine are conditions.
  const double by_motion[10][9] = {
      {0.75, 0.55, 0.55, 0.55, 0.45, 0.45, 0.45, 0.45, 0.45},
      {0.75, 0.75, 0.55, 0.45, 0.45, 0.45, 0.45, 0.45, 0.65},
      {0.55, 0.55, 0.45, 0.45, 0.45, 0.45, 0.45, 0.65, 0.65},
      {0.55, 0.45, 0.45, 0.45, 0.45, 0.45, 0.65, 0.65, 0.75},
      {0.45, 0.45, 0.45, 0.45, 0.65, 0.65, 0.65, 0.75, 0.75},
      {0.45, 0.45, 0.45, 0.65, 0.65, 0.75, 0.75, 0.55, 0.55},
      {0.45, 0.45, 0.65, 0.65, 0.75, 0.75, 0.55, 0.55, 0.45},
      {0.45, 0.65, 0.65, 0.75, 0.75, 0.55, 0.55, 0.45, 0.45},
      {0.65, 0.65, 0.75, 0.75, 0.55, 0.55, 0.45, 0.45, 0.45},
      {0.65, 0.75, 0.75, 0.55, 0.55, 0.45, 0.45, 0.45, 0.45},
  };
  std::vector<std::vector<double>> bpa(9, std::vector<double>(10));
  for (std::size_t c = 0; c < 9; ++c) {
    for (std::size_t m = 0; m < 10; ++m) bpa[c][m] = by_motion[m][c];
  }

  return Scenario::Create(std::move(frame), std::move(motions), std::move(bpa),
                          {"front", "left", "right", "back"}, "takraw");
}

std::vector<MassFunction> EvidenceFor(const Scenario& s, std::size_t condition) {
  std::vector<MassFunction> out;
  out.reserve(s.motions().size());
  for (std::size_t i = 0; i < s.motions().size(); ++i) {
    out.push_back(SimpleSupport(s.motions()[i].direction, s.weight(condition, i)));
  }
  return out;
}

Prediction Decide(const FusionReport& report, std::size_t condition) {
  const MassFunction& m = report.final_mass;
  const Frame& frame = m.frame();
  std::optional<MaskedMass> best;
  double best_belief = 0.0;
  for (const auto& e : m.entries()) {
    if (e.mask == frame.full_mask()) continue;
    const double bel = Belief(m, Subset(frame, e.mask));
    // Entries ascend by mask, so keeping the incumbent on a full tie
    // leaves the smaller mask in place.
    if (!best || e.mass > best->mass ||
        (e.mass == best->mass && bel > best_belief)) {
      best = e;
      best_belief = bel;
    }
  }
  if (!best) {
    throw Error(ErrorCode::kNoCandidate,
                "combined evidence supports no proper subset of the frame");
  }
  Subset winner(frame, best->mask);
  return Prediction{condition,   m,           winner,
                    best->mass,  best_belief, Plausibility(m, winner),
                    report.per_step_conflict};
}

Prediction Predict(const Scenario& s, std::size_t condition) {
  const std::vector<MassFunction> evidence = EvidenceFor(s, condition);
  return Decide(FuseAll(evidence), condition);
}

namespace {

ConditionOutcome Evaluate(const Scenario& s, std::size_t condition) {
  ConditionOutcome out{condition, std::nullopt, std::nullopt};
  try {
    out.prediction = Predict(s, condition);
  } catch (const Error& e) {
    out.failure = ConditionFailure{e.code(), e.what()};
  }
  return out;
}

}  // namespace

std::vector<ConditionOutcome> Sweep(const Scenario& s, SweepOptions options) {
  std::vector<ConditionOutcome> out;
  out.reserve(s.condition_count());
  if (!options.parallel) {
    for (std::size_t c = 1; c <= s.condition_count(); ++c) {
      out.push_back(Evaluate(s, c));
    }
    return out;
  }
  std::vector<std::future<ConditionOutcome>> pending;
  pending.reserve(s.condition_count());
  for (std::size_t c = 1; c <= s.condition_count(); ++c) {
    pending.push_back(std::async(std::launch::async, Evaluate, std::cref(s), c));
  }
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace dsfuse
