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

#include "dsfuse/mass.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dsfuse/error.hpp"

namespace dsfuse {

namespace {

std::string Describe(double value) {
  std::ostringstream os;
  os.precision(17);
  os << value;
  return os.str();
}

}  // namespace

MassFunction MassFunction::FromMasks(const Frame& frame,
                                     std::vector<MaskedMass> entries) {
  for (const auto& e : entries) {
    if ((e.mask & ~frame.full_mask()) != 0) {
      throw Error(ErrorCode::kFrameMismatch,
                  "focal mask has members outside the frame");
    }
    if (!std::isfinite(e.mass)) {
      throw Error(ErrorCode::kNonFiniteMass, "mass is not finite");
    }
    if (e.mass < 0.0) {
      throw Error(ErrorCode::kNegativeMass,
                  "negative mass " + Describe(e.mass));
    }
    if (e.mask == 0 && e.mass > 0.0) {
      throw Error(ErrorCode::kEmptySetMass,
                  "the empty set carries mass " + Describe(e.mass));
    }
  }

  std::stable_sort(entries.begin(), entries.end(),
                   [](const MaskedMass& a, const MaskedMass& b) {
                     return a.mask < b.mask;
                   });
  std::vector<MaskedMass> merged;
  merged.reserve(entries.size());
  for (const auto& e : entries) {
    if (!merged.empty() && merged.back().mask == e.mask) {
      merged.back().mass += e.mass;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const MaskedMass& e) { return e.mass == 0.0; });

  double total = 0.0;
  for (const auto& e : merged) total += e.mass;
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw Error(ErrorCode::kNotNormalized,
                "masses sum to " + Describe(total) + ", expected 1");
  }
  return MassFunction(frame, std::move(merged));
}

MassFunction MassFunction::FromEntries(
    const Frame& frame, std::span<const std::pair<Subset, double>> entries) {
  std::vector<MaskedMass> masked;
  masked.reserve(entries.size());
  for (const auto& [subset, mass] : entries) {
    RequireSameFrame(frame, subset.frame());
    masked.push_back({subset.mask(), mass});
  }
  return FromMasks(frame, std::move(masked));
}

MassFunction MassFunction::FromEntries(
    const Frame& frame,
    std::initializer_list<std::pair<Subset, double>> entries) {
  return FromEntries(frame, std::span(entries.begin(), entries.size()));
}

std::vector<FocalElement> MassFunction::FocalElements() const {
  std::vector<FocalElement> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) {
    out.push_back({Subset(frame_, e.mask), e.mass});
  }
  return out;
}

double MassFunction::MassOf(const Subset& a) const {
  RequireSameFrame(frame_, a.frame());
  return MassOfMask(a.mask());
}

double MassFunction::MassOfMask(Mask mask) const noexcept {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), mask,
      [](const MaskedMass& e, Mask m) { return e.mask < m; });
  return it != entries_.end() && it->mask == mask ? it->mass : 0.0;
}

MassFunction MassFromEntries(const Frame& frame,
                             std::span<const std::pair<Subset, double>> entries) {
  return MassFunction::FromEntries(frame, entries);
}

MassFunction Vacuous(const Frame& frame) {
  return MassFunction::FromMasks(frame, {{frame.full_mask(), 1.0}});
}

MassFunction SimpleSupport(const Subset& focal, double weight) {
  if (focal.empty()) {
    throw Error(ErrorCode::kEmptyFocal, "simple support needs a non-empty focal set");
  }
  if (focal.full()) {
    throw Error(ErrorCode::kFocalIsFullFrame,
                "simple support on Θ is ambiguous; use Vacuous instead");
  }
  if (!(weight > 0.0 && weight <= 1.0)) {
    throw Error(ErrorCode::kWeightOutOfRange,
                "support weight " + Describe(weight) + " is outside (0, 1]");
  }
  const Frame& frame = focal.frame();
  std::vector<MaskedMass> entries{{focal.mask(), weight}};
  if (weight < 1.0) entries.push_back({frame.full_mask(), 1.0 - weight});
  return MassFunction::FromMasks(frame, std::move(entries));
}

double Belief(const MassFunction& m, const Subset& a) {
  RequireSameFrame(m.frame(), a.frame());
  double sum = 0.0;
  for (const auto& e : m.entries()) {
    if ((e.mask & ~a.mask()) == 0) sum += e.mass;
  }
  return sum;
}

double Plausibility(const MassFunction& m, const Subset& a) {
  RequireSameFrame(m.frame(), a.frame());
  double sum = 0.0;
  for (const auto& e : m.entries()) {
    if ((e.mask & a.mask()) != 0) sum += e.mass;
  }
  return sum;
}

Subset Core(const MassFunction& m) {
  Mask core = 0;
  for (const auto& e : m.entries()) core |= e.mask;
  return Subset(m.frame(), core);
}

std::vector<FocalElement> FocalElements(const MassFunction& m) {
  return m.FocalElements();
}

}  // namespace dsfuse
