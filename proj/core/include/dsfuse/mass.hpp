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

#ifndef DSFUSE_MASS_HPP_
#define DSFUSE_MASS_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dsfuse/frame.hpp"

namespace dsfuse {

// Tolerance on |Σ m − 1| accepted at construction.
inline constexpr double kNormalizationTolerance = 1e-9;

struct FocalElement {
  Subset subset;
  double mass;
};

// Focal entry in mask form; the representation used by the combination
// kernels.
struct MaskedMass {
  Mask mask;
  double mass;

  friend bool operator==(const MaskedMass&, const MaskedMass&) = default;
};

// A validated basic probability assignment. Only focal elements are stored,
// sorted by ascending mask; m(∅) is zero by construction.
class MassFunction {
 public:
  // Duplicate subsets are summed and zero-mass entries dropped.
  // Errors: kFrameMismatch, kNegativeMass, kNonFiniteMass, kEmptySetMass,
  // kNotNormalized.
  static MassFunction FromEntries(const Frame& frame,
                                  std::span<const std::pair<Subset, double>> entries);
  static MassFunction FromEntries(
      const Frame& frame, std::initializer_list<std::pair<Subset, double>> entries);
  // Same validation as FromEntries, on raw masks.
  static MassFunction FromMasks(const Frame& frame,
                                std::vector<MaskedMass> entries);

  const Frame& frame() const noexcept { return frame_; }
  std::span<const MaskedMass> entries() const noexcept { return entries_; }
  std::size_t focal_count() const noexcept { return entries_.size(); }

  std::vector<FocalElement> FocalElements() const;
  // m(a); zero when a is not focal. Throws kFrameMismatch.
  double MassOf(const Subset& a) const;
  double MassOfMask(Mask mask) const noexcept;

  // Same frame and bit-identical focal entries.
  friend bool operator==(const MassFunction& a, const MassFunction& b) noexcept {
    return a.frame_ == b.frame_ && a.entries_ == b.entries_;
  }

 private:
  MassFunction(Frame frame, std::vector<MaskedMass> entries)
      : frame_(std::move(frame)), entries_(std::move(entries)) {}

  Frame frame_;
  std::vector<MaskedMass> entries_;
};

MassFunction MassFromEntries(const Frame& frame,
                             std::span<const std::pair<Subset, double>> entries);

// Total ignorance: m(Θ) = 1.
MassFunction Vacuous(const Frame& frame);

// {focal: weight, Θ: 1 − weight}; the Θ entry is omitted when weight is 1.
// Errors: kEmptyFocal, kFocalIsFullFrame, kWeightOutOfRange.
MassFunction SimpleSupport(const Subset& focal, double weight);

double Belief(const MassFunction& m, const Subset& a);
double Plausibility(const MassFunction& m, const Subset& a);
Subset Core(const MassFunction& m);
std::vector<FocalElement> FocalElements(const MassFunction& m);

}  // namespace dsfuse

#endif  // DSFUSE_MASS_HPP_
