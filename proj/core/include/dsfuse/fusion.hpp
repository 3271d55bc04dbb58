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

#ifndef DSFUSE_FUSION_HPP_
#define DSFUSE_FUSION_HPP_

#include <span>
#include <vector>

#include "dsfuse/frame.hpp"
#include "dsfuse/mass.hpp"

namespace dsfuse {

// Combination is refused once k reaches this value.
inline constexpr double kTotalConflictThreshold = 1.0 - 1e-9;

// One summand m1(B)·m2(C) of Dempster's rule.
struct CombinationCell {
  Subset left;
  Subset right;
  Subset intersection;
  double product;
  double left_mass;   // m1(B)
  double right_mass;  // m2(C)
};

// Full cross product of two mass functions, the conflict mass k and the
// normalized combination. Cells are ordered by ascending left mask, then
// ascending right mask.
struct CombinationTrace {
  std::vector<CombinationCell> cells;
  double conflict_k;
  MassFunction result;
};

struct FusionReport {
  std::vector<CombinationTrace> steps;  // one per source after the first
  MassFunction final_mass;
  std::vector<double> per_step_conflict;
};

// k = Σ m1(B)·m2(C) over disjoint B, C. Throws kFrameMismatch.
double Conflict(const MassFunction& m1, const MassFunction& m2);

// Dempster's rule with 1/(1−k) normalization.
// Throws TotalConflictError (step 0) or kFrameMismatch.
MassFunction Combine(const MassFunction& m1, const MassFunction& m2);

CombinationTrace CombineTraced(const MassFunction& m1, const MassFunction& m2);

// Left fold: steps[i] = CombineTraced(accumulated, sources[i + 1]).
// Throws kEmptyInput, kFrameMismatch, or TotalConflictError carrying the
// 1-based step at which the fold broke.
FusionReport FuseAll(std::span<const MassFunction> sources);

}  // namespace dsfuse

#endif  // DSFUSE_FUSION_HPP_
