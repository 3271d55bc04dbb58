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

#include "dsfuse/fusion.hpp"

#include <map>
#include <optional>

#include "dsfuse/error.hpp"

namespace dsfuse {

namespace {

struct Pooled {
  std::map<Mask, double> sums;  // non-empty intersections only
  double conflict = 0.0;
};

// Accumulates every cross-product cell, in canonical cell order, so that the
// traced and untraced paths produce bit-identical sums.
Pooled Pool(const MassFunction& m1, const MassFunction& m2,
            std::vector<CombinationCell>* cells) {
  RequireSameFrame(m1.frame(), m2.frame());
  const Frame& frame = m1.frame();
  Pooled pooled;
  if (cells) cells->reserve(m1.focal_count() * m2.focal_count());
  for (const auto& b : m1.entries()) {
    for (const auto& c : m2.entries()) {
      const Mask a = b.mask & c.mask;
      const double product = b.mass * c.mass;
      if (a == 0) {
        pooled.conflict += product;
      } else {
        pooled.sums[a] += product;
      }
      if (cells) {
        cells->push_back({Subset(frame, b.mask), Subset(frame, c.mask),
                          Subset(frame, a), product, b.mass, c.mass});
      }
    }
  }
  return pooled;
}

MassFunction Normalize(const Frame& frame, const Pooled& pooled,
                       std::size_t step) {
  if (pooled.conflict >= kTotalConflictThreshold) {
    throw TotalConflictError(pooled.conflict, step);
  }
  const double scale = 1.0 - pooled.conflict;
  std::vector<MaskedMass> entries;
  entries.reserve(pooled.sums.size());
  for (const auto& [mask, sum] : pooled.sums) {
    entries.push_back({mask, sum / scale});
  }
  return MassFunction::FromMasks(frame, std::move(entries));
}

CombinationTrace TracedStep(const MassFunction& m1, const MassFunction& m2,
                            std::size_t step) {
  std::vector<CombinationCell> cells;
  Pooled pooled = Pool(m1, m2, &cells);
  MassFunction result = Normalize(m1.frame(), pooled, step);
  return CombinationTrace{std::move(cells), pooled.conflict, std::move(result)};
}

}  // namespace

double Conflict(const MassFunction& m1, const MassFunction& m2) {
  RequireSameFrame(m1.frame(), m2.frame());
  double k = 0.0;
  for (const auto& b : m1.entries()) {
    for (const auto& c : m2.entries()) {
      if ((b.mask & c.mask) == 0) k += b.mass * c.mass;
    }
  }
  return k;
}

MassFunction Combine(const MassFunction& m1, const MassFunction& m2) {
  return Normalize(m1.frame(), Pool(m1, m2, nullptr), 0);
}

CombinationTrace CombineTraced(const MassFunction& m1, const MassFunction& m2) {
  return TracedStep(m1, m2, 0);
}

FusionReport FuseAll(std::span<const MassFunction> sources) {
  if (sources.empty()) {
    throw Error(ErrorCode::kEmptyInput, "fusion needs at least one source");
  }
  for (const auto& s : sources) RequireSameFrame(sources.front().frame(), s.frame());

  std::vector<CombinationTrace> steps;
  std::vector<double> conflicts;
  steps.reserve(sources.size() - 1);
  conflicts.reserve(sources.size() - 1);
  std::optional<MassFunction> acc = sources.front();
  for (std::size_t i = 1; i < sources.size(); ++i) {
    CombinationTrace trace = TracedStep(*acc, sources[i], i);
    acc = trace.result;
    conflicts.push_back(trace.conflict_k);
    steps.push_back(std::move(trace));
  }
  return FusionReport{std::move(steps), std::move(*acc), std::move(conflicts)};
}

}  // namespace dsfuse
