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

#ifndef DSFUSE_TESTS_TEST_UTIL_HPP_
#define DSFUSE_TESTS_TEST_UTIL_HPP_

// Random generators shared by the property-style tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dsfuse/frame.hpp"
#include "dsfuse/mass.hpp"

namespace dsfuse::testing {

inline Frame LetterFrame(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, char('a' + i)));
  return MakeFrame(labels);
}

inline Mask RandomNonEmptyMask(const Frame& frame, std::mt19937_64& rng) {
  std::uniform_int_distribution<Mask> pick(1, frame.full_mask());
  return pick(rng);
}

// A mass function with 1..max_focals focal elements and strictly positive
// masses.
inline MassFunction RandomMass(const Frame& frame, std::mt19937_64& rng,
                               std::size_t max_focals = 5) {
  std::uniform_int_distribution<std::size_t> count(1, max_focals);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::vector<MaskedMass> entries;
  double total = 0.0;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    entries.push_back({RandomNonEmptyMask(frame, rng), weight(rng)});
    total += entries.back().mass;
  }
  for (auto& e : entries) e.mass /= total;
  return MassFunction::FromMasks(frame, std::move(entries));
}

// Masses that are exact multiples of 1/1000, so the oracle sees short
// decimals.
inline MassFunction RandomMilliMass(const Frame& frame, std::mt19937_64& rng,
                                    std::size_t max_focals = 3) {
  std::uniform_int_distribution<std::size_t> count(1, max_focals);
  const std::size_t n = count(rng);
  std::vector<int> cuts{0, 1000};
  std::uniform_int_distribution<int> cut(1, 999);
  while (cuts.size() < n + 1) {
    int c = cut(rng);
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<MaskedMass> entries;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const int milli = cuts[i + 1] - cuts[i];
    entries.push_back({RandomNonEmptyMask(frame, rng), milli / 1000.0});
  }
  return MassFunction::FromMasks(frame, std::move(entries));
}

}  // namespace dsfuse::testing

#endif  // DSFUSE_TESTS_TEST_UTIL_HPP_
