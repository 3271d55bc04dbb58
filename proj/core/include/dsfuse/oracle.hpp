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

#ifndef DSFUSE_ORACLE_HPP_
#define DSFUSE_ORACLE_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dsfuse/frame.hpp"
#include "dsfuse/mass.hpp"

namespace dsfuse {

// Independent n-way evaluation of Dempster's rule. It enumerates the full
// Cartesian product of focal tuples in exact rational arithmetic and
// normalizes once, so it shares nothing with the pairwise fold in fusion.hpp.

using Rational = boost::multiprecision::cpp_rational;

// Upper bound on the number of focal tuples the oracle will enumerate.
inline constexpr std::uint64_t kOracleTupleCap = 10'000'000;

struct ExactFocal {
  Mask mask;
  Rational mass;
};

struct ExactMass {
  Frame frame;
  std::vector<ExactFocal> focals;  // ascending mask, masses > 0
};

struct ExactFusion {
  ExactMass result;
  Rational conflict;  // joint conflict mass relative to the total weight
  std::uint64_t tuples;
};

// Parses a plain decimal ("0.45", "-1.5e-3") into an exact rational.
Rational ParseDecimal(std::string_view text);
// The shortest decimal that round-trips to `value`, as an exact rational.
Rational ExactDecimal(double value);

ExactMass ToExact(const MassFunction& m);
// {focal: weight, Θ: 1 − weight} computed exactly.
ExactMass ExactSimpleSupport(const Subset& focal, const Rational& weight);
MassFunction ToMassFunction(const ExactMass& m);

// Throws kEmptyInput, kFrameMismatch, kExplosionGuard (product of focal
// counts above kOracleTupleCap), or TotalConflictError when every tuple
// intersects to ∅.
ExactFusion OracleFuseAllExact(std::span<const ExactMass> sources);
MassFunction OracleFuseAll(std::span<const MassFunction> sources);

}  // namespace dsfuse

#endif  // DSFUSE_ORACLE_HPP_
