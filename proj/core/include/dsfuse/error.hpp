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

#ifndef DSFUSE_ERROR_HPP_
#define DSFUSE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dsfuse {

enum class ErrorCode {
  // Frames and subsets.
  kDuplicateLabel,
  kEmptyLabel,
  kFrameTooLarge,
  kEmptyFrame,
  kUnknownLabel,
  kFrameMismatch,
  // Mass functions.
  kNotNormalized,
  kNegativeMass,
  kNonFiniteMass,
  kEmptySetMass,
  kEmptyFocal,
  kWeightOutOfRange,
  kFocalIsFullFrame,
  // Combination.
  kTotalConflict,
  kEmptyInput,
  kExplosionGuard,
  // Scenarios.
  kConditionOutOfRange,
  kNoCandidate,
  // Documents.
  kParseError,
  kSchemaError,
  kValidationError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported as dsfuse::Error (or a subclass).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when the conflict between two mass functions reaches the total
// conflict threshold. step() is the 1-based fold step, or 0 for a direct
// pairwise combination.
class TotalConflictError : public Error {
 public:
  TotalConflictError(double k, std::size_t step);

  double k() const noexcept { return k_; }
  std::size_t step() const noexcept { return step_; }

 private:
  double k_;
  std::size_t step_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& detail);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace dsfuse

#endif  // DSFUSE_ERROR_HPP_
