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

#include "dsfuse/error.hpp"

#include <sstream>

namespace dsfuse {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kEmptyLabel: return "EmptyLabel";
    case ErrorCode::kFrameTooLarge: return "FrameTooLarge";
    case ErrorCode::kEmptyFrame: return "EmptyFrame";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kFrameMismatch: return "FrameMismatch";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kNegativeMass: return "NegativeMass";
    case ErrorCode::kNonFiniteMass: return "NonFiniteMass";
    case ErrorCode::kEmptySetMass: return "EmptySetMass";
    case ErrorCode::kEmptyFocal: return "EmptyFocal";
    case ErrorCode::kWeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::kFocalIsFullFrame: return "FocalIsFullFrame";
    case ErrorCode::kTotalConflict: return "TotalConflict";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kExplosionGuard: return "ExplosionGuard";
    case ErrorCode::kConditionOutOfRange: return "ConditionOutOfRange";
    case ErrorCode::kNoCandidate: return "NoCandidate";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kValidationError: return "ValidationError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

namespace {

std::string TotalConflictMessage(double k, std::size_t step) {
  std::ostringstream os;
  os.precision(12);
  os << "total conflict (k = " << k << ")";
  if (step > 0) os << " at combination step " << step;
  os << ": the evidence cores are disjoint";
  return os.str();
}

std::string ParseMessage(std::size_t line, std::size_t column,
                         const std::string& detail) {
  std::ostringstream os;
  os << "parse error at line " << line << ", column " << column << ": "
     << detail;
  return os.str();
}

}  // namespace

TotalConflictError::TotalConflictError(double k, std::size_t step)
    : Error(ErrorCode::kTotalConflict, TotalConflictMessage(k, step)),
      k_(k),
      step_(step) {}

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& detail)
    : Error(ErrorCode::kParseError, ParseMessage(line, column, detail)),
      line_(line),
      column_(column) {}

}  // namespace dsfuse
