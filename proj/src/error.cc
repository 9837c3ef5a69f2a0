// Copyright 2026 The codedmm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "codedmm/error.h"

namespace codedmm {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero:
      return "DivisionByZero";
    case ErrorCode::kFieldMismatch:
      return "FieldMismatch";
    case ErrorCode::kNotPrime:
      return "NotPrime";
    case ErrorCode::kDuplicateEvaluationPoint:
      return "DuplicateEvaluationPoint";
    case ErrorCode::kBlockShapeMismatch:
      return "BlockShapeMismatch";
    case ErrorCode::kTooFewWorkers:
      return "TooFewWorkers";
    case ErrorCode::kFieldTooSmall:
      return "FieldTooSmall";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kInvalidExponents:
      return "InvalidExponents";
    case ErrorCode::kInsufficientResults:
      return "InsufficientResults";
    case ErrorCode::kSingularDecodeSystem:
      return "SingularDecodeSystem";
    case ErrorCode::kTooManyErrors:
      return "TooManyErrors";
    case ErrorCode::kInvalidConstruction:
      return "InvalidConstruction";
    case ErrorCode::kParseError:
      return "ParseError";
  }
  return "Unknown";
}

}  // namespace codedmm
