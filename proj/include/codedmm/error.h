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

#ifndef CODEDMM_ERROR_H_
#define CODEDMM_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace codedmm {

enum class ErrorCode {
  kDivisionByZero,
  kFieldMismatch,
  kNotPrime,
  kDuplicateEvaluationPoint,
  kBlockShapeMismatch,
  kTooFewWorkers,
  kFieldTooSmall,
  kInvalidArgument,
  kInvalidExponents,
  kInsufficientResults,
  kSingularDecodeSystem,
  kTooManyErrors,
  kInvalidConstruction,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (the simulator in particular) can react to specific conditions.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace codedmm

#endif  // CODEDMM_ERROR_H_
