// Copyright 2026 The Authors.
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

#ifndef VARSEL_ERRORS_H_
#define VARSEL_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace varsel {

enum class ErrorCode {
  kInvalidArgument,
  kZeroColumn,
  kRankDeficient,
  kDegeneratePivot,
  kParseError,
  kRaggedRows,
  kEmptyFile,
  kSingularCovariance,
  kLengthMismatch,
  kThresholdNeverReached,
  kNotMonotone,
  kTooLarge,
  kIoError,
};

std::string_view ToString(ErrorCode code);

// Every failure raised by the library. `indices` carries the offending
// 0-based column/variable indices (or row/column for parse errors) when the
// error has a natural witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<long long> indices = {})
      : std::runtime_error(std::string(ToString(code)) + ": " + message),
        code_(code),
        indices_(std::move(indices)) {}

  ErrorCode code() const { return code_; }
  const std::vector<long long>& indices() const { return indices_; }

 private:
  ErrorCode code_;
  std::vector<long long> indices_;
};

}  // namespace varsel

#endif  // VARSEL_ERRORS_H_
