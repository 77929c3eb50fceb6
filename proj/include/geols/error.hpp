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

#ifndef GEOLS_ERROR_HPP_
#define GEOLS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace geols {

enum class ErrorCode {
  kInvalidInput,
  kInfeasibleStart,
  kInfeasible,
  kTooLarge,
  kEmptyCandidates,
  kWalkAmbiguous,
  kGenerationStall,
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
      return "INVALID_INPUT";
    case ErrorCode::kInfeasibleStart:
      return "INFEASIBLE_START";
    case ErrorCode::kInfeasible:
      return "INFEASIBLE";
    case ErrorCode::kTooLarge:
      return "TOO_LARGE";
    case ErrorCode::kEmptyCandidates:
      return "EMPTY_CANDIDATES";
    case ErrorCode::kWalkAmbiguous:
      return "WALK_AMBIGUOUS";
    case ErrorCode::kGenerationStall:
      return "GENERATION_STALL";
  }
  return "UNKNOWN";
}

// All library failures are reported through this exception; `code()` is the
// machine-readable kind, `what()` carries the details.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace geols

#endif  // GEOLS_ERROR_HPP_
