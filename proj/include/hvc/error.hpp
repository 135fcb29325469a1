// Copyright 2026 The hvc Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hvc {

enum class ErrorCode {
  kAliceUnresolved,
  kUnknownVariable,
  kZeroCondition,
  kEmptySource,
  kWeightedSettings,
  kUnsupportedShape,
  kDomain,
  kUnknownModel,
  kEmptySample,
  kResolutionTooLow,
  kInvalidArgument,
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAliceUnresolved: return "ALICE_UNRESOLVED";
    case ErrorCode::kUnknownVariable: return "UNKNOWN_VARIABLE";
    case ErrorCode::kZeroCondition: return "ZERO_CONDITION";
    case ErrorCode::kEmptySource: return "EMPTY_SOURCE";
    case ErrorCode::kWeightedSettings: return "WEIGHTED_SETTINGS";
    case ErrorCode::kUnsupportedShape: return "UNSUPPORTED_SHAPE";
    case ErrorCode::kDomain: return "DOMAIN";
    case ErrorCode::kUnknownModel: return "UNKNOWN_MODEL";
    case ErrorCode::kEmptySample: return "EMPTY_SAMPLE";
    case ErrorCode::kResolutionTooLow: return "RESOLUTION_TOO_LOW";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

/// Library error carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hvc
