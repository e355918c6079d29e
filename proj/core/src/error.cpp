// Copyright 2026 The fmpartners Authors.
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

#include "fmp/error.hpp"

namespace fmp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kOddLatticeUnsupported: return "OddLatticeUnsupported";
    case ErrorCode::kGroupTooLarge: return "GroupTooLarge";
    case ErrorCode::kNonIntegralResult: return "NonIntegralResult";
    case ErrorCode::kNotSL2: return "NotSL2";
    case ErrorCode::kCoprimalityViolated: return "CoprimalityViolated";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kNoValidShift: return "NoValidShift";
    case ErrorCode::kMissingField: return "MissingField";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace fmp
