// Copyright 2026 The isoinertia Authors
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

#include "isoinertia/error.h"

#include <string>
#include <string_view>

namespace isoinertia {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidShape:
      return "invalid-shape";
    case ErrorCode::kDegenerate:
      return "degenerate";
    case ErrorCode::kInconsistentOrientation:
      return "inconsistent-orientation";
    case ErrorCode::kUnsupported:
      return "unsupported";
    case ErrorCode::kHypothesisViolation:
      return "hypothesis-violation";
    case ErrorCode::kConstantSpeedRequired:
      return "constant-speed-required";
    case ErrorCode::kIllConditioned:
      return "ill-conditioned";
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace isoinertia
