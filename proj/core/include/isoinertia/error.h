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

#ifndef ISOINERTIA_ERROR_H_
#define ISOINERTIA_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace isoinertia {

enum class ErrorCode {
  kInvalidShape,            // input fails a geometry-type invariant
  kDegenerate,              // zero volume, zero moment, degenerate simplex
  kInconsistentOrientation, // boundary facets do not bound the body outward
  kUnsupported,             // operation not available for this shape kind
  kHypothesisViolation,     // e.g. a check that needs a convex body
  kConstantSpeedRequired,   // Parseval identities need arc-length parameters
  kIllConditioned,          // numerically singular system
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace isoinertia

#endif  // ISOINERTIA_ERROR_H_
