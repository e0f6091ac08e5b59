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

#ifndef ISOINERTIA_INEQUALITIES_H_
#define ISOINERTIA_INEQUALITIES_H_

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isoinertia/placement.h"
#include "isoinertia/shape.h"

namespace isoinertia {

// Isoperimetric inequalities comparing a shape with the ball of equal volume
// (or, for products, any origin-symmetric axis-aligned ellipsoid).
enum class InequalityId {
  kPolarVolume,    // J0(Omega) >= J0(ball)
  kPolarBoundary,  // I0(Omega) >= I0(ball)
  kJProduct,       // prod J_k >= prod J_k(ball)
  kIProduct,       // prod I_k >= prod I_k(ball)
  kDet,            // det M >= det M(ball)
  kClassicalIso,   // |dOmega|^N >= N^N omega_N |Omega|^{N-1}
  kPerAxis,        // I_k^{N+2} >= (N+2)^{N+1} omega_N J_k^{N+1}, worst k
};

const std::array<InequalityId, 7>& AllInequalityIds();
std::string_view InequalityName(InequalityId id);
std::optional<InequalityId> ParseInequalityId(std::string_view name);

inline constexpr double kViolationTolerance = 1e-12;
inline constexpr double kEqualityTolerance = 1e-9;

// margin = lhs - rhs; the inequality holds when
// margin >= -kViolationTolerance * max(|lhs|, |rhs|).
struct InequalityReport {
  InequalityId id = InequalityId::kPolarVolume;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double relative_margin = 0.0;
  bool holds = false;
  bool equality = false;
  Centering centering = Centering::kVolume;
  int worst_axis = -1;  // kPerAxis only
};

InequalityReport MakeInequalityReport(InequalityId id, double lhs, double rhs,
                                      Centering centering);

// Places the shape canonically for the inequality, then compares with the
// analytic ball values. Throws Error(kHypothesisViolation) for nonconvex
// shapes in N >= 3 under kIProduct and kPerAxis.
InequalityReport EvaluateInequality(InequalityId id, const Shape& shape);

struct BatchEntry {
  std::size_t shape_index = 0;
  InequalityId id = InequalityId::kPolarVolume;
  std::optional<InequalityReport> report;
  std::string error;  // set when evaluation threw
};

struct BatchResult {
  std::vector<BatchEntry> entries;  // shape-major, ids in request order
  int holds = 0;
  int equalities = 0;
  int violations = 0;
  int errors = 0;
};

BatchResult BatchVerify(std::span<const Shape> shapes,
                        std::span<const InequalityId> ids);

struct GapSample {
  double parameter = 0.0;
  double relative_margin = 0.0;
};

// Relative margin along a one-parameter family whose parameter 0 is an
// equality case.
std::vector<GapSample> EqualityGapScan(
    const std::function<Shape(double)>& family,
    std::span<const double> parameters, InequalityId id);

}  // namespace isoinertia

#endif  // ISOINERTIA_INEQUALITIES_H_
