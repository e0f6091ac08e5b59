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

#include "isoinertia/inequalities.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "isoinertia/error.h"

namespace isoinertia {
namespace {

constexpr std::array<InequalityId, 7> kAllIds = {
    InequalityId::kPolarVolume, InequalityId::kPolarBoundary,
    InequalityId::kJProduct,    InequalityId::kIProduct,
    InequalityId::kDet,         InequalityId::kClassicalIso,
    InequalityId::kPerAxis};

constexpr std::array<std::string_view, 7> kNames = {
    "POLAR_VOLUME", "POLAR_BOUNDARY", "J_PRODUCT", "I_PRODUCT",
    "DET",          "CLASSICAL_ISO",  "PER_AXIS"};

bool NeedsBoundary(InequalityId id) {
  return id == InequalityId::kPolarBoundary || id == InequalityId::kIProduct ||
         id == InequalityId::kClassicalIso || id == InequalityId::kPerAxis;
}

// Radius of the ball with the given volume.
double EquivalentRadius(int n, double volume) {
  return std::pow(volume / UnitBallVolume(n), 1.0 / n);
}

}  // namespace

const std::array<InequalityId, 7>& AllInequalityIds() { return kAllIds; }

std::string_view InequalityName(InequalityId id) {
  return kNames[static_cast<int>(id)];
}

std::optional<InequalityId> ParseInequalityId(std::string_view name) {
  for (int i = 0; i < static_cast<int>(kNames.size()); ++i) {
    if (kNames[i] == name) return kAllIds[i];
  }
  return std::nullopt;
}

InequalityReport MakeInequalityReport(InequalityId id, double lhs, double rhs,
                                      Centering centering) {
  InequalityReport r;
  r.id = id;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  r.relative_margin = scale > 0.0 ? r.margin / scale : 0.0;
  r.holds = r.margin >= -kViolationTolerance * scale;
  r.equality = r.holds && std::abs(r.relative_margin) < kEqualityTolerance;
  r.centering = centering;
  return r;
}

InequalityReport EvaluateInequality(InequalityId id, const Shape& shape) {
  const int n = Dimension(shape);
  if (n >= 3 &&
      (id == InequalityId::kIProduct || id == InequalityId::kPerAxis) &&
      !IsConvex(shape)) {
    throw Error(ErrorCode::kHypothesisViolation,
                std::string(InequalityName(id)) +
                    " requires a convex body in dimension >= 3");
  }
  const bool boundary_centered = id == InequalityId::kPolarBoundary ||
                                 id == InequalityId::kIProduct ||
                                 id == InequalityId::kPerAxis;
  const bool rotate = id == InequalityId::kJProduct ||
                      id == InequalityId::kIProduct || id == InequalityId::kDet;
  const Centering centering =
      boundary_centered ? Centering::kBoundary : Centering::kVolume;
  const Shape placed =
      id == InequalityId::kClassicalIso
          ? shape
          : CanonicalPlacement(shape, centering, rotate).shape;
  const MomentSummary m = Moments(
      placed, NeedsBoundary(id) ? MomentScope::kFull : MomentScope::kVolumeOnly);

  const double omega = UnitBallVolume(n);
  const double r = EquivalentRadius(n, m.volume);
  const double ball_j = omega * std::pow(r, n + 2) / (n + 2);  // per axis
  const double ball_i = omega * std::pow(r, n + 1);            // per axis

  switch (id) {
    case InequalityId::kPolarVolume:
      return MakeInequalityReport(id, m.J0, n * ball_j, centering);
    case InequalityId::kPolarBoundary:
      return MakeInequalityReport(id, m.I0, n * ball_i, centering);
    case InequalityId::kJProduct:
      return MakeInequalityReport(id, m.J_product, std::pow(ball_j, n),
                                  centering);
    case InequalityId::kIProduct:
      return MakeInequalityReport(id, m.I_product, std::pow(ball_i, n),
                                  centering);
    case InequalityId::kDet:
      return MakeInequalityReport(id, m.determinant, std::pow(ball_j, n),
                                  centering);
    case InequalityId::kClassicalIso:
      return MakeInequalityReport(
          id, std::pow(m.surface, n),
          std::pow(n, n) * omega * std::pow(m.volume, n - 1), centering);
    case InequalityId::kPerAxis: {
      std::optional<InequalityReport> worst;
      for (int k = 0; k < n; ++k) {
        InequalityReport axis = MakeInequalityReport(
            id, std::pow(m.I(k), n + 2),
            std::pow(n + 2, n + 1) * omega * std::pow(m.J(k), n + 1),
            centering);
        axis.worst_axis = k;
        if (!worst || axis.relative_margin < worst->relative_margin) {
          worst = axis;
        }
      }
      return *worst;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown inequality id");
}

BatchResult BatchVerify(std::span<const Shape> shapes,
                        std::span<const InequalityId> ids) {
  BatchResult result;
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    for (InequalityId id : ids) {
      BatchEntry entry;
      entry.shape_index = s;
      entry.id = id;
      try {
        entry.report = EvaluateInequality(id, shapes[s]);
        if (entry.report->holds) {
          ++result.holds;
        } else {
          ++result.violations;
        }
        if (entry.report->equality) ++result.equalities;
      } catch (const std::exception& e) {
        entry.error = e.what();
        ++result.errors;
      }
      result.entries.push_back(std::move(entry));
    }
  }
  return result;
}

std::vector<GapSample> EqualityGapScan(
    const std::function<Shape(double)>& family,
    std::span<const double> parameters, InequalityId id) {
  std::vector<GapSample> gaps;
  gaps.reserve(parameters.size());
  for (double p : parameters) {
    gaps.push_back({p, EvaluateInequality(id, family(p)).relative_margin});
  }
  return gaps;
}

}  // namespace isoinertia
