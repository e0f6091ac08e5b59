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

#include "isoinertia/ellipsoid.h"

#include <cmath>
#include <utility>

#include "isoinertia/error.h"

namespace isoinertia {
namespace {

constexpr int kEllipseQuadratureNodes = 4096;

}  // namespace

Ellipsoid::Ellipsoid(VecX center, VecX semi_axes)
    : center_(std::move(center)), semi_axes_(std::move(semi_axes)) {
  if (semi_axes_.size() < 2 || center_.size() != semi_axes_.size()) {
    throw Error(ErrorCode::kInvalidShape, "ellipsoid dimension mismatch");
  }
  if (!center_.allFinite() || !semi_axes_.allFinite() ||
      !(semi_axes_.minCoeff() > 0.0)) {
    throw Error(ErrorCode::kInvalidShape, "semi-axes must be positive");
  }
}

Ellipsoid Ellipsoid::Ball(int dimension, double radius, VecX center) {
  if (center.size() == 0) center = VecX::Zero(dimension);
  return Ellipsoid(std::move(center), VecX::Constant(dimension, radius));
}

bool Ellipsoid::IsBall() const {
  return semi_axes_.maxCoeff() - semi_axes_.minCoeff() <=
         1e-15 * semi_axes_.maxCoeff();
}

MomentSummary EllipsoidMoments(const Ellipsoid& ellipsoid, MomentScope scope) {
  const int n = ellipsoid.dimension();
  const VecX& c = ellipsoid.center();
  const VecX& axes = ellipsoid.semi_axes();
  const bool with_boundary = scope == MomentScope::kFull;
  if (with_boundary && n > 2 && !ellipsoid.IsBall()) {
    throw Error(ErrorCode::kUnsupported,
                "boundary moments of non-round ellipsoids in dimension > 2");
  }

  RawMoments raw = RawMoments::Zero(n, with_boundary);
  const double omega = UnitBallVolume(n);
  raw.volume = omega * axes.prod();
  raw.first = raw.volume * c;
  MatX central = MatX::Zero(n, n);
  for (int k = 0; k < n; ++k) central(k, k) = raw.volume * axes(k) * axes(k) / (n + 2);
  raw.second = central + raw.volume * c * c.transpose();

  if (with_boundary) {
    MatX boundary_central = MatX::Zero(n, n);
    if (ellipsoid.IsBall()) {
      const double r = axes(0);
      raw.surface = n * omega * std::pow(r, n - 1);
      for (int k = 0; k < n; ++k) {
        boundary_central(k, k) = omega * std::pow(r, n + 1);
      }
    } else {
      // Periodic trapezoid rule is spectrally accurate for the smooth
      // arclength density.
      const double a = axes(0);
      const double b = axes(1);
      const double dt = 2.0 * kPi / kEllipseQuadratureNodes;
      for (int j = 0; j < kEllipseQuadratureNodes; ++j) {
        const double t = j * dt;
        const double x = a * std::cos(t);
        const double y = b * std::sin(t);
        const double ds = std::hypot(a * std::sin(t), b * std::cos(t)) * dt;
        raw.surface += ds;
        boundary_central(0, 0) += x * x * ds;
        boundary_central(1, 1) += y * y * ds;
      }
    }
    raw.boundary_first = raw.surface * c;
    raw.boundary_second = boundary_central + raw.surface * c * c.transpose();
  }
  return Summarize(raw);
}

}  // namespace isoinertia
