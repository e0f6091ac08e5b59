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

#include "isoinertia/moment_summary.h"

#include <cmath>
#include <limits>

#include <Eigen/LU>

namespace isoinertia {

RawMoments RawMoments::Zero(int dimension, bool with_boundary) {
  RawMoments raw;
  raw.dimension = dimension;
  raw.first = VecX::Zero(dimension);
  raw.second = MatX::Zero(dimension, dimension);
  raw.has_boundary = with_boundary;
  if (with_boundary) {
    raw.boundary_first = VecX::Zero(dimension);
    raw.boundary_second = MatX::Zero(dimension, dimension);
  }
  return raw;
}

RawMoments& RawMoments::operator+=(const RawMoments& other) {
  volume += other.volume;
  first += other.first;
  second += other.second;
  if (has_boundary && other.has_boundary) {
    surface += other.surface;
    boundary_first += other.boundary_first;
    boundary_second += other.boundary_second;
  }
  return *this;
}

MomentSummary Summarize(const RawMoments& raw) {
  const int n = raw.dimension;
  MomentSummary s;
  s.dimension = n;
  s.volume = raw.volume;
  s.volume_centroid = raw.first / raw.volume;
  s.inertia = 0.5 * (raw.second + raw.second.transpose());
  s.J = s.inertia.diagonal();
  s.J0 = s.J.sum();
  s.J_product = s.J.prod();
  s.determinant = s.inertia.determinant();

  s.has_boundary = raw.has_boundary;
  if (raw.has_boundary) {
    s.surface = raw.surface;
    s.boundary_centroid = raw.boundary_first / raw.surface;
    s.boundary_inertia =
        0.5 * (raw.boundary_second + raw.boundary_second.transpose());
    s.I = s.boundary_inertia.diagonal();
    s.I0 = s.I.sum();
    s.I_product = s.I.prod();
  } else {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    s.surface = nan;
    s.boundary_centroid = VecX::Constant(n, nan);
    s.boundary_inertia = MatX::Constant(n, n, nan);
    s.I = VecX::Constant(n, nan);
    s.I0 = nan;
    s.I_product = nan;
  }
  return s;
}

}  // namespace isoinertia
