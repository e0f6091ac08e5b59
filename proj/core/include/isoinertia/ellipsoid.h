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

#ifndef ISOINERTIA_ELLIPSOID_H_
#define ISOINERTIA_ELLIPSOID_H_

#include "isoinertia/moment_summary.h"
#include "isoinertia/numerics.h"

namespace isoinertia {

// Axis-aligned ellipsoid; a ball when all semi-axes agree.
class Ellipsoid {
 public:
  // Throws Error(kInvalidShape) unless every semi-axis is positive and the
  // dimensions agree (N >= 2).
  Ellipsoid(VecX center, VecX semi_axes);

  static Ellipsoid Ball(int dimension, double radius,
                        VecX center = VecX());

  int dimension() const { return static_cast<int>(semi_axes_.size()); }
  const VecX& center() const { return center_; }
  const VecX& semi_axes() const { return semi_axes_; }
  bool IsBall() const;

 private:
  VecX center_;
  VecX semi_axes_;
};

enum class MomentScope { kVolumeOnly, kFull };

// Volume moments are closed form: |E| = omega_N prod a_i and
// J_k = |E| a_k^2 / (N + 2) about the center. Boundary moments are closed
// form for balls (I_k = omega_N R^{N+1}), computed by boundary quadrature for
// planar ellipses, and unsupported (Error(kUnsupported)) otherwise.
MomentSummary EllipsoidMoments(const Ellipsoid& ellipsoid,
                               MomentScope scope = MomentScope::kFull);

}  // namespace isoinertia

#endif  // ISOINERTIA_ELLIPSOID_H_
