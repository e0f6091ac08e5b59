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

#ifndef ISOINERTIA_PLACEMENT_H_
#define ISOINERTIA_PLACEMENT_H_

#include "isoinertia/numerics.h"
#include "isoinertia/shape.h"

namespace isoinertia {

// Rigid motion x -> rotation * (x + translation).
struct Placement {
  VecX translation;
  MatX rotation;

  static Placement Identity(int dimension);
  VecX Apply(const VecX& x) const { return rotation * (x + translation); }
};

enum class Centering {
  kVolume,    // origin at the centroid of Omega
  kBoundary,  // origin at the centroid of dOmega
};

struct PlacedShape {
  Shape shape;
  Placement placement;
};

// Relative eigenvalue gap below which two axes count as tied.
inline constexpr double kEigenTieTolerance = 1e-9;

// Moves the selected centroid to the origin. With `rotate`, additionally
// rotates so that the second-moment matrix of the same measure (volume or
// boundary) is diagonal. Tied eigenvalues leave a family of admissible
// rotations; the one closest to the identity in Frobenius norm is returned.
PlacedShape CanonicalPlacement(const Shape& shape, Centering centering,
                               bool rotate);

// Applies a rigid motion. Non-spherical ellipsoids in N >= 3 accept only
// signed-permutation rotations (Error(kUnsupported) otherwise); planar
// ellipses under a general rotation become Fourier boundaries.
Shape ApplyPlacement(const Shape& shape, const Placement& placement);

// Rotation R with R * symmetric * R^T diagonal and det R = +1, chosen
// closest to the identity among all such rotations.
MatX ClosestToIdentityDiagonalizer(const MatX& symmetric,
                                   double tie_tolerance = kEigenTieTolerance);

// Maps every point x to (t_1 x_1, ..., t_N x_N). Then
// J_k(image) = t_k^2 (prod t) J_k(shape). Throws Error(kInvalidArgument)
// unless every t_k > 0.
Shape ApplyAffinity(const Shape& shape, const VecX& scales);

struct JNormalization {
  VecX scales;  // t_k = sqrt(J^{1/N} / J_k), prod t_k = 1
  Shape shape;  // image with J_1 = ... = J_N = J^{1/N}
};

// Volume-preserving diagonal scaling that equalizes the axis moments J_k
// about the current origin. Throws Error(kDegenerate) if some J_k is zero.
JNormalization NormalizeJ(const Shape& shape);

}  // namespace isoinertia

#endif  // ISOINERTIA_PLACEMENT_H_
