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

#ifndef ISOINERTIA_MOMENT_SUMMARY_H_
#define ISOINERTIA_MOMENT_SUMMARY_H_

#include "isoinertia/numerics.h"

namespace isoinertia {

// Raw integrals of a body Omega and its boundary, taken about the origin.
//   volume           |Omega|
//   first            int_Omega x dx
//   second           int_Omega x x^T dx
//   surface          |dOmega|
//   boundary_first   int_dOmega x ds
//   boundary_second  int_dOmega x x^T ds
// Boundary fields are empty when only volume moments were requested.
struct RawMoments {
  int dimension = 0;
  double volume = 0.0;
  VecX first;
  MatX second;
  bool has_boundary = false;
  double surface = 0.0;
  VecX boundary_first;
  MatX boundary_second;

  static RawMoments Zero(int dimension, bool with_boundary);
  RawMoments& operator+=(const RawMoments& other);
};

// Every scalar moment functional of a shape, about the current origin.
//
// J[k] = int_Omega x_k^2 and I[k] = int_dOmega x_k^2 ds are the moments of
// inertia with respect to the coordinate hyperplane x_k = 0; J0 and I0 are
// their sums (polar moments), J_product and I_product their products.
// `inertia` is the matrix int_Omega x_i x_j with determinant `determinant`;
// `boundary_inertia` is its boundary counterpart. When the summary was built
// without boundary data, `has_boundary` is false and the boundary fields are
// NaN.
struct MomentSummary {
  int dimension = 0;
  double volume = 0.0;
  double surface = 0.0;
  VecX volume_centroid;
  VecX boundary_centroid;
  VecX J;
  VecX I;
  double J0 = 0.0;
  double I0 = 0.0;
  double J_product = 0.0;
  double I_product = 0.0;
  MatX inertia;
  MatX boundary_inertia;
  double determinant = 0.0;
  bool has_boundary = false;
};

MomentSummary Summarize(const RawMoments& raw);

}  // namespace isoinertia

#endif  // ISOINERTIA_MOMENT_SUMMARY_H_
