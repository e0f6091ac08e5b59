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

#ifndef ISOINERTIA_SHAPE_H_
#define ISOINERTIA_SHAPE_H_

#include <string_view>
#include <variant>

#include "isoinertia/ellipsoid.h"
#include "isoinertia/fourier.h"
#include "isoinertia/moment_summary.h"
#include "isoinertia/polygon.h"
#include "isoinertia/simplicial.h"

namespace isoinertia {

using Shape = std::variant<Polygon2, SimplicialBody, Ellipsoid, FourierBoundary>;

std::string_view KindName(const Shape& shape);
int Dimension(const Shape& shape);

// Dispatches to the closed-form or quadrature routine for the shape kind.
MomentSummary Moments(const Shape& shape,
                      MomentScope scope = MomentScope::kFull);

// Convex bodies only. Fourier curves are tested by the sign of the
// curvature on a sampling grid.
bool IsConvex(const Shape& shape);

// Largest distance between two points of the shape (sampled for curves).
double Diameter(const Shape& shape);

// Uniform scaling about the origin.
Shape Scaled(const Shape& shape, double factor);

// Translation by `offset`.
Shape Translated(const Shape& shape, const VecX& offset);

}  // namespace isoinertia

#endif  // ISOINERTIA_SHAPE_H_
