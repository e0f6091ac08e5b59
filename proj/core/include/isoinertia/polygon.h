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

#ifndef ISOINERTIA_POLYGON_H_
#define ISOINERTIA_POLYGON_H_

#include <vector>

#include "isoinertia/moment_summary.h"
#include "isoinertia/numerics.h"

namespace isoinertia {

// A simple planar polygon. Vertices are stored counterclockwise; input given
// clockwise is reversed on construction and `was_reversed()` records it.
class Polygon2 {
 public:
  // Throws Error(kInvalidShape) for fewer than 3 vertices or repeated
  // consecutive vertices, Error(kDegenerate) for zero signed area.
  explicit Polygon2(std::vector<Vec2> vertices);

  const std::vector<Vec2>& vertices() const { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  bool was_reversed() const { return was_reversed_; }

  // Positive by construction.
  double Area() const;
  double Perimeter() const;
  double Diameter() const;

  // Left turns (or straight) at every vertex with strictly convex turns at a
  // majority of vertices and total turning 2 pi.
  bool IsConvex() const;

  // No two edges meet except consecutive ones at their shared vertex.
  // Quadratic in the vertex count; not checked on construction.
  bool IsSimple() const;

 private:
  std::vector<Vec2> vertices_;
  bool was_reversed_ = false;
};

RawMoments PolygonRawMoments(const Polygon2& polygon);

// Green's theorem edge sums for the area integrals and exact segment line
// integrals for the boundary ones.
MomentSummary PolygonMoments(const Polygon2& polygon);

// Regular n-gon with the given circumradius, first vertex on the +x axis.
Polygon2 RegularPolygon(int sides, double circumradius, Vec2 center = Vec2::Zero());

// Axis-aligned rectangle [lo.x, hi.x] x [lo.y, hi.y].
Polygon2 Rectangle(Vec2 lo, Vec2 hi);

}  // namespace isoinertia

#endif  // ISOINERTIA_POLYGON_H_
