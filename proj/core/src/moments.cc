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

#include <algorithm>
#include <cmath>
#include <type_traits>
#include <vector>

#include "isoinertia/error.h"
#include "isoinertia/shape.h"

namespace isoinertia {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr int kCurveSamples = 1024;

double SampledDiameter(const FourierBoundary& fb) {
  std::vector<Vec2> points, tangents;
  SampleBoundary(fb, kCurveSamples, points, tangents);
  double d = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      d = std::max(d, (points[i] - points[j]).norm());
    }
  }
  return d;
}

}  // namespace

std::string_view KindName(const Shape& shape) {
  return std::visit(
      Overloaded{[](const Polygon2&) { return std::string_view("polygon"); },
                 [](const SimplicialBody&) {
                   return std::string_view("simplicial");
                 },
                 [](const Ellipsoid&) { return std::string_view("ellipsoid"); },
                 [](const FourierBoundary&) {
                   return std::string_view("fourier");
                 }},
      shape);
}

int Dimension(const Shape& shape) {
  return std::visit(
      Overloaded{[](const Polygon2&) { return 2; },
                 [](const SimplicialBody& b) { return b.dimension(); },
                 [](const Ellipsoid& e) { return e.dimension(); },
                 [](const FourierBoundary&) { return 2; }},
      shape);
}

MomentSummary Moments(const Shape& shape, MomentScope scope) {
  return std::visit(
      Overloaded{
          [](const Polygon2& p) { return PolygonMoments(p); },
          [scope](const SimplicialBody& b) {
            return Summarize(
                SimplicialRawMoments(b, scope == MomentScope::kFull));
          },
          [scope](const Ellipsoid& e) { return EllipsoidMoments(e, scope); },
          [](const FourierBoundary& f) { return FourierMoments(f); }},
      shape);
}

bool IsConvex(const Shape& shape) {
  return std::visit(
      Overloaded{[](const Polygon2& p) { return p.IsConvex(); },
                 [](const SimplicialBody& b) { return b.IsConvex(); },
                 [](const Ellipsoid&) { return true; },
                 [](const FourierBoundary& f) { return IsConvexCurve(f); }},
      shape);
}

double Diameter(const Shape& shape) {
  return std::visit(
      Overloaded{[](const Polygon2& p) { return p.Diameter(); },
                 [](const SimplicialBody& b) {
                   double d = 0.0;
                   for (const VecX& p : b.vertices()) {
                     for (const VecX& q : b.vertices()) {
                       d = std::max(d, (p - q).norm());
                     }
                   }
                   return d;
                 },
                 [](const Ellipsoid& e) { return 2.0 * e.semi_axes().maxCoeff(); },
                 [](const FourierBoundary& f) { return SampledDiameter(f); }},
      shape);
}

Shape Scaled(const Shape& shape, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw Error(ErrorCode::kInvalidArgument, "scale factor must be positive");
  }
  return std::visit(
      Overloaded{
          [factor](const Polygon2& p) -> Shape {
            std::vector<Vec2> v = p.vertices();
            for (Vec2& x : v) x *= factor;
            return Polygon2(std::move(v));
          },
          [factor](const SimplicialBody& b) -> Shape {
            std::vector<VecX> v = b.vertices();
            for (VecX& x : v) x *= factor;
            return SimplicialBody(b.dimension(), std::move(v), b.simplices(),
                                  b.facets());
          },
          [factor](const Ellipsoid& e) -> Shape {
            return Ellipsoid(e.center() * factor, e.semi_axes() * factor);
          },
          [factor](const FourierBoundary& f) -> Shape {
            FourierBoundary g = f;
            g.a0 *= factor;
            g.b0 *= factor;
            for (FourierMode& m : g.modes) {
              m.a *= factor;
              m.a_prime *= factor;
              m.b *= factor;
              m.b_prime *= factor;
            }
            return g;
          }},
      shape);
}

Shape Translated(const Shape& shape, const VecX& offset) {
  if (offset.size() != Dimension(shape)) {
    throw Error(ErrorCode::kInvalidArgument, "offset dimension mismatch");
  }
  return std::visit(
      Overloaded{
          [&offset](const Polygon2& p) -> Shape {
            std::vector<Vec2> v = p.vertices();
            for (Vec2& x : v) x += offset.head<2>();
            return Polygon2(std::move(v));
          },
          [&offset](const SimplicialBody& b) -> Shape {
            std::vector<VecX> v = b.vertices();
            for (VecX& x : v) x += offset;
            return SimplicialBody(b.dimension(), std::move(v), b.simplices(),
                                  b.facets());
          },
          [&offset](const Ellipsoid& e) -> Shape {
            return Ellipsoid(e.center() + offset, e.semi_axes());
          },
          [&offset](const FourierBoundary& f) -> Shape {
            FourierBoundary g = f;
            g.a0 += 2.0 * offset(0);
            g.b0 += 2.0 * offset(1);
            return g;
          }},
      shape);
}

}  // namespace isoinertia
