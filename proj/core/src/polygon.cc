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

#include "isoinertia/polygon.h"

#include <algorithm>
#include <string>
#include <cmath>
#include <utility>
#include <vector>

#include "isoinertia/error.h"

namespace isoinertia {
namespace {

double Cross(const Vec2& u, const Vec2& v) { return u.x() * v.y() - u.y() * v.x(); }

double SignedAreaOf(const std::vector<Vec2>& v) {
  double twice = 0.0;
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i) twice += Cross(v[i], v[(i + 1) % n]);
  return 0.5 * twice;
}

int Orientation(const Vec2& a, const Vec2& b, const Vec2& c) {
  const double v = Cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

bool OnSegment(const Vec2& a, const Vec2& b, const Vec2& p) {
  return std::min(a.x(), b.x()) <= p.x() && p.x() <= std::max(a.x(), b.x()) &&
         std::min(a.y(), b.y()) <= p.y() && p.y() <= std::max(a.y(), b.y());
}

// Closed segments [a, b] and [c, d] share a point.
bool SegmentsMeet(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  const int o1 = Orientation(a, b, c), o2 = Orientation(a, b, d);
  const int o3 = Orientation(c, d, a), o4 = Orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  return (o1 == 0 && OnSegment(a, b, c)) || (o2 == 0 && OnSegment(a, b, d)) ||
         (o3 == 0 && OnSegment(c, d, a)) || (o4 == 0 && OnSegment(c, d, b));
}

}  // namespace

Polygon2::Polygon2(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
  const int n = size();
  if (n < 3) {
    throw Error(ErrorCode::kInvalidShape, "polygon needs at least 3 vertices");
  }
  for (int i = 0; i < n; ++i) {
    if (!vertices_[i].allFinite()) {
      throw Error(ErrorCode::kInvalidShape, "non-finite polygon vertex");
    }
    if (vertices_[i] == vertices_[(i + 1) % n]) {
      throw Error(ErrorCode::kInvalidShape,
                  "consecutive polygon vertices coincide at index " +
                      std::to_string(i));
    }
  }
  const double diameter = Diameter();
  const double area = SignedAreaOf(vertices_);
  if (!(std::abs(area) > 1e-14 * diameter * diameter)) {
    throw Error(ErrorCode::kDegenerate, "polygon has zero signed area");
  }
  if (area < 0.0) {
    std::reverse(vertices_.begin(), vertices_.end());
    was_reversed_ = true;
  }
}

double Polygon2::Area() const { return SignedAreaOf(vertices_); }

double Polygon2::Perimeter() const {
  double length = 0.0;
  for (int i = 0; i < size(); ++i) {
    length += (vertices_[(i + 1) % size()] - vertices_[i]).norm();
  }
  return length;
}

double Polygon2::Diameter() const {
  double d = 0.0;
  for (const Vec2& p : vertices_) {
    for (const Vec2& q : vertices_) d = std::max(d, (p - q).norm());
  }
  return d;
}

bool Polygon2::IsConvex() const {
  const int n = size();
  const double scale = Diameter();
  const double eps = 1e-12 * scale * scale;
  int strict = 0;
  double turning = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec2 e0 = vertices_[i] - vertices_[(i + n - 1) % n];
    const Vec2 e1 = vertices_[(i + 1) % n] - vertices_[i];
    const double cross = Cross(e0, e1);
    if (cross < -eps) return false;
    if (cross > eps) ++strict;
    turning += std::atan2(cross, e0.dot(e1));
  }
  return 2 * strict > n && std::abs(turning - 2.0 * kPi) < 1e-9;
}

bool Polygon2::IsSimple() const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    const Vec2& a = vertices_[i];
    const Vec2& b = vertices_[(i + 1) % n];
    // Consecutive edges may only share their common vertex.
    const Vec2& c = vertices_[(i + 2) % n];
    if (Orientation(a, b, c) == 0 && (b - a).dot(c - b) < 0.0) return false;
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (SegmentsMeet(a, b, vertices_[j], vertices_[(j + 1) % n])) return false;
    }
  }
  return true;
}

RawMoments PolygonRawMoments(const Polygon2& polygon) {
  RawMoments raw = RawMoments::Zero(2, /*with_boundary=*/true);
  const auto& v = polygon.vertices();
  const int n = polygon.size();
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  double bxx = 0.0, byy = 0.0, bxy = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec2& p = v[i];
    const Vec2& q = v[(i + 1) % n];
    const double c = Cross(p, q);
    raw.volume += 0.5 * c;
    raw.first.x() += c * (p.x() + q.x()) / 6.0;
    raw.first.y() += c * (p.y() + q.y()) / 6.0;
    sxx += c * (p.x() * p.x() + p.x() * q.x() + q.x() * q.x());
    syy += c * (p.y() * p.y() + p.y() * q.y() + q.y() * q.y());
    sxy += c * (p.x() * q.y() + 2.0 * p.x() * p.y() + 2.0 * q.x() * q.y() +
                q.x() * p.y());

    // Exact integrals of 1, x, x^2, xy along the segment.
    const double len = (q - p).norm();
    raw.surface += len;
    raw.boundary_first += 0.5 * len * (p + q);
    bxx += len * (p.x() * p.x() + p.x() * q.x() + q.x() * q.x()) / 3.0;
    byy += len * (p.y() * p.y() + p.y() * q.y() + q.y() * q.y()) / 3.0;
    bxy += len * (2.0 * p.x() * p.y() + p.x() * q.y() + q.x() * p.y() +
                  2.0 * q.x() * q.y()) / 6.0;
  }
  raw.second << sxx / 12.0, sxy / 24.0, sxy / 24.0, syy / 12.0;
  raw.boundary_second << bxx, bxy, bxy, byy;
  return raw;
}

MomentSummary PolygonMoments(const Polygon2& polygon) {
  return Summarize(PolygonRawMoments(polygon));
}

Polygon2 RegularPolygon(int sides, double circumradius, Vec2 center) {
  if (sides < 3) throw Error(ErrorCode::kInvalidArgument, "sides < 3");
  std::vector<Vec2> v;
  v.reserve(sides);
  for (int i = 0; i < sides; ++i) {
    const double t = 2.0 * kPi * i / sides;
    v.push_back(center + circumradius * Vec2(std::cos(t), std::sin(t)));
  }
  return Polygon2(std::move(v));
}

Polygon2 Rectangle(Vec2 lo, Vec2 hi) {
  return Polygon2({lo, Vec2(hi.x(), lo.y()), hi, Vec2(lo.x(), hi.y())});
}

}  // namespace isoinertia
