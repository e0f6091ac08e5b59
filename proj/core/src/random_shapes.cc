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

#include "isoinertia/random_shapes.h"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "isoinertia/error.h"

namespace isoinertia {
namespace {

constexpr int kMaxAttempts = 1000;

double Cross(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

FourierBoundary ScaleCurve(const FourierBoundary& fb, double factor) {
  FourierBoundary out = fb;
  out.a0 *= factor;
  out.b0 *= factor;
  for (FourierMode& m : out.modes) {
    m.a *= factor;
    m.a_prime *= factor;
    m.b *= factor;
    m.b_prime *= factor;
  }
  return out;
}

}  // namespace

std::vector<Vec2> ConvexHull(std::vector<Vec2> points) {
  std::sort(points.begin(), points.end(), [](const Vec2& a, const Vec2& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;
  std::vector<Vec2> hull(2 * points.size());
  std::size_t k = 0;
  for (const Vec2& p : points) {
    while (k >= 2 && Cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
    while (k >= lower && Cross(hull[k - 2], hull[k - 1], *it) <= 0.0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

Polygon2 RandomConvexPolygon(Rng& rng, bool normalize_area) {
  std::uniform_int_distribution<int> count(6, 40);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    const int n = count(rng);
    std::vector<Vec2> points;
    for (int i = 0; i < n; ++i) {
      const double r = std::sqrt(unit(rng));
      const double t = 2.0 * kPi * unit(rng);
      points.emplace_back(r * std::cos(t), r * std::sin(t));
    }
    std::vector<Vec2> hull = ConvexHull(std::move(points));
    if (hull.size() < 3) continue;
    Polygon2 polygon(hull);
    if (!normalize_area) return polygon;
    const MomentSummary m = PolygonMoments(polygon);
    const Vec2 centroid = m.volume_centroid.head<2>();
    const double factor = std::sqrt(kPi / m.volume);
    for (Vec2& v : hull) v = factor * (v - centroid);
    return Polygon2(std::move(hull));
  }
}

FourierBoundary StarFourier(const std::vector<double>& alpha,
                            const std::vector<double>& beta) {
  const int cap = static_cast<int>(std::max(alpha.size(), beta.size())) - 1;
  FourierBoundary fb;
  fb.modes.resize(std::max(cap + 1, 1));
  fb.mode(1).a = 1.0;
  fb.mode(1).b_prime = 1.0;
  for (int m = 2; m <= cap; ++m) {
    const double a = m < static_cast<int>(alpha.size()) ? alpha[m] : 0.0;
    const double b = m < static_cast<int>(beta.size()) ? beta[m] : 0.0;
    // r(t) (cos t, sin t) expanded with product-to-sum identities.
    FourierMode& up = fb.mode(m + 1);
    FourierMode& down = fb.mode(m - 1);
    up.a += 0.5 * a;
    down.a += 0.5 * a;
    up.a_prime += 0.5 * b;
    down.a_prime += 0.5 * b;
    up.b_prime += 0.5 * a;
    down.b_prime -= 0.5 * a;
    down.b += 0.5 * b;
    up.b -= 0.5 * b;
  }
  return fb;
}

FourierBoundary RandomStarFourier(Rng& rng, int mode_cap, double amplitude,
                                  bool normalize_area) {
  if (!(amplitude >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "amplitude must be >= 0");
  }
  if (mode_cap < 2) return FourierBoundary::Circle(1.0);
  std::uniform_real_distribution<double> coefficient(-amplitude, amplitude);
  constexpr int kSamples = 1024;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<double> alpha(mode_cap + 1, 0.0), beta(mode_cap + 1, 0.0);
    for (int m = 2; m <= mode_cap; ++m) {
      alpha[m] = coefficient(rng) / m;
      beta[m] = coefficient(rng) / m;
    }
    double min_r = 1e300;
    for (int j = 0; j < kSamples; ++j) {
      const double t = 2.0 * kPi * j / kSamples;
      double r = 1.0;
      for (int m = 2; m <= mode_cap; ++m) {
        r += alpha[m] * std::cos(m * t) + beta[m] * std::sin(m * t);
      }
      min_r = std::min(min_r, r);
    }
    if (min_r < 0.2) continue;
    FourierBoundary fb = StarFourier(alpha, beta);
    if (normalize_area) fb = ScaleCurve(fb, std::sqrt(kPi / CoefficientArea(fb)));
    return fb;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "amplitude too large: no star curve with min r >= 0.2 found");
}

SimplicialBody RandomPerturbedBox(Rng& rng, int dimension, double amplitude) {
  const SimplicialBody cube = KuhnCube(dimension);
  std::uniform_real_distribution<double> offset(-amplitude, amplitude);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<VecX> vertices = cube.vertices();
    for (VecX& v : vertices) {
      for (int k = 0; k < dimension; ++k) v(k) += offset(rng);
    }
    try {
      return SimplicialBody(dimension, std::move(vertices), cube.simplices(),
                            cube.facets());
    } catch (const Error&) {
      // A simplex flipped; draw again.
    }
  }
  throw Error(ErrorCode::kInvalidArgument,
              "amplitude too large: perturbed boxes keep degenerating");
}

}  // namespace isoinertia
