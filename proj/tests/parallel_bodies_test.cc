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

#include <cmath>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "isoinertia/error.h"
#include "isoinertia/inequalities.h"
#include "isoinertia/parallel.h"
#include "isoinertia/random_shapes.h"
#include "oracles.h"

namespace isoinertia {
namespace {

Polygon2 Square() { return Polygon2({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}); }

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

// Area, J and I of the offset region by Gauss-Legendre along its boundary:
// offset edges and vertex arcs, with area = -int y dx, J_1 = -int x^2 y dx,
// J_2 = int x y^2 dy.
oracles::ReferenceMoments OffsetReference(const Polygon2& base, double h) {
  const auto& v = base.vertices();
  const int m = static_cast<int>(v.size());
  const QuadratureRule gl = GaussLegendre(24);
  oracles::ReferenceMoments out;
  auto accumulate = [&](const auto& curve, double length_scale) {
    for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
      const double t = 0.5 * (1.0 + gl.nodes[q]);
      const double w = 0.5 * gl.weights[q];
      const auto [p, d] = curve(t);
      out.volume -= w * p.y() * d.x();
      out.J.x() -= w * p.x() * p.x() * p.y() * d.x();
      out.J.y() += w * p.x() * p.y() * p.y() * d.y();
      out.surface += w * d.norm();
      out.I += w * d.norm() * p.cwiseProduct(p);
    }
    (void)length_scale;
  };
  auto normal = [](const Vec2& a, const Vec2& b) {
    const Vec2 e = (b - a).normalized();
    return Vec2(e.y(), -e.x());
  };
  for (int i = 0; i < m; ++i) {
    const Vec2& prev = v[(i + m - 1) % m];
    const Vec2& cur = v[i];
    const Vec2& next = v[(i + 1) % m];
    const double a0 = std::atan2(normal(prev, cur).y(), normal(prev, cur).x());
    double a1 = std::atan2(normal(cur, next).y(), normal(cur, next).x());
    while (a1 < a0) a1 += 2 * kPi;
    if (h > 0.0) {
      accumulate(
          [&](double t) {
            const double a = a0 + t * (a1 - a0);
            return std::pair<Vec2, Vec2>(
                cur + h * Vec2(std::cos(a), std::sin(a)),
                h * (a1 - a0) * Vec2(-std::sin(a), std::cos(a)));
          },
          1.0);
    }
    const Vec2 shift = h * normal(cur, next);
    accumulate(
        [&](double t) {
          return std::pair<Vec2, Vec2>(cur + shift + t * (next - cur),
                                       next - cur);
        },
        1.0);
  }
  return out;
}

TEST(OffsetBodyTest, SectorsTurnOnce) {
  Rng rng(1);
  for (int i = 0; i < 10; ++i) {
    const OffsetBody body(RandomConvexPolygon(rng), 0.3);
    EXPECT_NEAR(body.TotalTurning(), 2 * kPi, 1e-12);
    for (const OffsetSector& s : body.sectors()) {
      EXPECT_GE(s.sweep, 0.0);
      EXPECT_LT(s.sweep, kPi);
    }
  }
}

TEST(OffsetBodyTest, RejectsNonconvexBase) {
  const Polygon2 dart({{0, 0}, {2, 1}, {0, 2}, {1, 1}});
  EXPECT_EQ(CodeOf([&] { OffsetBody(dart, 0.1); }),
            ErrorCode::kHypothesisViolation);
}

TEST(OffsetBodyTest, RejectsNegativeRadius) {
  EXPECT_EQ(CodeOf([] { OffsetBody(Square(), -0.1); }),
            ErrorCode::kInvalidArgument);
}

TEST(OffsetMomentsTest, SquareAtUnitRadius) {
  const MomentSummary m = OffsetMoments(Square(), 1.0);
  EXPECT_NEAR(m.volume, 12.0 + kPi, 1e-13);
  EXPECT_NEAR(m.surface, 8.0 + 2 * kPi, 1e-13);

  oracles::Rng rng(2);
  const auto mc = oracles::HitOrMiss(
      [](const VecX& x) {
        const Vec2 outside = (x.cwiseAbs().array() - 1.0).max(0.0).matrix();
        return outside.norm() <= 1.0;
      },
      VecX::Constant(2, -2), VecX::Constant(2, 2), 200000, rng);
  EXPECT_TRUE(mc.volume.Agrees(m.volume));
  EXPECT_TRUE(mc.J[0].Agrees(m.J(0)));
  EXPECT_TRUE(mc.J[1].Agrees(m.J(1)));
}

TEST(OffsetMomentsTest, ZeroRadiusIsTheBase) {
  const MomentSummary a = OffsetMoments(Square(), 0.0);
  const MomentSummary b = PolygonMoments(Square());
  EXPECT_NEAR(a.volume, b.volume, 1e-15);
  EXPECT_TRUE(a.J.isApprox(b.J, 1e-15));
  EXPECT_TRUE(a.I.isApprox(b.I, 1e-15));
  EXPECT_NEAR(a.surface, b.surface, 1e-15);
}

TEST(OffsetMomentsTest, MatchesBoundaryQuadrature) {
  Rng rng(3);
  std::vector<Polygon2> bases = {Square()};
  for (int i = 0; i < 5; ++i) bases.push_back(RandomConvexPolygon(rng));
  for (const Polygon2& base : bases) {
    for (double h : {0.0, 0.5, 1.0}) {
      const MomentSummary m = OffsetMoments(base, h);
      const auto ref = OffsetReference(base, h);
      EXPECT_NEAR(m.volume, ref.volume, 1e-12 * ref.volume);
      EXPECT_NEAR(m.J(0), ref.J.x(), 1e-9 * ref.J.x());
      EXPECT_NEAR(m.J(1), ref.J.y(), 1e-9 * ref.J.y());
      EXPECT_NEAR(m.surface, ref.surface, 1e-12 * ref.surface);
      EXPECT_NEAR(m.I(0), ref.I.x(), 1e-9 * ref.I.x());
      EXPECT_NEAR(m.I(1), ref.I.y(), 1e-9 * ref.I.y());
    }
  }
}

TEST(OffsetMomentsTest, SteinerFormula) {
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const Polygon2 p = RandomConvexPolygon(rng);
    for (double h : {0.1, 0.7}) {
      const MomentSummary m = OffsetMoments(p, h);
      const double steiner = p.Area() + p.Perimeter() * h + kPi * h * h;
      EXPECT_NEAR(m.volume, steiner, 1e-13 * steiner);
    }
  }
}

TEST(OffsetMomentsTest, DerivativeAtZeroIsBoundaryMoment) {
  Rng rng(5);
  const Polygon2 p = RandomConvexPolygon(rng);
  const MomentSummary base = PolygonMoments(p);
  double previous_error = 0.0;
  for (double h : {1e-2, 1e-3, 1e-4}) {
    const double quotient = (OffsetMoments(p, h).J(0) - base.J(0)) / h;
    const double error = std::abs(quotient - base.I(0));
    if (previous_error > 0.0) {
      // Order one: the error shrinks about tenfold per decade.
      EXPECT_GT(previous_error / error, 5.0);
    }
    previous_error = error;
  }
  EXPECT_LT(previous_error, 1e-3 * base.I(0));
}

TEST(FitExpansionTest, Square) {
  const ExpansionFit fit = FitExpansion(Square(), 0, DefaultExpansionGrid());
  ASSERT_EQ(fit.coefficients.size(), 5u);
  EXPECT_NEAR(fit.coefficients[0], 4.0 / 3.0, 1e-9 * 4.0 / 3.0);
  EXPECT_NEAR(fit.coefficients[1], 16.0 / 3.0, 1e-8 * 16.0 / 3.0);
  EXPECT_LT(fit.residual, 1e-10);
}

TEST(FitExpansionTest, RegularHexagon) {
  const Polygon2 hexagon = RegularPolygon(6, 1.0);
  const MomentSummary m = PolygonMoments(hexagon);
  for (int axis = 0; axis < 2; ++axis) {
    const ExpansionFit fit = FitExpansion(hexagon, axis, DefaultExpansionGrid());
    EXPECT_NEAR(fit.coefficients[1], m.I(axis), 1e-8 * m.I(axis));
  }
}

TEST(FitExpansionTest, RandomPolygons) {
  Rng rng(6);
  for (int i = 0; i < 10; ++i) {
    const Polygon2 p = RandomConvexPolygon(rng);
    const MomentSummary m = PolygonMoments(p);
    for (int axis = 0; axis < 2; ++axis) {
      const ExpansionFit fit = FitExpansion(p, axis, DefaultExpansionGrid());
      EXPECT_NEAR(fit.coefficients[0], m.J(axis), 1e-9 * m.J(axis));
      EXPECT_NEAR(fit.coefficients[1], m.I(axis), 1e-8 * m.I(axis));
      EXPECT_LT(fit.residual, 1e-10);
    }
  }
}

TEST(FitExpansionTest, GridValidation) {
  EXPECT_EQ(CodeOf([] { FitExpansion(Square(), 0, {0.0, 0.2, 0.4, 0.6, 0.8}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] {
              FitExpansion(Square(), 0, {0.0, 0.2, 0.4, 0.6, 0.8, 1.5});
            }),
            ErrorCode::kInvalidArgument);
  std::vector<double> clustered;
  for (int i = 0; i < 8; ++i) clustered.push_back(0.5 + 1e-5 * i);
  EXPECT_EQ(CodeOf([&] { FitExpansion(Square(), 0, clustered); }),
            ErrorCode::kIllConditioned);
}

TEST(BallPolynomialTest, Disc) {
  EXPECT_THAT(BallParallelMomentPolynomial(2, 1.0),
              ::testing::Pointwise(::testing::DoubleNear(1e-15),
                                   {kPi / 4, kPi, 1.5 * kPi, kPi, kPi / 4}));
}

TEST(BallPolynomialTest, LinearCoefficientIsBoundaryMoment) {
  for (int n = 2; n <= 4; ++n) {
    const auto c = BallParallelMomentPolynomial(n, 1.0);
    EXPECT_EQ(c.size(), static_cast<std::size_t>(n + 3));
    EXPECT_NEAR(c[1], UnitBallVolume(n), 1e-14);
  }
}

TEST(BallPolynomialTest, RootIsLinear) {
  // g(h) = J(B_{1+h})^{1/4} = (pi/4)^{1/4} (1 + h).
  const auto c = BallParallelMomentPolynomial(2, 1.0);
  auto g = [&](double h) {
    double value = 0.0, power = 1.0;
    for (double coefficient : c) {
      value += coefficient * power;
      power *= h;
    }
    return std::pow(value, 0.25);
  };
  const std::vector<double> grid = UniformGrid(12);
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    EXPECT_NEAR(g(grid[i - 1]) - 2 * g(grid[i]) + g(grid[i + 1]), 0.0, 1e-14);
  }
  EXPECT_NEAR(g(1.0) - g(0.0), std::pow(kPi / 4, 0.25), 1e-9);
}

TEST(ConcavityScanTest, SquareVolume) {
  const ConcavityReport r = ConcavityScan(Square(), ParallelFunctional::kVolume,
                                          0, 0.5, UniformGrid(12));
  EXPECT_TRUE(r.concave);
  for (double d : r.second_differences) EXPECT_LE(d, 1e-10);
}

TEST(ConcavityScanTest, SquareAxisMoment) {
  const std::vector<double> grid = UniformGrid(12);
  const ConcavityReport r =
      ConcavityScan(Square(), ParallelFunctional::kAxisMoment, 0, 0.25, grid);
  EXPECT_TRUE(r.concave);
  EXPECT_NEAR(r.slope_bound, std::pow(kPi / 4, 0.25), 1e-15);
  EXPECT_TRUE(r.slope_bound_holds);
  const double forward = (r.g[1] - r.g[0]) / (grid[1] - grid[0]);
  EXPECT_GE(forward, std::pow(kPi / 4, 0.25) - 1e-6);
}

TEST(ConcavityScanTest, RandomPolygons) {
  Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    const Polygon2 p = RandomConvexPolygon(rng);
    for (int axis = 0; axis < 2; ++axis) {
      const ConcavityReport r = ConcavityScan(
          p, ParallelFunctional::kAxisMoment, axis, 0.25, UniformGrid(12));
      EXPECT_TRUE(r.concave);
      EXPECT_TRUE(r.slope_bound_holds);
      EXPECT_LE(r.max_second_difference, 1e-10);
    }
  }
}

TEST(ConcavityScanTest, BoundaryBoundFollowsOnPolygons) {
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const Polygon2 p = RandomConvexPolygon(rng);
    const InequalityReport per_axis = EvaluateInequality(InequalityId::kPerAxis, p);
    EXPECT_GE(per_axis.margin, -1e-12 * std::max(per_axis.lhs, per_axis.rhs));
    const InequalityReport classical =
        EvaluateInequality(InequalityId::kClassicalIso, p);
    EXPECT_TRUE(classical.holds);
  }
}

}  // namespace
}  // namespace isoinertia
