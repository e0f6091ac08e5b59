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
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>
#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "isoinertia/error.h"
#include "isoinertia/placement.h"
#include "isoinertia/random_shapes.h"
#include "isoinertia/shape.h"
#include "oracles.h"

namespace isoinertia {
namespace {

using ::testing::ElementsAre;

Polygon2 Square() { return Polygon2({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}); }

VecX V(std::initializer_list<double> values) {
  VecX v(values.size());
  int i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(UnitBallVolumeTest, LowDimensions) {
  EXPECT_NEAR(UnitBallVolume(2), kPi, 1e-15);
  EXPECT_NEAR(UnitBallVolume(3), 4.0 * kPi / 3.0, 1e-15);
  EXPECT_NEAR(UnitBallVolume(4), kPi * kPi / 2.0, 1e-14);
  EXPECT_NEAR(UnitBallVolume(5), 8.0 * kPi * kPi / 15.0, 1e-14);
}

TEST(PolygonTest, SquareMoments) {
  const MomentSummary m = PolygonMoments(Square());
  EXPECT_DOUBLE_EQ(m.volume, 4.0);
  EXPECT_DOUBLE_EQ(m.surface, 8.0);
  EXPECT_NEAR(m.J(0), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(m.J(1), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(m.I(0), 16.0 / 3.0, 1e-14);
  EXPECT_NEAR(m.I(1), 16.0 / 3.0, 1e-14);
  EXPECT_NEAR(m.J0, 8.0 / 3.0, 1e-15);
  EXPECT_NEAR(m.I0, 32.0 / 3.0, 1e-14);
}

TEST(PolygonTest, SquareAgreesWithMonteCarlo) {
  oracles::Rng rng(1);
  const auto v = Square().vertices();
  const MomentSummary m = PolygonMoments(Square());
  const oracles::Box box = oracles::BoundingBox(v, 0.1);
  const auto mc = oracles::HitOrMiss(
      [&](const VecX& x) { return oracles::InsidePolygon(v, Vec2(x)); },
      box.lo, box.hi, 200000, rng);
  EXPECT_TRUE(mc.volume.Agrees(m.volume));
  EXPECT_TRUE(mc.J[0].Agrees(m.J(0)));
  EXPECT_TRUE(mc.J[1].Agrees(m.J(1)));
}

TEST(PolygonTest, Simplicity) {
  EXPECT_TRUE(Polygon2({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}).IsSimple());
  EXPECT_TRUE(Polygon2({{0, 0}, {2, 1}, {0, 2}, {1, 1}}).IsSimple());
  EXPECT_FALSE(Polygon2({{0, 0}, {3, 3}, {3, 0}, {0, 1}}).IsSimple());
  // Touching at a vertex.
  EXPECT_FALSE(Polygon2({{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}, {1, 1}}).IsSimple());
  // Backtracking along an edge.
  EXPECT_FALSE(Polygon2({{0, 0}, {2, 0}, {1, 0}, {1, 1}}).IsSimple());
  Rng rng(21);
  for (int i = 0; i < 20; ++i) EXPECT_TRUE(RandomConvexPolygon(rng).IsSimple());
}

TEST(PolygonTest, Triangle) {
  const MomentSummary m = PolygonMoments(Polygon2({{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_NEAR(m.volume, 0.5, 1e-15);
  EXPECT_NEAR(m.J(0), 1.0 / 12.0, 1e-15);
}

TEST(PolygonTest, ClockwiseInputIsReversed) {
  const Polygon2 p({{-1, 1}, {1, 1}, {1, -1}, {-1, -1}});
  EXPECT_TRUE(p.was_reversed());
  EXPECT_GT(p.Area(), 0.0);
  EXPECT_NEAR(PolygonMoments(p).J(1), 4.0 / 3.0, 1e-15);
}

TEST(PolygonTest, ReflectionLeavesSummaryUnchanged) {
  const Polygon2 square = Square();
  std::vector<Vec2> mirrored;
  for (const Vec2& v : square.vertices()) mirrored.emplace_back(-v.x(), v.y());
  const MomentSummary a = PolygonMoments(Square());
  const MomentSummary b = PolygonMoments(Polygon2(mirrored));
  EXPECT_DOUBLE_EQ(a.volume, b.volume);
  EXPECT_TRUE(a.J.isApprox(b.J, 1e-15));
  EXPECT_TRUE(a.I.isApprox(b.I, 1e-15));
}

TEST(PolygonTest, MatchesReferenceQuadratureOnRandomPolygons) {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const Polygon2 p = RandomConvexPolygon(rng);
    const MomentSummary m = PolygonMoments(p);
    const auto ref = oracles::PolygonReference(p.vertices());
    EXPECT_NEAR(m.volume, ref.volume, 1e-12 * ref.volume);
    EXPECT_NEAR(m.J(0), ref.J.x(), 1e-12 * ref.J.x());
    EXPECT_NEAR(m.J(1), ref.J.y(), 1e-12 * ref.J.y());
    EXPECT_NEAR(m.surface, ref.surface, 1e-12 * ref.surface);
    EXPECT_NEAR(m.I(0), ref.I.x(), 1e-12 * ref.I.x());
    EXPECT_NEAR(m.I(1), ref.I.y(), 1e-12 * ref.I.y());
  }
}

TEST(PolygonTest, RejectsInvalidInput) {
  EXPECT_EQ(CodeOf([] { Polygon2({{0, 0}, {1, 0}}); }), ErrorCode::kInvalidShape);
  EXPECT_EQ(CodeOf([] { Polygon2({{0, 0}, {0, 0}, {1, 1}}); }),
            ErrorCode::kInvalidShape);
  EXPECT_EQ(CodeOf([] { Polygon2({{0, 0}, {1, 1}, {2, 2}}); }),
            ErrorCode::kDegenerate);
}

TEST(SimplicialTest, StandardSimplex3) {
  const MomentSummary m = SimplicialMoments(StandardSimplex(3));
  EXPECT_NEAR(m.volume, 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(m.J(0), 1.0 / 60.0, 1e-15);
}

TEST(SimplicialTest, KuhnCube3) {
  const SimplicialBody cube = KuhnCube(3);
  EXPECT_EQ(cube.simplices().size(), 6u);
  EXPECT_EQ(cube.facets().size(), 12u);
  const MomentSummary m = SimplicialMoments(cube);
  EXPECT_NEAR(m.volume, 1.0, 1e-14);
  EXPECT_NEAR(m.surface, 6.0, 1e-14);
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(m.J(k), 1.0 / 3.0, 1e-14);
    EXPECT_NEAR(m.I(k), 1.0 + 4.0 / 3.0, 1e-14);
  }
}

TEST(SimplicialTest, MirrorImageHasEqualSummary) {
  Rng rng(4);
  const SimplicialBody body = RandomPerturbedBox(rng, 3, 0.1);
  std::vector<VecX> mirrored = body.vertices();
  for (VecX& v : mirrored) v(0) = -v(0);
  const SimplicialBody image =
      SimplicialBody::FromSimplices(3, mirrored, body.simplices());
  const MomentSummary a = SimplicialMoments(body);
  const MomentSummary b = SimplicialMoments(image);
  EXPECT_NEAR(a.volume, b.volume, 1e-14);
  EXPECT_TRUE(a.J.isApprox(b.J, 1e-13));
  EXPECT_TRUE(a.I.isApprox(b.I, 1e-13));
}

// The per-simplex closed form is checked against sampling on three random
// simplices in each of N = 2, 3, 4 before any other test relies on it.
TEST(SimplicialTest, ClosedFormMatchesMonteCarloOnRandomSimplices) {
  oracles::Rng rng(5);
  std::normal_distribution<double> gauss;
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<VecX> vertices(n + 1, VecX(n));
      for (VecX& v : vertices) {
        for (int k = 0; k < n; ++k) v(k) = gauss(rng);
      }
      std::vector<int> simplex(n + 1);
      for (int i = 0; i <= n; ++i) simplex[i] = i;
      const SimplicialBody body =
          SimplicialBody::FromSimplices(n, vertices, {simplex});
      const MomentSummary m = SimplicialMoments(body);
      const auto rule = oracles::SimplexRuleReference(body);
      EXPECT_NEAR(m.volume, rule.volume, 1e-13 * rule.volume);
      EXPECT_TRUE(m.J.isApprox(rule.J, 1e-12));

      const oracles::Box box = oracles::BoundingBox(vertices);
      const auto mc = oracles::HitOrMiss(
          [&](const VecX& x) { return oracles::InsideSimplicial(body, x); },
          box.lo, box.hi, 200000, rng);
      EXPECT_TRUE(mc.volume.Agrees(m.volume)) << "N=" << n;
      for (int k = 0; k < n; ++k) EXPECT_TRUE(mc.J[k].Agrees(m.J(k)));
      const auto boundary = oracles::FacetSampling(body, 100000, rng);
      for (int k = 0; k < n; ++k) EXPECT_TRUE(boundary[k].Agrees(m.I(k)));
    }
  }
}

TEST(SimplicialTest, RejectsDegenerateSimplex) {
  std::vector<VecX> v = {V({0, 0}), V({1, 0}), V({2, 0})};
  EXPECT_EQ(CodeOf([&] { SimplicialBody::FromSimplices(2, v, {{0, 1, 2}}); }),
            ErrorCode::kDegenerate);
}

TEST(SimplicialTest, RejectsInwardFacets) {
  const SimplicialBody simplex = StandardSimplex(2);
  std::vector<std::vector<int>> flipped = simplex.facets();
  for (auto& f : flipped) std::swap(f[0], f[1]);
  EXPECT_EQ(CodeOf([&] {
              SimplicialBody(2, simplex.vertices(), simplex.simplices(), flipped);
            }),
            ErrorCode::kInconsistentOrientation);
}

TEST(SimplicialTest, RejectsOpenBoundary) {
  const SimplicialBody simplex = StandardSimplex(3);
  std::vector<std::vector<int>> facets = simplex.facets();
  facets.pop_back();
  EXPECT_EQ(CodeOf([&] {
              SimplicialBody(3, simplex.vertices(), simplex.simplices(), facets);
            }),
            ErrorCode::kInconsistentOrientation);
}

TEST(EllipsoidTest, UnitBall3) {
  const MomentSummary m = EllipsoidMoments(Ellipsoid::Ball(3, 1.0));
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(m.J(k), 4.0 * kPi / 15.0, 1e-15);
}

TEST(EllipsoidTest, UnitDiscSaturatesPerAxisBound) {
  const MomentSummary m = EllipsoidMoments(Ellipsoid::Ball(2, 1.0));
  EXPECT_NEAR(m.I(0), kPi, 1e-15);
  EXPECT_NEAR(std::pow(m.I(0), 4), 64.0 * kPi * std::pow(kPi / 4.0, 3),
              1e-12 * std::pow(kPi, 4));
}

TEST(EllipsoidTest, Ellipse) {
  const MomentSummary m = EllipsoidMoments(Ellipsoid(V({0, 0}), V({2, 0.5})));
  EXPECT_NEAR(m.volume, kPi, 1e-15);
  EXPECT_NEAR(m.J(0), kPi, 1e-15);
  EXPECT_NEAR(m.J(1), kPi / 16.0, 1e-15);
  EXPECT_NEAR(m.J_product, kPi * kPi / 16.0, 1e-14);
  const auto ref = oracles::FourierReference(FourierBoundary::Ellipse(2, 0.5));
  EXPECT_NEAR(m.I(0), ref.I.x(), 1e-12 * ref.I.x());
  EXPECT_NEAR(m.I(1), ref.I.y(), 1e-12 * ref.I.y());
}

TEST(EllipsoidTest, BallClosedForms) {
  for (int n = 2; n <= 4; ++n) {
    for (double r : {0.5, 1.0, 2.0}) {
      const MomentSummary m = EllipsoidMoments(Ellipsoid::Ball(n, r));
      const double j = std::pow(r, n + 2) * UnitBallVolume(n) / (n + 2);
      const double i = UnitBallVolume(n) * std::pow(r, n + 1);
      for (int k = 0; k < n; ++k) {
        EXPECT_NEAR(m.J(k), j, 1e-12 * j);
        EXPECT_NEAR(m.I(k), i, 1e-12 * i);
      }
    }
  }
}

TEST(EllipsoidTest, NonSphericalBoundaryInHigherDimensionIsUnsupported) {
  const Ellipsoid e(V({0, 0, 0}), V({1, 2, 3}));
  EXPECT_EQ(CodeOf([&] { EllipsoidMoments(e); }), ErrorCode::kUnsupported);
  EXPECT_NEAR(EllipsoidMoments(e, MomentScope::kVolumeOnly).volume,
              4.0 * kPi * 6.0 / 3.0, 1e-13);
}

TEST(EllipsoidTest, RejectsNonPositiveAxis) {
  EXPECT_EQ(CodeOf([] { Ellipsoid(V({0, 0}), V({1, 0})); }),
            ErrorCode::kInvalidShape);
}

TEST(SummaryTest, Invariants) {
  Rng rng(6);
  for (int i = 0; i < 10; ++i) {
    const Shape shape = RandomPerturbedBox(rng, 3, 0.15);
    const MomentSummary m = Moments(shape);
    EXPECT_NEAR(m.J0, m.J.sum(), 1e-15 * m.J0);
    EXPECT_NEAR(m.I0, m.I.sum(), 1e-15 * m.I0);
    EXPECT_NEAR(m.J_product, m.J.prod(), 1e-15 * m.J_product);
    EXPECT_TRUE(m.inertia.isApprox(m.inertia.transpose(), 0.0));
    EXPECT_TRUE(m.inertia.diagonal() == m.J);
    const VecX eig = Eigen::SelfAdjointEigenSolver<MatX>(m.inertia).eigenvalues();
    EXPECT_NEAR(m.determinant, eig.prod(), 1e-12 * std::abs(m.determinant));
    EXPECT_GT(m.volume, 0.0);
    EXPECT_GT(m.J.minCoeff(), 0.0);
    EXPECT_GT(m.I.minCoeff(), 0.0);
  }
}

TEST(SummaryTest, PolarMomentIsSmallestAboutCentroid) {
  Rng rng(7);
  std::normal_distribution<double> gauss;
  for (int i = 0; i < 10; ++i) {
    const Polygon2 p = RandomConvexPolygon(rng);
    const Shape centered =
        CanonicalPlacement(p, Centering::kVolume, false).shape;
    const double base = Moments(centered).J0;
    for (int t = 0; t < 5; ++t) {
      const Shape moved = Translated(centered, V({gauss(rng), gauss(rng)}));
      EXPECT_LE(base, Moments(moved).J0);
    }
  }
}

TEST(PlacementTest, TranslatedSquare) {
  const Shape shape = Translated(Square(), V({5, 7}));
  const PlacedShape placed = CanonicalPlacement(shape, Centering::kVolume, true);
  EXPECT_TRUE(placed.placement.translation.isApprox(V({-5, -7}), 1e-14));
  EXPECT_TRUE(placed.placement.rotation.isIdentity(1e-14));
  EXPECT_LT(Moments(placed.shape).volume_centroid.norm(), 1e-12);
}

TEST(PlacementTest, RotatedRectangleIsAligned) {
  const double c = std::cos(kPi / 6), s = std::sin(kPi / 6);
  const Polygon2 rectangle = Rectangle(Vec2(-2, -0.5), Vec2(2, 0.5));
  std::vector<Vec2> v;
  for (const Vec2& p : rectangle.vertices()) {
    v.emplace_back(c * p.x() - s * p.y() + 3.0, s * p.x() + c * p.y() - 1.0);
  }
  const PlacedShape placed =
      CanonicalPlacement(Polygon2(v), Centering::kBoundary, true);
  const MomentSummary m = Moments(placed.shape);
  EXPECT_LT(m.boundary_centroid.norm(), 1e-12 * 4.0);
  EXPECT_LT(std::abs(m.boundary_inertia(0, 1)), 1e-10 * m.I0);
  const MatX& r = placed.placement.rotation;
  EXPECT_TRUE((r * r.transpose()).isIdentity(1e-12));
  EXPECT_NEAR(r.determinant(), 1.0, 1e-12);
  // Original vertices map to the placed ones.
  const auto& placed_vertices = std::get<Polygon2>(placed.shape).vertices();
  EXPECT_TRUE(placed.placement.Apply(VecX(v[0])).isApprox(VecX(placed_vertices[0]), 1e-12));
}

TEST(PlacementTest, DiscGetsIdentityRotation) {
  const Shape disc = Ellipsoid::Ball(2, 1.0, V({3, -4}));
  const PlacedShape placed = CanonicalPlacement(disc, Centering::kBoundary, true);
  EXPECT_TRUE(placed.placement.rotation.isIdentity(0.0));
  EXPECT_TRUE(placed.placement.translation.isApprox(V({-3, 4}), 1e-15));
}

TEST(PlacementTest, TieBreakPicksRotationClosestToIdentity) {
  // Diagonal with a tie: the identity already diagonalizes.
  MatX m = MatX::Zero(3, 3);
  m.diagonal() << 2.0, 2.0, 1.0;
  EXPECT_TRUE(ClosestToIdentityDiagonalizer(m).isIdentity(1e-14));
}

TEST(AffinityTest, DiscToEllipse) {
  const Shape image = ApplyAffinity(Ellipsoid::Ball(2, 1.0), V({2, 0.5}));
  const MomentSummary m = Moments(image);
  EXPECT_NEAR(m.J(0), kPi, 1e-14);
  EXPECT_NEAR(m.J(1), kPi / 16.0, 1e-15);
  EXPECT_NEAR(m.J_product, Moments(Ellipsoid::Ball(2, 1.0)).J_product, 1e-15);
}

TEST(AffinityTest, UnitScalesAreIdentity) {
  const MomentSummary a = Moments(Square());
  const MomentSummary b = Moments(ApplyAffinity(Square(), V({1, 1})));
  EXPECT_TRUE(a.J.isApprox(b.J, 0.0));
  EXPECT_TRUE(a.I.isApprox(b.I, 0.0));
}

TEST(AffinityTest, SquareToRectangle) {
  const MomentSummary m = Moments(ApplyAffinity(Square(), V({2, 0.5})));
  EXPECT_NEAR(m.J(0), 16.0 / 3.0, 1e-14);
  // Width 4 times int_{-1/2}^{1/2} y^2 dy = 1/12.
  EXPECT_NEAR(m.J(1), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(m.J_product, 16.0 / 9.0, 1e-14);
}

TEST(AffinityTest, RejectsNonPositiveScale) {
  EXPECT_EQ(CodeOf([] { ApplyAffinity(Square(), V({1, 0})); }),
            ErrorCode::kInvalidArgument);
}

TEST(AffinityTest, ProductInvariantUnderVolumePreservingScalings) {
  Rng rng(8);
  std::uniform_real_distribution<double> log_scale(-1.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const int n = 2 + i % 3;
    const Shape shape =
        n == 2 ? Shape(RandomConvexPolygon(rng)) : Shape(RandomPerturbedBox(rng, n, 0.1));
    VecX t(n);
    for (int k = 0; k < n; ++k) t(k) = std::exp(log_scale(rng));
    t /= std::pow(t.prod(), 1.0 / n);
    const double before = Moments(shape, MomentScope::kVolumeOnly).J_product;
    const MomentSummary after = Moments(ApplyAffinity(shape, t), MomentScope::kVolumeOnly);
    EXPECT_NEAR(after.J_product, before, 1e-10 * before);
  }
}

TEST(NormalizeJTest, EllipseBecomesDisc) {
  const JNormalization r = NormalizeJ(Ellipsoid(V({0, 0}), V({2, 0.5})));
  EXPECT_TRUE(r.scales.isApprox(V({0.5, 2.0}), 1e-14));
  const auto& e = std::get<Ellipsoid>(r.shape);
  EXPECT_TRUE(e.semi_axes().isApprox(V({1, 1}), 1e-14));
}

TEST(NormalizeJTest, BallIsUnchanged) {
  const JNormalization r = NormalizeJ(Ellipsoid::Ball(3, 2.0));
  EXPECT_TRUE(r.scales.isApprox(VecX::Ones(3), 1e-15));
}

TEST(NormalizeJTest, RectangleBecomesSquare) {
  const JNormalization r = NormalizeJ(Rectangle(Vec2(-2, -0.5), Vec2(2, 0.5)));
  EXPECT_TRUE(r.scales.isApprox(V({0.5, 2.0}), 1e-14));
  const MomentSummary m = Moments(r.shape);
  EXPECT_NEAR(m.J(0), 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(m.J(1), 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(m.J0, 2.0 * std::sqrt(16.0 / 9.0), 1e-14);
}

TEST(NormalizeJTest, EqualizesRandomBodies) {
  Rng rng(9);
  for (int i = 0; i < 10; ++i) {
    const Shape shape = RandomPerturbedBox(rng, 3, 0.1);
    const double product = Moments(shape, MomentScope::kVolumeOnly).J_product;
    const JNormalization r = NormalizeJ(shape);
    EXPECT_NEAR(r.scales.prod(), 1.0, 1e-12);
    const VecX j = Moments(r.shape, MomentScope::kVolumeOnly).J;
    const double target = std::cbrt(product);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(j(k), target, 1e-10 * target);
  }
}

TEST(NormalizeJTest, ListsScalesAsExpected) {
  const JNormalization r = NormalizeJ(Rectangle(Vec2(-1, -1), Vec2(1, 1)));
  EXPECT_THAT(std::vector<double>(r.scales.data(), r.scales.data() + 2),
              ElementsAre(1.0, 1.0));
}

}  // namespace
}  // namespace isoinertia
