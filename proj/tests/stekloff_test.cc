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
#include <functional>
#include <vector>

#include <Eigen/Eigenvalues>
#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "isoinertia/error.h"
#include "isoinertia/random_shapes.h"
#include "isoinertia/stekloff.h"
#include "oracles.h"

namespace isoinertia {
namespace {

using ::testing::DoubleNear;
using ::testing::ElementsAre;
using ::testing::Pointwise;

Polygon2 Square() { return Polygon2({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}); }
Shape Disc() { return FourierBoundary::Circle(1.0); }
// Area pi.
Shape EccentricEllipse() { return FourierBoundary::Ellipse(1.5, 1.0 / 1.5); }

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(TrialSpaceTest, HarmonicSpaceSize) {
  EXPECT_EQ(HarmonicTrialSpace(5).size(), 10u);
  EXPECT_EQ(CoordinateTrialSpace().size(), 2u);
  EXPECT_FALSE(TrialFunction::Monomial(2, 0).IsHarmonic());
  EXPECT_TRUE(TrialFunction::Monomial(1, 1).IsHarmonic());
}

TEST(CoordinateBoundsTest, Disc) {
  const StekloffBounds b = CoordinateBounds(Ellipsoid::Ball(2, 1.0));
  EXPECT_THAT(b.bounds, Pointwise(DoubleNear(1e-12), {1.0, 1.0}));
  EXPECT_NEAR(b.product, 1.0, 1e-12);
}

TEST(CoordinateBoundsTest, Square) {
  const StekloffBounds b = CoordinateBounds(Square());
  EXPECT_THAT(b.bounds, Pointwise(DoubleNear(1e-14), {0.75, 0.75}));
  EXPECT_NEAR(b.product, 9.0 / 16.0, 1e-14);
  EXPECT_LE(b.product, kPi / 4);
}

TEST(CoordinateBoundsTest, Ellipse) {
  const Ellipsoid e(VecX::Zero(2), (VecX(2) << 2.0, 0.5).finished());
  const StekloffBounds b = CoordinateBounds(e);
  const auto ref = oracles::FourierReference(FourierBoundary::Ellipse(2.0, 0.5));
  EXPECT_NEAR(b.product, kPi * kPi / (ref.I.x() * ref.I.y()), 1e-12);
  EXPECT_LE(b.product, 1.0);
}

TEST(CoordinateBoundsTest, ThreeDimensionalBox) {
  const StekloffBounds b = CoordinateBounds(KuhnCube(3, -1.0, 1.0));
  // |Omega| = 8, I_k = 2 * 4 + 4 * (4 / 3) = 40/3.
  EXPECT_THAT(b.bounds, Pointwise(DoubleNear(1e-13), {0.6, 0.6, 0.6}));
}

TEST(RayleighPairTest, DiscCoordinateSpace) {
  const RayleighPair pair = MakeRayleighPair(Disc(), CoordinateTrialSpace());
  EXPECT_THAT(pair.roots, Pointwise(DoubleNear(1e-12), {1.0, 1.0}));
  EXPECT_TRUE(pair.A.isApprox(pair.A.transpose(), 1e-12));
  EXPECT_TRUE(pair.B.isApprox(pair.B.transpose(), 1e-12));
  EXPECT_TRUE(pair.A.isApprox(pair.B, 1e-12));
}

TEST(RayleighPairTest, DiscHarmonicDegreeThree) {
  const RayleighPair pair = MakeRayleighPair(Disc(), HarmonicTrialSpace(3));
  EXPECT_THAT(pair.roots,
              Pointwise(DoubleNear(1e-10), {1.0, 1.0, 2.0, 2.0, 3.0, 3.0}));
  for (double r : pair.residuals) EXPECT_LT(r, 1e-8);
}

TEST(RayleighPairTest, PolygonMatricesAreSymmetricDefinite) {
  const RayleighPair pair = MakeRayleighPair(Square(), HarmonicTrialSpace(6));
  EXPECT_TRUE(pair.A.isApprox(pair.A.transpose(), 1e-10));
  EXPECT_GT(Eigen::SelfAdjointEigenSolver<MatX>(pair.B).eigenvalues().minCoeff(), 0.0);
  for (double r : pair.roots) EXPECT_GT(r, 0.0);
  EXPECT_TRUE(std::is_sorted(pair.roots.begin(), pair.roots.end()));
}

TEST(RayleighPairTest, ConstantTrialFunctionVanishes) {
  EXPECT_EQ(CodeOf([] {
              MakeRayleighPair(Disc(), {TrialFunction::Monomial(0, 0),
                                        TrialFunction::Re(1)});
            }),
            ErrorCode::kDegenerate);
}

TEST(RayleighPairTest, NonHarmonicTrialFunctionIsUnsupported) {
  EXPECT_EQ(CodeOf([] {
              MakeRayleighPair(Disc(), {TrialFunction::Monomial(2, 0)});
            }),
            ErrorCode::kUnsupported);
}

TEST(RayleighPairTest, DiscExactnessAtDegreeEight) {
  const RayleighPair pair = MakeRayleighPair(Disc(), HarmonicTrialSpace(8));
  const auto exact = oracles::DiscSteklovEigenvalues(1.0, 17);
  EXPECT_THAT(pair.roots,
              Pointwise(DoubleNear(1e-8), std::vector<double>(exact.begin() + 1, exact.end())));
}

TEST(ConvergeSpectrumTest, Disc) {
  const StekloffBounds b = ConvergeSpectrum(Disc(), 12, 1e-10);
  EXPECT_TRUE(b.converged);
  ASSERT_GE(b.bounds.size(), 4u);
  EXPECT_THAT(std::vector<double>(b.bounds.begin(), b.bounds.begin() + 4),
              Pointwise(DoubleNear(1e-10), {1.0, 1.0, 2.0, 2.0}));
  EXPECT_NEAR(b.history[1][2], 2.0, 1e-10);
}

TEST(ConvergeSpectrumTest, EccentricEllipse) {
  const StekloffBounds b = ConvergeSpectrum(EccentricEllipse(), 24, 1e-10);
  EXPECT_TRUE(b.converged);
  EXPECT_LT(b.bounds[0] * b.bounds[1], 1.0);
}

TEST(ConvergeSpectrumTest, SquareStaysBelowCoordinateBound) {
  const StekloffBounds b = ConvergeSpectrum(Square(), 16, 1e-10);
  for (const auto& h : b.history) EXPECT_LE(h[0], 0.75 + 1e-12);
}

TEST(ConvergeSpectrumTest, BoundsDecreaseWithDegree) {
  Rng rng(1);
  std::vector<Shape> shapes = {Square(), EccentricEllipse()};
  for (int i = 0; i < 3; ++i) shapes.push_back(oracles::SmoothConvexFourier(rng));
  for (const Shape& shape : shapes) {
    const StekloffBounds b = ConvergeSpectrum(shape, 16, 1e-10);
    for (std::size_t m = 1; m < b.history.size(); ++m) {
      const std::size_t common = std::min(b.history[m].size(), b.history[m - 1].size());
      for (std::size_t k = 0; k < common; ++k) {
        // Nested trial spaces; the slack covers rounding in the
        // generalized eigensolve, which grows with the Gram condition.
        EXPECT_LE(b.history[m][k], b.history[m - 1][k] * (1 + 1e-10));
      }
    }
  }
}

TEST(ConvergeSpectrumTest, CoordinateBoundsAreUpperBounds) {
  Rng rng(2);
  for (int i = 0; i < 3; ++i) {
    const Shape shape = oracles::SmoothConvexFourier(rng);
    const StekloffBounds coordinate = CoordinateBounds(shape);
    const StekloffBounds converged = ConvergeSpectrum(shape, 24, 1e-10);
    EXPECT_GE(coordinate.bounds[0], converged.bounds[0]);
    EXPECT_GE(coordinate.bounds[1], converged.bounds[1]);
  }
}

TEST(ConvergeSpectrumTest, ScalingDividesEigenvalues) {
  Rng rng(3);
  const Shape shape = oracles::SmoothConvexFourier(rng);
  const StekloffBounds a = ConvergeSpectrum(shape, 24, 1e-10);
  const StekloffBounds b = ConvergeSpectrum(Scaled(shape, 2.5), 24, 1e-10);
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(b.bounds[k], a.bounds[k] / 2.5, 1e-9 * a.bounds[k]);
  }
}

TEST(ConvergeSpectrumTest, ReportsNonConvergence) {
  const StekloffBounds b = ConvergeSpectrum(Square(), 3, 1e-14);
  EXPECT_FALSE(b.converged);
  EXPECT_GT(b.achieved_tolerance, 0.0);
  EXPECT_EQ(b.degree, 3);
}

TEST(BallSpectrumTest, Examples) {
  EXPECT_THAT(MakeBallSpectrum(2, 1.0, 5).eigenvalues,
              ElementsAre(0.0, 1.0, 1.0, 2.0, 2.0));
  EXPECT_THAT(MakeBallSpectrum(3, 1.0, 4).eigenvalues,
              ElementsAre(0.0, 1.0, 1.0, 1.0));
  EXPECT_THAT(MakeBallSpectrum(2, 2.0, 3).eigenvalues, ElementsAre(0.0, 0.5, 0.5));
}

TEST(BallSpectrumTest, Multiplicities) {
  EXPECT_EQ(HarmonicMultiplicity(2, 0), 1);
  EXPECT_EQ(HarmonicMultiplicity(2, 5), 2);
  EXPECT_EQ(HarmonicMultiplicity(3, 2), 5);
  EXPECT_EQ(HarmonicMultiplicity(4, 2), 9);
}

TEST(StekloffChainTest, DiscIsEqualityThroughout) {
  const StekloffChainReport r = StekloffChainCheck(Disc());
  EXPECT_TRUE(r.holds);
  ASSERT_EQ(r.links.size(), 3u);
  for (const ChainLink& link : r.links) EXPECT_TRUE(link.equality) << link.name;
}

TEST(StekloffChainTest, Square) {
  const StekloffChainReport r = StekloffChainCheck(Square());
  EXPECT_TRUE(r.holds);
  EXPECT_NEAR(r.links[1].lhs, 9.0 / 16.0, 1e-14);
  EXPECT_NEAR(r.links[1].rhs, kPi / 4, 1e-14);
  EXPECT_NEAR(r.links[2].lhs, 4.0 / std::sqrt(kPi), 1e-14);
  EXPECT_GE(r.links[2].rhs, r.links[2].lhs);
}

TEST(StekloffChainTest, EllipseChainIsStrict) {
  const StekloffChainReport r = StekloffChainCheck(EccentricEllipse());
  EXPECT_TRUE(r.holds);
  const double spectral = r.converged->bounds[0] * r.converged->bounds[1];
  EXPECT_LT(spectral, r.coordinate.product);
  EXPECT_LT(r.coordinate.product, 1.0);
  for (const ChainLink& link : r.links) EXPECT_FALSE(link.equality);
}

TEST(StekloffChainTest, ThreeDimensionalUsesBoundChainOnly) {
  const StekloffChainReport r = StekloffChainCheck(KuhnCube(3, -1.0, 1.0));
  EXPECT_FALSE(r.converged.has_value());
  ASSERT_EQ(r.links.size(), 1u);
  EXPECT_TRUE(r.holds);
  // 0.6^3 <= (4 pi / 3) / 8.
  EXPECT_NEAR(r.links[0].lhs, 0.216, 1e-13);
}

TEST(StekloffChainTest, RequiresConvexity) {
  const Polygon2 dart({{0, 0}, {2, 1}, {0, 2}, {1, 1}});
  EXPECT_EQ(CodeOf([&] { StekloffChainCheck(dart); }), ErrorCode::kHypothesisViolation);
}

}  // namespace
}  // namespace isoinertia
