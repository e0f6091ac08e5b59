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
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "isoinertia/error.h"
#include "isoinertia/inequalities.h"
#include "isoinertia/random_shapes.h"
#include "oracles.h"

namespace isoinertia {
namespace {

Polygon2 Square() { return Polygon2({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}); }

VecX V(std::initializer_list<double> values) {
  VecX v(values.size());
  int i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

// Three unit cubes forming an L in R^3.
SimplicialBody LBlock() {
  const SimplicialBody cube = KuhnCube(3);
  std::vector<VecX> vertices;
  std::map<std::vector<double>, int> index;
  std::vector<std::vector<int>> simplices;
  for (const VecX& offset : {V({0, 0, 0}), V({1, 0, 0}), V({0, 1, 0})}) {
    for (const auto& s : cube.simplices()) {
      std::vector<int> simplex;
      for (int i : s) {
        const VecX x = cube.vertices()[i] + offset;
        const std::vector<double> key(x.data(), x.data() + 3);
        auto [it, inserted] = index.emplace(key, static_cast<int>(vertices.size()));
        if (inserted) vertices.push_back(x);
        simplex.push_back(it->second);
      }
      simplices.push_back(simplex);
    }
  }
  return SimplicialBody::FromSimplices(3, vertices, simplices);
}

TEST(InequalityNamesTest, RoundTrip) {
  for (InequalityId id : AllInequalityIds()) {
    EXPECT_EQ(ParseInequalityId(InequalityName(id)), id);
  }
  EXPECT_FALSE(ParseInequalityId("NOPE").has_value());
}

TEST(ReportTest, VerdictAndEqualityFlags) {
  const InequalityReport equal =
      MakeInequalityReport(InequalityId::kDet, 1.0, 1.0 + 1e-13, Centering::kVolume);
  EXPECT_TRUE(equal.holds);
  EXPECT_TRUE(equal.equality);
  const InequalityReport fails =
      MakeInequalityReport(InequalityId::kDet, 1.0, 1.0 + 1e-11, Centering::kVolume);
  EXPECT_FALSE(fails.holds);
  EXPECT_FALSE(fails.equality);
  EXPECT_NEAR(fails.margin, -1e-11, 1e-16);
}

TEST(EvaluateTest, SquarePolarVolume) {
  const InequalityReport r = EvaluateInequality(InequalityId::kPolarVolume, Square());
  EXPECT_NEAR(r.lhs, 8.0 / 3.0, 1e-15);
  EXPECT_NEAR(r.rhs, 8.0 / kPi, 1e-15);
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(r.equality);
}

TEST(EvaluateTest, SquarePerAxis) {
  const InequalityReport r = EvaluateInequality(InequalityId::kPerAxis, Square());
  EXPECT_NEAR(r.lhs, std::pow(16.0 / 3.0, 4), 1e-11);
  EXPECT_NEAR(r.rhs, 64 * kPi * std::pow(4.0 / 3.0, 3), 1e-11);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.centering, Centering::kBoundary);
}

TEST(EvaluateTest, EllipseSaturatesJProduct) {
  const Ellipsoid ellipse(V({0.3, -2}), V({2, 0.5}));
  const InequalityReport r = EvaluateInequality(InequalityId::kJProduct, ellipse);
  EXPECT_NEAR(r.lhs, kPi * kPi / 16, 1e-14);
  EXPECT_NEAR(r.rhs, kPi * kPi / 16, 1e-14);
  EXPECT_TRUE(r.equality);
  EXPECT_TRUE(EvaluateInequality(InequalityId::kDet, ellipse).equality);
}

TEST(EvaluateTest, BallsGiveEqualityEverywhere) {
  for (int n = 2; n <= 4; ++n) {
    const Ellipsoid ball = Ellipsoid::Ball(n, 1.3, VecX::Constant(n, 0.7));
    for (InequalityId id : AllInequalityIds()) {
      const InequalityReport r = EvaluateInequality(id, ball);
      EXPECT_TRUE(r.equality) << InequalityName(id) << " N=" << n;
    }
  }
}

TEST(EvaluateTest, DetMatchesJProductForPlacedShapes) {
  Rng rng(1);
  for (int i = 0; i < 10; ++i) {
    const Shape shape = i % 2 ? Shape(RandomConvexPolygon(rng))
                              : Shape(RandomPerturbedBox(rng, 3, 0.1));
    const auto det = EvaluateInequality(InequalityId::kDet, shape);
    const auto product = EvaluateInequality(InequalityId::kJProduct, shape);
    EXPECT_NEAR(det.lhs, product.lhs, 1e-12 * product.lhs);
  }
}

TEST(EvaluateTest, RelativeMarginIsScaleInvariant) {
  Rng rng(2);
  const Polygon2 p = RandomConvexPolygon(rng);
  for (InequalityId id : AllInequalityIds()) {
    const double base = EvaluateInequality(id, p).relative_margin;
    for (double s : {0.1, 3.0, 40.0}) {
      EXPECT_NEAR(EvaluateInequality(id, Scaled(p, s)).relative_margin, base,
                  1e-10)
          << InequalityName(id);
    }
  }
}

TEST(EvaluateTest, TranslationDoesNotChangeVerdicts) {
  Rng rng(3);
  const Polygon2 p = RandomConvexPolygon(rng);
  for (InequalityId id : AllInequalityIds()) {
    const double base = EvaluateInequality(id, p).relative_margin;
    EXPECT_NEAR(EvaluateInequality(id, Translated(p, V({4, -9}))).relative_margin,
                base, 1e-10)
        << InequalityName(id);
  }
}

TEST(EvaluateTest, NonconvexBodyInThreeDimensionsViolatesHypothesis) {
  const SimplicialBody l_block = LBlock();
  EXPECT_FALSE(l_block.IsConvex());
  for (InequalityId id : {InequalityId::kIProduct, InequalityId::kPerAxis}) {
    try {
      EvaluateInequality(id, l_block);
      ADD_FAILURE() << InequalityName(id);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kHypothesisViolation);
    }
  }
  EXPECT_TRUE(EvaluateInequality(InequalityId::kPolarVolume, l_block).holds);
}

TEST(EvaluateTest, NonconvexPlanarShapesAreAccepted) {
  const Polygon2 dart({{0, 0}, {2, 1}, {0, 2}, {1, 1}});
  EXPECT_TRUE(EvaluateInequality(InequalityId::kIProduct, dart).holds);
  Rng rng(4);
  int nonconvex = 0;
  for (int i = 0; i < 20; ++i) {
    const FourierBoundary fb = RandomStarFourier(rng, 8, 0.3);
    nonconvex += !IsConvexCurve(fb);
    EXPECT_TRUE(EvaluateInequality(InequalityId::kIProduct, fb).holds);
  }
  EXPECT_GT(nonconvex, 0);
}

TEST(BatchVerifyTest, Empty) {
  const auto ids = AllInequalityIds();
  const BatchResult r = BatchVerify({}, ids);
  EXPECT_TRUE(r.entries.empty());
  EXPECT_EQ(r.violations, 0);
}

TEST(BatchVerifyTest, DiscIsEqualityForAllIds) {
  const std::vector<Shape> shapes = {Ellipsoid::Ball(2, 1.0)};
  const auto ids = AllInequalityIds();
  const BatchResult r = BatchVerify(shapes, ids);
  ASSERT_EQ(r.entries.size(), ids.size());
  EXPECT_EQ(r.equalities, 7);
  EXPECT_EQ(r.holds, 7);
}

TEST(BatchVerifyTest, RandomConvexPolygonsHold) {
  Rng rng(5);
  std::vector<Shape> shapes;
  for (int i = 0; i < 50; ++i) shapes.push_back(RandomConvexPolygon(rng));
  const auto ids = AllInequalityIds();
  const BatchResult r = BatchVerify(shapes, ids);
  EXPECT_EQ(r.violations, 0);
  EXPECT_EQ(r.errors, 0);
  EXPECT_EQ(r.holds, 50 * 7);
  // Shape-major ordering.
  EXPECT_EQ(r.entries[7].shape_index, 1u);
  EXPECT_EQ(r.entries[7].id, InequalityId::kPolarVolume);
}

TEST(BatchVerifyTest, ItemErrorsDoNotAbort) {
  const std::vector<Shape> shapes = {LBlock(), Square()};
  const std::vector<InequalityId> ids = {InequalityId::kIProduct};
  const BatchResult r = BatchVerify(shapes, ids);
  ASSERT_EQ(r.entries.size(), 2u);
  EXPECT_FALSE(r.entries[0].report.has_value());
  EXPECT_FALSE(r.entries[0].error.empty());
  EXPECT_TRUE(r.entries[1].report->holds);
  EXPECT_EQ(r.errors, 1);
}

TEST(GapScanTest, EllipsesUnderJProduct) {
  const std::vector<double> ecc = {0.0, 0.2, 0.5, 0.9};
  const auto gaps = EqualityGapScan(
      [](double e) {
        const double ratio = std::sqrt(1 - e * e);
        return Shape(Ellipsoid(V({0, 0}), V({1 / std::sqrt(ratio), std::sqrt(ratio)})));
      },
      ecc, InequalityId::kJProduct);
  for (const GapSample& g : gaps) EXPECT_NEAR(g.relative_margin, 0.0, 1e-12);
}

TEST(GapScanTest, EllipsesUnderIProduct) {
  const std::vector<double> ecc = {0.0, 0.1, 0.3, 0.6, 0.9};
  const auto gaps = EqualityGapScan(
      [](double e) {
        const double ratio = std::sqrt(1 - e * e);
        return Shape(Ellipsoid(V({0, 0}), V({1 / std::sqrt(ratio), std::sqrt(ratio)})));
      },
      ecc, InequalityId::kIProduct);
  EXPECT_LT(std::abs(gaps[0].relative_margin), 1e-9);
  for (std::size_t i = 1; i < gaps.size(); ++i) {
    EXPECT_GT(gaps[i].relative_margin, 0.0);
    EXPECT_GE(gaps[i].relative_margin, gaps[i - 1].relative_margin);
  }
}

TEST(GapScanTest, RegularPolygonsApproachDisc) {
  const std::vector<double> sides = {3, 6, 12, 48, 384};
  const auto gaps = EqualityGapScan(
      [](double n) { return Shape(RegularPolygon(static_cast<int>(n), 1.0)); },
      sides, InequalityId::kClassicalIso);
  for (std::size_t i = 1; i < gaps.size(); ++i) {
    EXPECT_LT(gaps[i].relative_margin, gaps[i - 1].relative_margin);
  }
  EXPECT_LT(gaps.back().relative_margin, 1e-4);
  // |dP|^2 / (4 pi A) - 1 for the regular n-gon: (n/pi) tan(pi/n) - 1.
  const double n = 384;
  EXPECT_NEAR(gaps.back().relative_margin,
              1.0 - 1.0 / ((n / kPi) * std::tan(kPi / n)), 1e-12);
}

}  // namespace
}  // namespace isoinertia
