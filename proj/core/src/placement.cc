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

#include "isoinertia/placement.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "isoinertia/error.h"

namespace isoinertia {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Returns, for each row, the column holding its +-1 entry, or an empty
// vector when `r` is not a signed permutation.
std::vector<int> SignedPermutationColumns(const MatX& r) {
  const int n = static_cast<int>(r.rows());
  std::vector<int> columns(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = std::abs(r(i, j));
      if (std::abs(v - 1.0) <= 1e-12) {
        if (columns[i] >= 0) return {};
        columns[i] = j;
      } else if (v > 1e-12) {
        return {};
      }
    }
    if (columns[i] < 0) return {};
  }
  return columns;
}

FourierBoundary EllipseAsFourier(const Ellipsoid& e) {
  return FourierBoundary::Ellipse(e.semi_axes()(0), e.semi_axes()(1),
                                  e.center().head<2>());
}

struct ClusterFit {
  double trace = 0.0;
  MatX rotation;
};

}  // namespace

Placement Placement::Identity(int dimension) {
  return Placement{VecX::Zero(dimension), MatX::Identity(dimension, dimension)};
}

MatX ClosestToIdentityDiagonalizer(const MatX& symmetric,
                                   double tie_tolerance) {
  const int n = static_cast<int>(symmetric.rows());
  Eigen::SelfAdjointEigenSolver<MatX> solver(symmetric);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kIllConditioned, "eigen decomposition failed");
  }
  const VecX& values = solver.eigenvalues();
  const MatX& vectors = solver.eigenvectors();
  const double scale = std::max(values.cwiseAbs().maxCoeff(), 1e-300);

  // Clusters of (numerically) equal eigenvalues; eigenvalues are ascending.
  std::vector<int> cluster_of(n);
  std::vector<std::vector<int>> clusters;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || values(i) - values(i - 1) > tie_tolerance * scale) {
      clusters.emplace_back();
    }
    clusters.back().push_back(i);
    cluster_of[i] = static_cast<int>(clusters.size()) - 1;
  }

  // Enumerate which coordinate rows each cluster occupies.
  std::vector<int> labels(cluster_of);
  std::sort(labels.begin(), labels.end());
  ClusterFit best{-1e300, MatX()};
  do {
    MatX r = MatX::Zero(n, n);
    double trace = 0.0;
    double weakest = 1e300;
    int weakest_cluster = -1;
    std::vector<std::pair<Eigen::MatrixXd, Eigen::MatrixXd>> factors(
        clusters.size());
    for (int c = 0; c < static_cast<int>(clusters.size()); ++c) {
      std::vector<int> rows;
      for (int i = 0; i < n; ++i) {
        if (labels[i] == c) rows.push_back(i);
      }
      const int m = static_cast<int>(rows.size());
      MatX basis(n, m);
      for (int j = 0; j < m; ++j) basis.col(j) = vectors.col(clusters[c][j]);
      // The block R[rows, rows] = Q * basis[rows, :]^T; maximize its trace.
      MatX block(m, m);
      for (int i = 0; i < m; ++i) block.col(i) = basis.row(rows[i]).transpose();
      Eigen::JacobiSVD<MatX> svd(block, Eigen::ComputeFullU | Eigen::ComputeFullV);
      const MatX q = svd.matrixV() * svd.matrixU().transpose();
      const MatX rows_block = q * basis.transpose();
      for (int i = 0; i < m; ++i) r.row(rows[i]) = rows_block.row(i);
      trace += svd.singularValues().sum();
      if (svd.singularValues()(m - 1) < weakest) {
        weakest = svd.singularValues()(m - 1);
        weakest_cluster = c;
      }
      factors[c] = {svd.matrixU(), svd.matrixV()};
    }
    if (r.determinant() < 0.0) {
      // Flip the weakest singular direction of the cheapest cluster.
      const int c = weakest_cluster;
      std::vector<int> rows;
      for (int i = 0; i < n; ++i) {
        if (labels[i] == c) rows.push_back(i);
      }
      const int m = static_cast<int>(rows.size());
      MatX basis(n, m);
      for (int j = 0; j < m; ++j) basis.col(j) = vectors.col(clusters[c][j]);
      MatX d = MatX::Identity(m, m);
      d(m - 1, m - 1) = -1.0;
      const MatX q = factors[c].second * d * factors[c].first.transpose();
      const MatX rows_block = q * basis.transpose();
      for (int i = 0; i < m; ++i) r.row(rows[i]) = rows_block.row(i);
      trace -= 2.0 * weakest;
    }
    if (trace > best.trace + 1e-12) best = {trace, r};
  } while (std::next_permutation(labels.begin(), labels.end()));
  return best.rotation;
}

PlacedShape CanonicalPlacement(const Shape& shape, Centering centering,
                               bool rotate) {
  const MomentScope scope = centering == Centering::kVolume
                                ? MomentScope::kVolumeOnly
                                : MomentScope::kFull;
  const MomentSummary m = Moments(shape, scope);
  const int n = m.dimension;
  Placement placement = Placement::Identity(n);
  VecX centroid;
  MatX central;
  if (centering == Centering::kVolume) {
    centroid = m.volume_centroid;
    central = m.inertia - m.volume * centroid * centroid.transpose();
  } else {
    centroid = m.boundary_centroid;
    central = m.boundary_inertia - m.surface * centroid * centroid.transpose();
  }
  placement.translation = -centroid;
  if (rotate) placement.rotation = ClosestToIdentityDiagonalizer(central);
  return PlacedShape{ApplyPlacement(shape, placement), placement};
}

Shape ApplyPlacement(const Shape& shape, const Placement& placement) {
  const MatX& r = placement.rotation;
  const VecX& t = placement.translation;
  if (r.rows() != Dimension(shape) || t.size() != Dimension(shape)) {
    throw Error(ErrorCode::kInvalidArgument, "placement dimension mismatch");
  }
  return std::visit(
      Overloaded{
          [&](const Polygon2& p) -> Shape {
            std::vector<Vec2> v;
            v.reserve(p.vertices().size());
            for (const Vec2& x : p.vertices()) {
              v.push_back(placement.Apply(VecX(x)).head<2>());
            }
            return Polygon2(std::move(v));
          },
          [&](const SimplicialBody& b) -> Shape {
            std::vector<VecX> v;
            v.reserve(b.vertices().size());
            for (const VecX& x : b.vertices()) v.push_back(placement.Apply(x));
            auto simplices = b.simplices();
            auto facets = b.facets();
            if (r.determinant() < 0.0) {
              for (auto& s : simplices) std::swap(s[0], s[1]);
              for (auto& f : facets) std::swap(f[0], f[1]);
            }
            return SimplicialBody(b.dimension(), std::move(v),
                                  std::move(simplices), std::move(facets));
          },
          [&](const Ellipsoid& e) -> Shape {
            const VecX center = placement.Apply(e.center());
            if (e.IsBall()) return Ellipsoid(center, e.semi_axes());
            const std::vector<int> columns = SignedPermutationColumns(r);
            if (!columns.empty()) {
              VecX axes(e.dimension());
              for (int i = 0; i < e.dimension(); ++i) {
                axes(i) = e.semi_axes()(columns[i]);
              }
              return Ellipsoid(center, axes);
            }
            if (e.dimension() != 2) {
              throw Error(ErrorCode::kUnsupported,
                          "general rotation of an ellipsoid in N >= 3");
            }
            return ApplyPlacement(Shape(EllipseAsFourier(e)), placement);
          },
          [&](const FourierBoundary& f) -> Shape {
            FourierBoundary g = f;
            const Eigen::Matrix2d r2 = r.topLeftCorner<2, 2>();
            const Vec2 offset = r2 * (Vec2(f.a0 / 2.0, f.b0 / 2.0) +
                                      t.head<2>());
            g.a0 = 2.0 * offset.x();
            g.b0 = 2.0 * offset.y();
            for (FourierMode& m : g.modes) {
              const Vec2 cosine = r2 * Vec2(m.a, m.b);
              const Vec2 sine = r2 * Vec2(m.a_prime, m.b_prime);
              m.a = cosine.x();
              m.b = cosine.y();
              m.a_prime = sine.x();
              m.b_prime = sine.y();
            }
            return g;
          }},
      shape);
}

Shape ApplyAffinity(const Shape& shape, const VecX& scales) {
  if (scales.size() != Dimension(shape) || !scales.allFinite() ||
      !(scales.minCoeff() > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "affinity scales must be positive, one per axis");
  }
  return std::visit(
      Overloaded{
          [&](const Polygon2& p) -> Shape {
            std::vector<Vec2> v = p.vertices();
            for (Vec2& x : v) x = x.cwiseProduct(scales.head<2>());
            return Polygon2(std::move(v));
          },
          [&](const SimplicialBody& b) -> Shape {
            std::vector<VecX> v = b.vertices();
            for (VecX& x : v) x = x.cwiseProduct(scales);
            return SimplicialBody(b.dimension(), std::move(v), b.simplices(),
                                  b.facets());
          },
          [&](const Ellipsoid& e) -> Shape {
            return Ellipsoid(e.center().cwiseProduct(scales),
                             e.semi_axes().cwiseProduct(scales));
          },
          [&](const FourierBoundary& f) -> Shape {
            FourierBoundary g = f;
            g.a0 *= scales(0);
            g.b0 *= scales(1);
            for (FourierMode& m : g.modes) {
              m.a *= scales(0);
              m.a_prime *= scales(0);
              m.b *= scales(1);
              m.b_prime *= scales(1);
            }
            return g;
          }},
      shape);
}

JNormalization NormalizeJ(const Shape& shape) {
  const MomentSummary m = Moments(shape, MomentScope::kVolumeOnly);
  const int n = m.dimension;
  if (!(m.J.minCoeff() > 0.0)) {
    throw Error(ErrorCode::kDegenerate, "an axis moment vanishes");
  }
  const double mean_log = m.J.array().log().mean();
  VecX scales(n);
  for (int k = 0; k < n; ++k) {
    scales(k) = std::exp(0.5 * (mean_log - std::log(m.J(k))));
  }
  return JNormalization{scales, ApplyAffinity(shape, scales)};
}

}  // namespace isoinertia
