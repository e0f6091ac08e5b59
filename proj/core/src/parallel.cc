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

#include "isoinertia/parallel.h"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "isoinertia/error.h"

namespace isoinertia {
namespace {

Vec2 OutwardNormal(const Vec2& p, const Vec2& q) {
  const Vec2 e = q - p;
  return Vec2(e.y(), -e.x()) / e.norm();
}

// Moves second moments taken about `center` to the origin.
void AddShifted(RawMoments& raw, const Vec2& center, double mass,
                const Vec2& first_about_center,
                const Eigen::Matrix2d& second_about_center, bool boundary) {
  const Eigen::Matrix2d shifted =
      mass * center * center.transpose() +
      center * first_about_center.transpose() +
      first_about_center * center.transpose() + second_about_center;
  const Vec2 first = mass * center + first_about_center;
  if (boundary) {
    raw.surface += mass;
    raw.boundary_first += VecX(first);
    raw.boundary_second += MatX(shifted);
  } else {
    raw.volume += mass;
    raw.first += VecX(first);
    raw.second += MatX(shifted);
  }
}

void AddSector(RawMoments& raw, const OffsetSector& s, double h) {
  const double a0 = s.start_angle;
  const double a1 = s.start_angle + s.sweep;
  const double theta = s.sweep;
  const double ds2 = std::sin(2.0 * a1) - std::sin(2.0 * a0);
  const double dsin = std::sin(a1) - std::sin(a0);
  const double dcos = std::cos(a1) - std::cos(a0);
  const double dsq = std::sin(a1) * std::sin(a1) - std::sin(a0) * std::sin(a0);

  const double h2 = h * h, h3 = h2 * h, h4 = h3 * h;
  Eigen::Matrix2d second;
  second(0, 0) = h4 / 4.0 * (theta / 2.0 + ds2 / 4.0);
  second(1, 1) = h4 / 4.0 * (theta / 2.0 - ds2 / 4.0);
  second(0, 1) = second(1, 0) = h4 / 4.0 * dsq / 2.0;
  AddShifted(raw, s.center, 0.5 * h2 * theta, Vec2(h3 / 3.0 * dsin, -h3 / 3.0 * dcos),
             second, /*boundary=*/false);

  Eigen::Matrix2d arc;
  arc(0, 0) = h3 * (theta / 2.0 + ds2 / 4.0);
  arc(1, 1) = h3 * (theta / 2.0 - ds2 / 4.0);
  arc(0, 1) = arc(1, 0) = h3 * dsq / 2.0;
  AddShifted(raw, s.center, h * theta, Vec2(h2 * dsin, -h2 * dcos), arc,
             /*boundary=*/true);
}

void AddSegment(RawMoments& raw, const Vec2& p, const Vec2& q) {
  const double length = (q - p).norm();
  raw.surface += length;
  raw.boundary_first += VecX(0.5 * length * (p + q));
  raw.boundary_second +=
      MatX(length / 6.0 *
           (2.0 * p * p.transpose() + p * q.transpose() + q * p.transpose() +
            2.0 * q * q.transpose()));
}

void RequireConvex(const Polygon2& base) {
  if (!base.IsConvex()) {
    throw Error(ErrorCode::kHypothesisViolation,
                "parallel bodies need a convex base polygon");
  }
}

double Binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

OffsetBody::OffsetBody(Polygon2 base, double h) : base_(std::move(base)), h_(h) {
  if (!(h >= 0.0) || !std::isfinite(h)) {
    throw Error(ErrorCode::kInvalidArgument, "offset radius must be >= 0");
  }
  RequireConvex(base_);
  const auto& v = base_.vertices();
  const int n = base_.size();
  for (int i = 0; i < n; ++i) {
    const Vec2 incoming = OutwardNormal(v[(i + n - 1) % n], v[i]);
    const Vec2 outgoing = OutwardNormal(v[i], v[(i + 1) % n]);
    OffsetSector sector;
    sector.center = v[i];
    sector.start_angle = std::atan2(incoming.y(), incoming.x());
    sector.sweep = std::atan2(incoming.x() * outgoing.y() -
                                  incoming.y() * outgoing.x(),
                              incoming.dot(outgoing));
    sector.sweep = std::max(sector.sweep, 0.0);
    sectors_.push_back(sector);
  }
}

double OffsetBody::TotalTurning() const {
  double total = 0.0;
  for (const OffsetSector& s : sectors_) total += s.sweep;
  return total;
}

MomentSummary OffsetMoments(const OffsetBody& body) {
  const Polygon2& base = body.base();
  const double h = body.h();
  RawMoments raw = PolygonRawMoments(base);
  // The base boundary is replaced by the offset edges and arcs.
  raw.surface = 0.0;
  raw.boundary_first.setZero();
  raw.boundary_second.setZero();

  const auto& v = base.vertices();
  const int n = base.size();
  for (int i = 0; i < n; ++i) {
    const Vec2& p = v[i];
    const Vec2& q = v[(i + 1) % n];
    const Vec2 shift = h * OutwardNormal(p, q);
    if (h > 0.0) {
      // Only the area of the edge rectangle counts; its sides are interior.
      const RawMoments rect = PolygonRawMoments(Polygon2({p, p + shift, q + shift, q}));
      raw.volume += rect.volume;
      raw.first += rect.first;
      raw.second += rect.second;
    }
    AddSegment(raw, p + shift, q + shift);
  }
  if (h > 0.0) {
    for (const OffsetSector& s : body.sectors()) AddSector(raw, s, h);
  }
  return Summarize(raw);
}

MomentSummary OffsetMoments(const Polygon2& base, double h) {
  return OffsetMoments(OffsetBody(base, h));
}

std::vector<double> BallParallelMomentPolynomial(int dimension,
                                                 double radius) {
  const int degree = dimension + 2;
  const double scale = UnitBallVolume(dimension) / degree;
  std::vector<double> coefficients(degree + 1);
  for (int j = 0; j <= degree; ++j) {
    coefficients[j] =
        scale * Binomial(degree, j) * std::pow(radius, degree - j);
  }
  return coefficients;
}

std::vector<double> DefaultExpansionGrid() {
  constexpr int kPoints = 12;
  std::vector<double> grid(kPoints);
  for (int i = 0; i < kPoints; ++i) {
    grid[i] = 0.5 - 0.5 * std::cos((2.0 * i + 1.0) * kPi / (2.0 * kPoints));
  }
  return grid;
}

std::vector<double> UniformGrid(int points) {
  if (points < 2) {
    throw Error(ErrorCode::kInvalidArgument, "grid needs two points");
  }
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) grid[i] = static_cast<double>(i) / (points - 1);
  return grid;
}

ExpansionFit FitExpansion(const Polygon2& base, int axis,
                          const std::vector<double>& h_grid) {
  RequireConvex(base);
  constexpr int kDimension = 2;
  const int degree = kDimension + 2;
  if (axis < 0 || axis >= kDimension) {
    throw Error(ErrorCode::kInvalidArgument, "axis out of range");
  }
  std::vector<double> sorted = h_grid;
  std::sort(sorted.begin(), sorted.end());
  const auto distinct =
      std::unique(sorted.begin(), sorted.end()) - sorted.begin();
  if (distinct < kDimension + 4) {
    throw Error(ErrorCode::kInvalidArgument,
                "fit needs at least N + 4 distinct grid points");
  }
  if (sorted.front() < 0.0 || sorted[distinct - 1] > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "grid must lie in [0, 1]");
  }

  ExpansionFit fit;
  fit.axis = axis;
  fit.h_grid = h_grid;
  const int m = static_cast<int>(h_grid.size());
  MatX design(m, degree + 1);
  VecX rhs(m);
  for (int i = 0; i < m; ++i) {
    const double s = OffsetMoments(base, h_grid[i]).J(axis);
    fit.samples.push_back(s);
    rhs(i) = s;
    double power = 1.0;
    for (int j = 0; j <= degree; ++j) {
      design(i, j) = power;
      power *= h_grid[i];
    }
  }
  const VecX column_scale = design.colwise().norm().transpose();
  const MatX scaled = design * column_scale.cwiseInverse().asDiagonal();
  const MatX normal = scaled.transpose() * scaled;
  const VecX eigenvalues =
      Eigen::SelfAdjointEigenSolver<MatX>(normal, Eigen::EigenvaluesOnly)
          .eigenvalues();
  fit.condition = eigenvalues.maxCoeff() / std::max(eigenvalues.minCoeff(), 0.0);
  if (!(fit.condition < 1e12)) {
    throw Error(ErrorCode::kIllConditioned,
                "h grid too clustered for a stable fit");
  }
  const VecX scaled_coefficients = normal.ldlt().solve(scaled.transpose() * rhs);
  const VecX coefficients = scaled_coefficients.cwiseQuotient(column_scale);
  fit.coefficients.assign(coefficients.data(),
                          coefficients.data() + coefficients.size());
  const VecX fitted = design * coefficients;
  fit.residual = (fitted - rhs).cwiseAbs().maxCoeff() / rhs.cwiseAbs().maxCoeff();
  return fit;
}

ConcavityReport ConcavityScan(const Polygon2& base,
                              ParallelFunctional functional, int axis,
                              double exponent,
                              const std::vector<double>& h_grid) {
  RequireConvex(base);
  constexpr int kDimension = 2;
  if (h_grid.size() < 3) {
    throw Error(ErrorCode::kInvalidArgument, "scan needs three grid points");
  }
  for (std::size_t i = 0; i < h_grid.size(); ++i) {
    if (h_grid[i] < 0.0 || (i > 0 && !(h_grid[i] > h_grid[i - 1]))) {
      throw Error(ErrorCode::kInvalidArgument,
                  "grid must be increasing and nonnegative");
    }
  }
  if (functional == ParallelFunctional::kAxisMoment &&
      (axis < 0 || axis >= kDimension)) {
    throw Error(ErrorCode::kInvalidArgument, "axis out of range");
  }

  // Axis moments are taken about the boundary centroid of the base.
  Polygon2 placed = base;
  if (functional == ParallelFunctional::kAxisMoment) {
    const Vec2 centroid = PolygonMoments(base).boundary_centroid.head<2>();
    std::vector<Vec2> v = base.vertices();
    for (Vec2& x : v) x -= centroid;
    placed = Polygon2(std::move(v));
  }

  ConcavityReport report;
  report.functional = functional;
  report.axis = axis;
  report.exponent = exponent;
  report.h_grid = h_grid;
  for (double h : h_grid) {
    const MomentSummary m = OffsetMoments(placed, h);
    const double value = functional == ParallelFunctional::kAxisMoment
                             ? m.J(axis)
                             : m.volume;
    report.g.push_back(std::pow(value, exponent));
  }
  const auto& g = report.g;
  const auto& h = h_grid;
  report.max_second_difference = -1e300;
  for (std::size_t j = 1; j + 1 < h.size(); ++j) {
    const double span = h[j + 1] - h[j - 1];
    const double w_minus = (h[j + 1] - h[j]) / span;
    const double w_plus = (h[j] - h[j - 1]) / span;
    const double d = 2.0 * (w_minus * g[j - 1] + w_plus * g[j + 1] - g[j]);
    report.second_differences.push_back(d);
    report.max_second_difference = std::max(report.max_second_difference, d);
  }
  report.concave = report.max_second_difference <= kConcavityTolerance;

  if (functional == ParallelFunctional::kAxisMoment) {
    report.min_chord_slope = 1e300;
    for (std::size_t j = 0; j + 1 < h.size(); ++j) {
      report.min_chord_slope =
          std::min(report.min_chord_slope, (g[j + 1] - g[j]) / (h[j + 1] - h[j]));
    }
    report.slope_bound = std::pow(UnitBallVolume(kDimension) / (kDimension + 2),
                                  1.0 / (kDimension + 2));
    report.slope_bound_holds =
        report.min_chord_slope >= report.slope_bound - kConcavityTolerance;
  }
  return report;
}

}  // namespace isoinertia
