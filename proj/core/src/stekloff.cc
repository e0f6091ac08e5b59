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

#include "isoinertia/stekloff.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "isoinertia/error.h"
#include "isoinertia/placement.h"

namespace isoinertia {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kMaxBCondition = 1e13;

// Value and gradient of a trial function at the scaled point (x, y).
void EvaluateTrial(const TrialFunction& f, const Vec2& p, double& value,
                   Vec2& gradient) {
  switch (f.kind) {
    case TrialFunction::Kind::kHarmonicReal:
    case TrialFunction::Kind::kHarmonicImag: {
      const std::complex<double> z(p.x(), p.y());
      const std::complex<double> zm = std::pow(z, f.degree);
      const std::complex<double> dz =
          static_cast<double>(f.degree) * std::pow(z, f.degree - 1);
      if (f.kind == TrialFunction::Kind::kHarmonicReal) {
        value = zm.real();
        gradient = Vec2(dz.real(), -dz.imag());
      } else {
        value = zm.imag();
        gradient = Vec2(dz.imag(), dz.real());
      }
      return;
    }
    case TrialFunction::Kind::kMonomial: {
      const double x = f.x_power ? p.x() : 1.0;
      const double y = f.y_power ? p.y() : 1.0;
      value = x * y;
      gradient = Vec2(f.x_power ? y : 0.0, f.y_power ? x : 0.0);
      return;
    }
  }
}

BoundaryQuadrature PolygonQuadrature(const Polygon2& polygon, int min_nodes) {
  const auto& v = polygon.vertices();
  const int edges = polygon.size();
  const int per_edge = std::max(kPolygonEdgeGaussPoints,
                                (min_nodes + edges - 1) / edges);
  const QuadratureRule rule = GaussLegendre(per_edge);
  BoundaryQuadrature q;
  for (int i = 0; i < edges; ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % edges];
    const Vec2 e = b - a;
    const double length = e.norm();
    const Vec2 normal(e.y() / length, -e.x() / length);
    for (int j = 0; j < per_edge; ++j) {
      q.points.push_back(a + 0.5 * (1.0 + rule.nodes[j]) * e);
      q.normals.push_back(normal);
      q.weights.push_back(0.5 * length * rule.weights[j]);
    }
  }
  return q;
}

BoundaryQuadrature CurveQuadrature(const FourierBoundary& fb, int min_nodes) {
  const int n = std::max({256, min_nodes, 8 * fb.order()});
  std::vector<Vec2> points, tangents;
  SampleBoundary(fb, n, points, tangents);
  const double orientation = CoefficientArea(fb) >= 0.0 ? 1.0 : -1.0;
  BoundaryQuadrature q;
  q.points = std::move(points);
  for (const Vec2& t : tangents) {
    const double speed = t.norm();
    q.normals.push_back(orientation * Vec2(t.y(), -t.x()) / speed);
    q.weights.push_back(speed * 2.0 * kPi / n);
  }
  return q;
}

int PlanarOrder(const Shape& shape) {
  if (const auto* fb = std::get_if<FourierBoundary>(&shape)) return fb->order();
  return 1;
}

double Binomial(int n, int k) {
  if (k < 0 || n < k) return 0.0;
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

bool TrialFunction::IsHarmonic() const {
  if (kind != Kind::kMonomial) return true;
  return x_power <= 1 && y_power <= 1;
}

std::string TrialFunction::Name() const {
  switch (kind) {
    case Kind::kHarmonicReal:
      return "Re z^" + std::to_string(degree);
    case Kind::kHarmonicImag:
      return "Im z^" + std::to_string(degree);
    case Kind::kMonomial:
      return "x^" + std::to_string(x_power) + " y^" + std::to_string(y_power);
  }
  return "";
}

std::vector<TrialFunction> CoordinateTrialSpace() {
  return {TrialFunction::Monomial(1, 0), TrialFunction::Monomial(0, 1)};
}

std::vector<TrialFunction> HarmonicTrialSpace(int degree) {
  std::vector<TrialFunction> space;
  for (int m = 1; m <= degree; ++m) {
    space.push_back(TrialFunction::Re(m));
    space.push_back(TrialFunction::Im(m));
  }
  return space;
}

BoundaryQuadrature BuildBoundaryQuadrature(const Shape& shape, int min_nodes) {
  return std::visit(
      Overloaded{
          [&](const Polygon2& p) { return PolygonQuadrature(p, min_nodes); },
          [&](const FourierBoundary& f) {
            if (!CheckSimple(f).simple) {
              throw Error(ErrorCode::kInvalidShape,
                          "Fourier boundary is not simple");
            }
            return CurveQuadrature(f, min_nodes);
          },
          [&](const Ellipsoid& e) {
            if (e.dimension() != 2) {
              throw Error(ErrorCode::kUnsupported,
                          "boundary quadrature needs a planar shape");
            }
            return CurveQuadrature(
                FourierBoundary::Ellipse(e.semi_axes()(0), e.semi_axes()(1),
                                         e.center().head<2>()),
                min_nodes);
          },
          [&](const SimplicialBody&) -> BoundaryQuadrature {
            throw Error(ErrorCode::kUnsupported,
                        "boundary quadrature needs a planar shape");
          }},
      shape);
}

RayleighPair MakeRayleighPair(const Shape& shape,
                              const std::vector<TrialFunction>& trial_space,
                              int min_nodes) {
  if (Dimension(shape) != 2) {
    throw Error(ErrorCode::kUnsupported, "Rayleigh pairs are planar only");
  }
  if (trial_space.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty trial space");
  }
  int max_degree = 1;
  for (const TrialFunction& f : trial_space) {
    if (!f.IsHarmonic()) {
      throw Error(ErrorCode::kUnsupported,
                  "trial function " + f.Name() + " is not harmonic");
    }
    max_degree = std::max(max_degree, f.degree);
  }
  // Enough nodes to integrate the polynomial (polygon) or trigonometric
  // (Fourier) integrands exactly.
  const int needed = std::holds_alternative<Polygon2>(shape)
                         ? (max_degree + 1) * std::get<Polygon2>(shape).size()
                         : 4 * PlanarOrder(shape) * (max_degree + 1) + 256;
  const BoundaryQuadrature q =
      BuildBoundaryQuadrature(shape, std::max(min_nodes, needed));
  const int nodes = static_cast<int>(q.points.size());

  double total = 0.0;
  Vec2 centroid = Vec2::Zero();
  for (int j = 0; j < nodes; ++j) {
    total += q.weights[j];
    centroid += q.weights[j] * q.points[j];
  }
  centroid /= total;
  double radius = 0.0;
  for (const Vec2& p : q.points) radius = std::max(radius, (p - centroid).norm());

  const int n = static_cast<int>(trial_space.size());
  MatX values(nodes, n);
  MatX normal_derivatives(nodes, n);
  for (int j = 0; j < nodes; ++j) {
    const Vec2 local = (q.points[j] - centroid) / radius;
    for (int i = 0; i < n; ++i) {
      double value = 0.0;
      Vec2 gradient;
      EvaluateTrial(trial_space[i], local, value, gradient);
      values(j, i) = value;
      normal_derivatives(j, i) = gradient.dot(q.normals[j]) / radius;
    }
  }
  const VecX w = Eigen::Map<const VecX>(q.weights.data(), nodes);
  for (int i = 0; i < n; ++i) {
    const double norm_before = std::sqrt(w.dot(values.col(i).cwiseAbs2()));
    const double mean = w.dot(values.col(i)) / total;
    values.col(i).array() -= mean;
    const double norm_after = std::sqrt(w.dot(values.col(i).cwiseAbs2()));
    if (!(norm_after > 1e-10 * std::max(norm_before, 1e-300))) {
      throw Error(ErrorCode::kDegenerate,
                  "trial function " + trial_space[i].Name() +
                      " vanishes after removing its boundary mean");
    }
  }

  RayleighPair pair;
  pair.n = n;
  const MatX weighted = w.asDiagonal() * values;
  pair.B = values.transpose() * weighted;
  const MatX a = weighted.transpose() * normal_derivatives;
  pair.A = 0.5 * (a + a.transpose());
  pair.B = 0.5 * (pair.B + pair.B.transpose());
  const VecX scale = pair.B.diagonal().cwiseSqrt().cwiseInverse();
  pair.A = scale.asDiagonal() * pair.A * scale.asDiagonal();
  pair.B = scale.asDiagonal() * pair.B * scale.asDiagonal();

  const VecX b_eigen =
      Eigen::SelfAdjointEigenSolver<MatX>(pair.B, Eigen::EigenvaluesOnly)
          .eigenvalues();
  pair.b_condition = b_eigen.maxCoeff() / b_eigen.minCoeff();
  if (!(b_eigen.minCoeff() > 0.0) || !(pair.b_condition < kMaxBCondition)) {
    throw Error(ErrorCode::kIllConditioned,
                "B is numerically indefinite (condition " +
                    FormatNumber(pair.b_condition) + ")");
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<MatX> solver(pair.A, pair.B);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kIllConditioned, "generalized eigensolver failed");
  }
  // Eigen returns the roots in ascending order.
  const VecX roots = solver.eigenvalues();
  pair.roots.assign(roots.data(), roots.data() + roots.size());
  const MatX coefficients = scale.asDiagonal() * solver.eigenvectors();
  const MatX u = values * coefficients;
  const MatX du = normal_derivatives * coefficients;
  for (int i = 0; i < n; ++i) {
    const VecX r = du.col(i) - roots(i) * u.col(i);
    const double norm_u = std::sqrt(w.dot(u.col(i).cwiseAbs2()));
    pair.residuals.push_back(std::sqrt(w.dot(r.cwiseAbs2())) /
                             (std::abs(roots(i)) * norm_u));
  }
  return pair;
}

StekloffBounds CoordinateBounds(const Shape& shape) {
  const PlacedShape placed =
      CanonicalPlacement(shape, Centering::kBoundary, /*rotate=*/true);
  const MomentSummary m = Moments(placed.shape);
  if (!(m.volume > 0.0) || !(m.I.minCoeff() > 0.0)) {
    throw Error(ErrorCode::kDegenerate, "shape has no interior or boundary");
  }
  StekloffBounds out;
  out.method = "coordinate";
  out.degree = 1;
  out.product = 1.0;
  for (int k = 0; k < m.dimension; ++k) {
    out.bounds.push_back(m.volume / m.I(k));
    out.product *= m.volume / m.I(k);
  }
  std::sort(out.bounds.begin(), out.bounds.end());
  out.history.push_back(out.bounds);
  return out;
}

StekloffBounds ConvergeSpectrum(const Shape& shape, int max_degree,
                                double tol) {
  if (max_degree < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max degree must be >= 1");
  }
  constexpr int kTracked = 3;  // N + 1 in the plane
  StekloffBounds out;
  out.method = "harmonic";
  out.converged = false;
  out.achieved_tolerance = std::numeric_limits<double>::infinity();
  for (int m = 1; m <= max_degree; ++m) {
    RayleighPair pair;
    try {
      pair = MakeRayleighPair(shape, HarmonicTrialSpace(m));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kIllConditioned || m == 1) throw;
      break;
    }
    const std::vector<double>& roots = pair.roots;
    if (!out.history.empty() &&
        static_cast<int>(out.history.back().size()) >= kTracked) {
      double change = 0.0;
      for (int k = 0; k < kTracked; ++k) {
        change = std::max(change, std::abs(roots[k] - out.history.back()[k]) /
                                      std::abs(roots[k]));
      }
      out.achieved_tolerance = change;
    }
    out.history.push_back(roots);
    out.bounds = roots;
    out.degree = m;
    double residual = 0.0;
    for (int k = 0; k < std::min<int>(kTracked, pair.n); ++k) {
      residual = std::max(residual, pair.residuals[k]);
    }
    if (out.achieved_tolerance < tol && residual < std::sqrt(tol)) {
      out.converged = true;
      break;
    }
  }
  out.product = out.bounds[0] * out.bounds[1];
  return out;
}

long HarmonicMultiplicity(int dimension, int degree) {
  const int n = dimension;
  return std::lround(Binomial(degree + n - 1, n - 1) -
                     Binomial(degree + n - 3, n - 1));
}

BallSpectrum MakeBallSpectrum(int dimension, double radius, int count) {
  if (dimension < 2 || !(radius > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "need N >= 2 and R > 0");
  }
  BallSpectrum spectrum{dimension, radius, {}};
  for (int degree = 0; static_cast<int>(spectrum.eigenvalues.size()) < count;
       ++degree) {
    const long multiplicity = HarmonicMultiplicity(dimension, degree);
    for (long i = 0; i < multiplicity &&
                     static_cast<int>(spectrum.eigenvalues.size()) < count;
         ++i) {
      spectrum.eigenvalues.push_back(degree / radius);
    }
  }
  return spectrum;
}

ChainLink MakeChainLink(std::string name, double lhs, double rhs) {
  ChainLink link;
  link.name = std::move(name);
  link.lhs = lhs;
  link.rhs = rhs;
  link.margin = rhs - lhs;
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  link.relative_margin = scale > 0.0 ? link.margin / scale : 0.0;
  link.holds = link.relative_margin >= -kChainTolerance;
  link.equality = std::abs(link.relative_margin) < kChainTolerance;
  return link;
}

StekloffChainReport StekloffChainCheck(const Shape& shape, int max_degree, double tol) {
  if (!IsConvex(shape)) {
    throw Error(ErrorCode::kHypothesisViolation,
                "the Steklov product bound needs a convex body");
  }
  StekloffChainReport report;
  report.dimension = Dimension(shape);
  const int n = report.dimension;
  report.coordinate = CoordinateBounds(shape);
  const double volume = Moments(shape, MomentScope::kVolumeOnly).volume;
  const double omega = UnitBallVolume(n);
  const double ball_radius = std::pow(volume / omega, 1.0 / n);

  if (n == 2) {
    report.converged = ConvergeSpectrum(shape, max_degree, tol);
    report.links.push_back(MakeChainLink("spectral_product <= moment_bound",
                                         report.converged->product,
                                         report.coordinate.product));
  }
  report.links.push_back(MakeChainLink("moment_bound <= ball_product",
                                       report.coordinate.product,
                                       omega / volume));
  if (n == 2) {
    const auto& p = report.converged->bounds;
    report.links.push_back(MakeChainLink("ball_reciprocal_sum <= reciprocal_sum",
                                         n * ball_radius,
                                         1.0 / p[0] + 1.0 / p[1]));
  }
  report.holds = std::all_of(report.links.begin(), report.links.end(),
                             [](const ChainLink& l) { return l.holds; });
  return report;
}

}  // namespace isoinertia
