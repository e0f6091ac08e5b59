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

#include "isoinertia/fourier.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "isoinertia/error.h"

namespace isoinertia {
namespace {

constexpr int kSpeedGrid = 16384;

// Orientation of the triple (p, q, r): positive for a left turn.
double Cross(const Vec2& p, const Vec2& q, const Vec2& r) {
  return (q.x() - p.x()) * (r.y() - p.y()) - (q.y() - p.y()) * (r.x() - p.x());
}

bool SegmentsIntersect(const Vec2& p1, const Vec2& p2, const Vec2& q1,
                       const Vec2& q2) {
  if (std::max(p1.x(), p2.x()) < std::min(q1.x(), q2.x()) ||
      std::max(q1.x(), q2.x()) < std::min(p1.x(), p2.x()) ||
      std::max(p1.y(), p2.y()) < std::min(q1.y(), q2.y()) ||
      std::max(q1.y(), q2.y()) < std::min(p1.y(), p2.y())) {
    return false;
  }
  const double d1 = Cross(q1, q2, p1);
  const double d2 = Cross(q1, q2, p2);
  const double d3 = Cross(p1, p2, q1);
  const double d4 = Cross(p1, p2, q2);
  return ((d1 > 0) != (d2 > 0) || d1 == 0 || d2 == 0) &&
         ((d3 > 0) != (d4 > 0) || d3 == 0 || d4 == 0);
}

int SimplicitySamples(const FourierBoundary& fb) {
  return std::clamp(16 * fb.order(), 256, 2048);
}

// Typical length of the curve, used to make tolerances scale free.
double LengthScale(const FourierBoundary& fb) {
  double sum = 0.0;
  for (const FourierMode& m : fb.modes) {
    sum += m.a * m.a + m.a_prime * m.a_prime + m.b * m.b +
           m.b_prime * m.b_prime;
  }
  return std::sqrt(sum) + 0.5 * std::hypot(fb.a0, fb.b0);
}

// Integrals of the curve with the trapezoidal rule on n nodes; volume
// integrals are signed by the orientation.
struct CurveIntegrals {
  double area = 0.0;
  Vec2 first = Vec2::Zero();
  Eigen::Matrix2d second = Eigen::Matrix2d::Zero();
  double length = 0.0;
  Vec2 boundary_first = Vec2::Zero();
  Eigen::Matrix2d boundary_second = Eigen::Matrix2d::Zero();
};

CurveIntegrals Integrate(const FourierBoundary& fb, int n) {
  std::vector<Vec2> points, tangents;
  SampleBoundary(fb, n, points, tangents);
  CurveIntegrals out;
  const double w = 2.0 * kPi / n;
  double xx = 0, yy = 0, xy = 0;
  for (int j = 0; j < n; ++j) {
    const double x = points[j].x();
    const double y = points[j].y();
    const double dx = tangents[j].x();
    const double dy = tangents[j].y();
    out.area += 0.5 * (x * dy - y * dx);
    out.first.x() += 0.5 * x * x * dy;
    out.first.y() -= 0.5 * y * y * dx;
    xx += x * x * x / 3.0 * dy;
    yy -= y * y * y / 3.0 * dx;
    xy += 0.5 * x * x * y * dy;
    const double speed = std::hypot(dx, dy);
    out.length += speed;
    out.boundary_first += speed * points[j];
    out.boundary_second += speed * points[j] * points[j].transpose();
  }
  out.second << xx, xy, xy, yy;
  out.area *= w;
  out.first *= w;
  out.second *= w;
  out.length *= w;
  out.boundary_first *= w;
  out.boundary_second *= w;
  return out;
}

double RelativeChange(const CurveIntegrals& a, const CurveIntegrals& b,
                      double r) {
  auto rel = [](double x, double y, double ref) {
    return std::abs(x - y) / (std::abs(y) + ref);
  };
  double change = 0.0;
  change = std::max(change, rel(a.area, b.area, r * r));
  change = std::max(change, rel(a.length, b.length, r));
  for (int i = 0; i < 2; ++i) {
    change = std::max(change, rel(a.first(i), b.first(i), r * r * r));
    change = std::max(change,
                      rel(a.boundary_first(i), b.boundary_first(i), r * r));
    for (int j = 0; j < 2; ++j) {
      change = std::max(change,
                        rel(a.second(i, j), b.second(i, j), r * r * r * r));
      change = std::max(change, rel(a.boundary_second(i, j),
                                    b.boundary_second(i, j), r * r * r));
    }
  }
  return change;
}

// Squared speed |x'(s)|^2 at s_j = 2 pi j / n.
std::vector<double> SquaredSpeeds(const FourierBoundary& fb, int n) {
  std::vector<Vec2> points, tangents;
  SampleBoundary(fb, n, points, tangents);
  std::vector<double> q(n);
  for (int j = 0; j < n; ++j) q[j] = tangents[j].squaredNorm();
  return q;
}

struct ModeSums {
  double weighted = 0.0;  // sum k^2 (a_k^2 + a'_k^2 + b_k^2 + b'_k^2)
  double a_squared = 0.0;
  double b_squared = 0.0;
};

ModeSums SumModes(const FourierBoundary& fb) {
  ModeSums s;
  for (int k = 1; k <= fb.order(); ++k) {
    const FourierMode& m = fb.mode(k);
    const double a2 = m.a * m.a + m.a_prime * m.a_prime;
    const double b2 = m.b * m.b + m.b_prime * m.b_prime;
    s.weighted += static_cast<double>(k) * k * (a2 + b2);
    s.a_squared += a2;
    s.b_squared += b2;
  }
  return s;
}

}  // namespace

FourierBoundary FourierBoundary::Circle(double radius, Vec2 center) {
  return Ellipse(radius, radius, center);
}

FourierBoundary FourierBoundary::Ellipse(double ax, double ay, Vec2 center) {
  FourierBoundary fb;
  fb.a0 = 2.0 * center.x();
  fb.b0 = 2.0 * center.y();
  fb.modes.resize(1);
  fb.modes[0].a = ax;
  fb.modes[0].b_prime = ay;
  return fb;
}

BoundaryPoint Evaluate(const FourierBoundary& fb, double sigma) {
  BoundaryPoint p{Vec2(fb.a0 / 2.0, fb.b0 / 2.0), Vec2::Zero()};
  for (int k = 1; k <= fb.order(); ++k) {
    const FourierMode& m = fb.mode(k);
    const double c = std::cos(k * sigma);
    const double s = std::sin(k * sigma);
    p.point += Vec2(m.a * c + m.a_prime * s, m.b * c + m.b_prime * s);
    p.tangent += k * Vec2(-m.a * s + m.a_prime * c, -m.b * s + m.b_prime * c);
  }
  return p;
}

void SampleBoundary(const FourierBoundary& fb, int n, std::vector<Vec2>& points,
                    std::vector<Vec2>& tangents) {
  points.assign(n, Vec2(fb.a0 / 2.0, fb.b0 / 2.0));
  tangents.assign(n, Vec2::Zero());
  for (int j = 0; j < n; ++j) {
    const double sigma = 2.0 * kPi * j / n;
    const std::complex<double> step = std::polar(1.0, sigma);
    std::complex<double> rot = 1.0;
    for (int k = 1; k <= fb.order(); ++k) {
      rot = (k % 64 == 0) ? std::polar(1.0, k * sigma) : rot * step;
      const double c = rot.real();
      const double s = rot.imag();
      const FourierMode& m = fb.mode(k);
      points[j] += Vec2(m.a * c + m.a_prime * s, m.b * c + m.b_prime * s);
      tangents[j] +=
          k * Vec2(-m.a * s + m.a_prime * c, -m.b * s + m.b_prime * c);
    }
  }
}

SimplicityReport CheckSimple(const FourierBoundary& fb) {
  SimplicityReport report;
  const int n = SimplicitySamples(fb);
  report.samples = n;
  std::vector<Vec2> points, tangents;
  SampleBoundary(fb, n, points, tangents);

  double min_speed = 1e300, max_speed = 0.0;
  for (const Vec2& t : tangents) {
    min_speed = std::min(min_speed, t.norm());
    max_speed = std::max(max_speed, t.norm());
  }
  report.min_speed_ratio = max_speed > 0.0 ? min_speed / max_speed : 0.0;
  report.cusp_free = report.min_speed_ratio > 1e-6;

  double area = 0.0;
  double turning = 0.0;
  for (int j = 0; j < n; ++j) {
    const Vec2& p = points[j];
    const Vec2& q = points[(j + 1) % n];
    area += 0.5 * (p.x() * q.y() - p.y() * q.x());
    const Vec2 e0 = q - p;
    const Vec2 e1 = points[(j + 2) % n] - q;
    turning += std::atan2(e0.x() * e1.y() - e0.y() * e1.x(), e0.dot(e1));
  }
  report.signed_area = area;
  report.winding = static_cast<int>(std::lround(turning / (2.0 * kPi)));

  bool crossing = false;
  for (int i = 0; i < n && !crossing; ++i) {
    const Vec2& p1 = points[i];
    const Vec2& p2 = points[(i + 1) % n];
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the seam
      if (SegmentsIntersect(p1, p2, points[j], points[(j + 1) % n])) {
        crossing = true;
        break;
      }
    }
  }
  report.simple = !crossing && report.cusp_free &&
                  std::abs(report.winding) == 1 && area != 0.0;
  return report;
}

bool IsConvexCurve(const FourierBoundary& fb, int samples) {
  double min_cross = 0.0;
  double max_cross = 0.0;
  double scale = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double s = 2.0 * kPi * j / samples;
    double dx = 0.0, dy = 0.0, ddx = 0.0, ddy = 0.0;
    for (int k = 1; k <= fb.order(); ++k) {
      const FourierMode& m = fb.mode(k);
      const double c = std::cos(k * s);
      const double sn = std::sin(k * s);
      dx += k * (-m.a * sn + m.a_prime * c);
      dy += k * (-m.b * sn + m.b_prime * c);
      ddx -= k * k * (m.a * c + m.a_prime * sn);
      ddy -= k * k * (m.b * c + m.b_prime * sn);
    }
    const double cross = dx * ddy - dy * ddx;
    min_cross = j == 0 ? cross : std::min(min_cross, cross);
    max_cross = j == 0 ? cross : std::max(max_cross, cross);
    scale = std::max(scale, std::pow(dx * dx + dy * dy, 1.5));
  }
  const double tol = 1e-10 * scale;
  if (min_cross < -tol && max_cross > tol) return false;
  const SimplicityReport report = CheckSimple(fb);
  return report.simple;
}

QuadratureMomentsResult QuadratureMoments(const FourierBoundary& fb,
                                          int panels, int max_panels) {
  const SimplicityReport simple = CheckSimple(fb);
  if (!simple.simple) {
    throw Error(ErrorCode::kInvalidShape, "Fourier boundary is not simple");
  }
  const double r = LengthScale(fb);
  int n = std::max(panels, 8 * std::max(fb.order(), 1));
  CurveIntegrals previous = Integrate(fb, n);
  QuadratureMomentsResult result;
  double change = 1.0;
  while (n < max_panels) {
    n *= 2;
    CurveIntegrals current = Integrate(fb, n);
    change = RelativeChange(previous, current, r);
    previous = current;
    if (change < 1e-12) break;
  }
  result.panels_used = n;
  result.achieved_tolerance = change;
  result.converged = change < 1e-12;

  const double sign = previous.area > 0.0 ? 1.0 : -1.0;
  RawMoments raw = RawMoments::Zero(2, /*with_boundary=*/true);
  raw.volume = sign * previous.area;
  raw.first = sign * VecX(previous.first);
  raw.second = sign * MatX(previous.second);
  raw.surface = previous.length;
  raw.boundary_first = previous.boundary_first;
  raw.boundary_second = previous.boundary_second;
  result.summary = Summarize(raw);
  return result;
}

MomentSummary FourierMoments(const FourierBoundary& fb) {
  return QuadratureMoments(fb).summary;
}

double ConstantSpeedResidual(const FourierBoundary& fb) {
  const std::vector<double> q = SquaredSpeeds(fb, kSpeedGrid);
  double mean = 0.0;
  for (double v : q) mean += v;
  mean /= q.size();
  if (!(mean > 0.0)) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (double v : q) worst = std::max(worst, std::abs(v - mean));
  return worst / mean;
}

double CoefficientArea(const FourierBoundary& fb) {
  double sum = 0.0;
  for (int k = 1; k <= fb.order(); ++k) {
    const FourierMode& m = fb.mode(k);
    sum += k * (m.a * m.b_prime - m.a_prime * m.b);
  }
  return kPi * sum;
}

double CoefficientPerimeter(const FourierBoundary& fb) {
  return std::sqrt(2.0 * kPi * kPi * SumModes(fb).weighted);
}

ParsevalSummary ParsevalQuantities(const FourierBoundary& fb) {
  const double residual = ConstantSpeedResidual(fb);
  if (!(residual < kParsevalSpeedTolerance)) {
    throw Error(ErrorCode::kConstantSpeedRequired,
                "speed residual " + FormatNumber(residual) +
                    " exceeds the Parseval tolerance");
  }
  const ModeSums sums = SumModes(fb);
  ParsevalSummary out;
  out.perimeter = std::sqrt(2.0 * kPi * kPi * sums.weighted);
  out.area = CoefficientArea(fb);
  out.a_squared = sums.a_squared;
  out.b_squared = sums.b_squared;
  out.I1 = 0.5 * out.perimeter * (0.5 * fb.a0 * fb.a0 + sums.a_squared);
  out.I2 = 0.5 * out.perimeter * (0.5 * fb.b0 * fb.b0 + sums.b_squared);
  return out;
}

ReparametrizationResult ReparametrizeConstantSpeed(const FourierBoundary& fb,
                                                   int k_out) {
  if (k_out < 1) {
    throw Error(ErrorCode::kInvalidArgument, "k_out must be positive");
  }
  // Spectral representation of the speed and its integral.
  const int n = std::max(4096, 64 * (fb.order() + k_out));
  const int speed_modes = n / 2 - 1;
  std::vector<Vec2> points, tangents;
  SampleBoundary(fb, n, points, tangents);
  std::vector<double> speed(n);
  for (int j = 0; j < n; ++j) speed[j] = tangents[j].norm();
  const TrigSeries series = RealDft(speed, speed_modes);
  const double mean_speed = series.cos_coeffs[0];
  if (!(mean_speed > 0.0)) {
    throw Error(ErrorCode::kDegenerate, "curve has zero length");
  }
  const double length = 2.0 * kPi * mean_speed;

  auto arc = [&](double sigma, double& derivative) {
    double s = mean_speed * sigma;
    derivative = mean_speed;
    const std::complex<double> step = std::polar(1.0, sigma);
    std::complex<double> rot = 1.0;
    for (int m = 1; m <= speed_modes; ++m) {
      rot = (m % 64 == 0) ? std::polar(1.0, m * sigma) : rot * step;
      const double c = rot.real();
      const double sn = rot.imag();
      s += (series.cos_coeffs[m] * sn + series.sin_coeffs[m] * (1.0 - c)) / m;
      derivative += series.cos_coeffs[m] * c + series.sin_coeffs[m] * sn;
    }
    return s;
  };

  const int samples = std::max(256, 8 * k_out);
  std::vector<double> xs(samples), ys(samples);
  double sigma = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double target = length * j / samples;
    if (j > 0) sigma = std::max(sigma, 2.0 * kPi * j / samples - 1.0);
    for (int iter = 0; iter < 60; ++iter) {
      double derivative = 0.0;
      const double delta = arc(sigma, derivative) - target;
      const double step = delta / std::max(derivative, 1e-300);
      sigma -= step;
      if (std::abs(step) < 1e-15) break;
    }
    const Vec2 p = Evaluate(fb, sigma).point;
    xs[j] = p.x();
    ys[j] = p.y();
  }
  const int modes = std::min(k_out, samples / 2 - 1);
  const TrigSeries sx = RealDft(xs, modes);
  const TrigSeries sy = RealDft(ys, modes);
  ReparametrizationResult result;
  result.boundary.a0 = 2.0 * sx.cos_coeffs[0];
  result.boundary.b0 = 2.0 * sy.cos_coeffs[0];
  result.boundary.modes.resize(k_out);
  for (int k = 1; k <= modes; ++k) {
    FourierMode& m = result.boundary.mode(k);
    m.a = sx.cos_coeffs[k];
    m.a_prime = sx.sin_coeffs[k];
    m.b = sy.cos_coeffs[k];
    m.b_prime = sy.sin_coeffs[k];
  }
  result.residual = ConstantSpeedResidual(result.boundary);
  result.meets_tolerance = result.residual < kParsevalSpeedTolerance;
  return result;
}

TwoModeSpeedCoefficients TwoModeSpeed(int k1, const FourierMode& m1, int k2,
                                      const FourierMode& m2) {
  TwoModeSpeedCoefficients out;
  out.k1 = k1;
  out.k2 = k2;
  auto& c = out.c;
  const double s1 = static_cast<double>(k1) * k1;
  const double s2 = static_cast<double>(k2) * k2;
  const double p = static_cast<double>(k1) * k2;
  c[0] = 0.5 * s1 * (m1.a * m1.a + m1.a_prime * m1.a_prime + m1.b * m1.b +
                     m1.b_prime * m1.b_prime) +
         0.5 * s2 * (m2.a * m2.a + m2.a_prime * m2.a_prime + m2.b * m2.b +
                     m2.b_prime * m2.b_prime);
  c[1] = 0.5 * s1 * (m1.a_prime * m1.a_prime - m1.a * m1.a +
                     m1.b_prime * m1.b_prime - m1.b * m1.b);
  c[2] = -s1 * (m1.a * m1.a_prime + m1.b * m1.b_prime);
  c[3] = 0.5 * s2 * (m2.a_prime * m2.a_prime - m2.a * m2.a +
                     m2.b_prime * m2.b_prime - m2.b * m2.b);
  c[4] = -s2 * (m2.a * m2.a_prime + m2.b * m2.b_prime);
  c[5] = p * (m1.a * m2.a + m1.a_prime * m2.a_prime + m1.b * m2.b +
              m1.b_prime * m2.b_prime);
  c[6] = p * (m1.a_prime * m2.a_prime - m1.a * m2.a +
              m1.b_prime * m2.b_prime - m1.b * m2.b);
  c[7] = p * (m1.a_prime * m2.a - m1.a * m2.a_prime + m1.b_prime * m2.b -
              m1.b * m2.b_prime);
  c[8] = -p * (m1.a * m2.a_prime + m1.a_prime * m2.a + m1.b * m2.b_prime +
               m1.b_prime * m2.b);
  return out;
}

double EvaluateSpeedSeries(const TwoModeSpeedCoefficients& t, double sigma) {
  const auto& c = t.c;
  const double d = t.k1 - t.k2;
  const double s = t.k1 + t.k2;
  return c[0] + c[1] * std::cos(2 * t.k1 * sigma) +
         c[2] * std::sin(2 * t.k1 * sigma) + c[3] * std::cos(2 * t.k2 * sigma) +
         c[4] * std::sin(2 * t.k2 * sigma) + c[5] * std::cos(d * sigma) +
         c[6] * std::cos(s * sigma) + c[7] * std::sin(d * sigma) +
         c[8] * std::sin(s * sigma);
}

std::vector<FrequencyTerm> MergedSpeedHarmonics(
    const TwoModeSpeedCoefficients& t) {
  const auto& c = t.c;
  std::map<int, FrequencyTerm> merged;
  auto add = [&merged](int frequency, double cos_coeff, double sin_coeff) {
    if (frequency < 0) {
      frequency = -frequency;
      sin_coeff = -sin_coeff;
    }
    if (frequency == 0) sin_coeff = 0.0;
    FrequencyTerm& term = merged[frequency];
    term.frequency = frequency;
    term.cos_coeff += cos_coeff;
    term.sin_coeff += sin_coeff;
  };
  add(0, c[0], 0.0);
  add(2 * t.k1, c[1], c[2]);
  add(2 * t.k2, c[3], c[4]);
  add(t.k1 - t.k2, c[5], c[7]);
  add(t.k1 + t.k2, c[6], c[8]);
  std::vector<FrequencyTerm> out;
  for (const auto& [f, term] : merged) out.push_back(term);
  return out;
}

LagrangeSystemResult LagrangeSystem(const FourierBoundary& fb, double lambda) {
  const double residual = ConstantSpeedResidual(fb);
  if (!(residual < kLagrangeSpeedTolerance)) {
    throw Error(ErrorCode::kConstantSpeedRequired,
                "speed residual " + FormatNumber(residual) +
                    " exceeds the Lagrange tolerance");
  }
  const ModeSums sums = SumModes(fb);
  LagrangeSystemResult out;
  const double l2 = 2.0 * kPi * kPi * sums.weighted;
  out.perimeter = std::sqrt(l2);
  out.a_squared = sums.a_squared;
  out.b_squared = sums.b_squared;
  const double a2 = sums.a_squared;
  const double b2 = sums.b_squared;
  double norm2 = 0.0;
  for (int k = 1; k <= fb.order(); ++k) {
    const FourierMode& m = fb.mode(k);
    const double kk = static_cast<double>(k) * k;
    const double common = 4.0 * kPi * kPi * kk * a2 * b2;
    LagrangeModeResidual r;
    r.k = k;
    r.residual[0] = (common + 2.0 * l2 * b2) * m.a - lambda * k * m.b_prime;
    r.residual[1] = (common + 2.0 * l2 * b2) * m.a_prime + lambda * k * m.b;
    r.residual[2] = (common + 2.0 * l2 * a2) * m.b + lambda * k * m.a_prime;
    r.residual[3] = (common + 2.0 * l2 * a2) * m.b_prime - lambda * k * m.a;
    r.M = 4.0 * a2 * b2 * (2.0 * kPi * kPi * kk * a2 + l2) *
              (2.0 * kPi * kPi * kk * b2 + l2) -
          kk * lambda * lambda;
    for (double v : r.residual) norm2 += v * v;
    out.modes.push_back(r);
  }
  out.residual_norm = std::sqrt(norm2);
  return out;
}

double LagrangeF(double t, double a_squared, double b_squared,
                 double perimeter) {
  const double l2 = perimeter * perimeter;
  return (2.0 * kPi * kPi * t * a_squared + l2) *
         (2.0 * kPi * kPi * t * b_squared + l2) / t;
}

}  // namespace isoinertia
