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

#ifndef ISOINERTIA_FOURIER_H_
#define ISOINERTIA_FOURIER_H_

#include <array>
#include <vector>

#include "isoinertia/moment_summary.h"
#include "isoinertia/numerics.h"

namespace isoinertia {

// Coefficients of one harmonic k of a closed planar curve:
//   x contributes a cos(k s) + a_prime sin(k s)
//   y contributes b cos(k s) + b_prime sin(k s)
struct FourierMode {
  double a = 0.0;
  double a_prime = 0.0;
  double b = 0.0;
  double b_prime = 0.0;
};

// Truncated Fourier boundary
//   x(s) = a0 / 2 + sum_{k=1}^K (a_k cos ks + a'_k sin ks)
//   y(s) = b0 / 2 + sum_{k=1}^K (b_k cos ks + b'_k sin ks),  s in [0, 2 pi).
// `modes[k - 1]` holds harmonic k. This is a plain value; validity (simple,
// no cusps) is checked by CheckSimple and by the operations that need it.
struct FourierBoundary {
  double a0 = 0.0;
  double b0 = 0.0;
  std::vector<FourierMode> modes;

  int order() const { return static_cast<int>(modes.size()); }
  const FourierMode& mode(int k) const { return modes[k - 1]; }
  FourierMode& mode(int k) { return modes[k - 1]; }

  static FourierBoundary Circle(double radius, Vec2 center = Vec2::Zero());
  // (center + (ax cos s, ay sin s)); not constant speed unless ax == ay.
  static FourierBoundary Ellipse(double ax, double ay,
                                 Vec2 center = Vec2::Zero());
};

struct BoundaryPoint {
  Vec2 point;
  Vec2 tangent;  // d/ds of the point
};

BoundaryPoint Evaluate(const FourierBoundary& fb, double sigma);

// Samples (point, tangent) at s_j = 2 pi j / n.
void SampleBoundary(const FourierBoundary& fb, int n, std::vector<Vec2>& points,
                    std::vector<Vec2>& tangents);

struct SimplicityReport {
  bool simple = false;
  bool cusp_free = false;
  int winding = 0;
  double signed_area = 0.0;
  double min_speed_ratio = 0.0;  // min |x'| / max |x'| on the grid
  int samples = 0;
};

// Winding plus an all-pairs segment intersection scan of the sampled curve.
// Curves that only self-touch between grid points can slip through.
SimplicityReport CheckSimple(const FourierBoundary& fb);

// Simple, with a curvature of one sign on a sampling grid.
bool IsConvexCurve(const FourierBoundary& fb, int samples = 1024);

struct QuadratureMomentsResult {
  MomentSummary summary;
  int panels_used = 0;
  double achieved_tolerance = 0.0;
  bool converged = false;
};

// Area and volume moments through their boundary line-integral forms and
// boundary moments through int f |x'| ds, all with the periodic trapezoidal
// rule. Panels double from max(panels, 8K) until the relative change drops
// below 1e-12 or `max_panels` is reached. Clockwise curves are measured as
// their counterclockwise reversal. Throws Error(kInvalidShape) for curves
// that are not simple.
QuadratureMomentsResult QuadratureMoments(const FourierBoundary& fb,
                                          int panels = 64,
                                          int max_panels = 1 << 16);

// Convenience wrapper returning only the converged summary.
MomentSummary FourierMoments(const FourierBoundary& fb);

// max_j | |x'(s_j)|^2 - mean | / mean on a 16384-point grid.
double ConstantSpeedResidual(const FourierBoundary& fb);

// Perimeter, area and axis moments from the coefficient sums that hold for
// constant-speed parametrizations.
struct ParsevalSummary {
  double perimeter = 0.0;
  double area = 0.0;
  double I1 = 0.0;
  double I2 = 0.0;
  double a_squared = 0.0;  // sum (a_k^2 + a'_k^2)
  double b_squared = 0.0;  // sum (b_k^2 + b'_k^2)
};

inline constexpr double kParsevalSpeedTolerance = 1e-8;

// Throws Error(kConstantSpeedRequired) when the speed residual is at least
// kParsevalSpeedTolerance.
ParsevalSummary ParsevalQuantities(const FourierBoundary& fb);

// Coefficient sums without the speed gate. The area sum is valid for any
// parametrization.
double CoefficientArea(const FourierBoundary& fb);
double CoefficientPerimeter(const FourierBoundary& fb);

struct ReparametrizationResult {
  FourierBoundary boundary;
  double residual = 0.0;  // ConstantSpeedResidual of `boundary`
  bool meets_tolerance = false;
};

inline constexpr int kDefaultReparametrizationOrder = 64;

// Resamples the curve at equal arc length and projects onto `k_out` modes.
// The arc-length function comes from a spectral integral of the speed and is
// inverted by Newton's method.
ReparametrizationResult ReparametrizeConstantSpeed(
    const FourierBoundary& fb, int k_out = kDefaultReparametrizationOrder);

// Speed-squared series of a curve built from two harmonics k1 and k2:
//   |x'|^2 = c0 + c1 cos 2k1 s + c2 sin 2k1 s + c3 cos 2k2 s + c4 sin 2k2 s
//          + c5 cos (k1-k2) s + c6 cos (k1+k2) s
//          + c7 sin (k1-k2) s + c8 sin (k1+k2) s.
struct TwoModeSpeedCoefficients {
  int k1 = 1;
  int k2 = 1;
  std::array<double, 9> c{};
};

TwoModeSpeedCoefficients TwoModeSpeed(int k1, const FourierMode& mode1, int k2,
                                      const FourierMode& mode2);

double EvaluateSpeedSeries(const TwoModeSpeedCoefficients& coeffs,
                           double sigma);

// A harmonic of the speed series after merging coincident frequencies.
struct FrequencyTerm {
  int frequency = 0;
  double cos_coeff = 0.0;
  double sin_coeff = 0.0;
};

// Folds negative frequencies and merges equal ones (for example 2 k1 and
// k2 - k1 when k2 = 3 k1). The curve has constant speed iff every returned
// term with frequency > 0 vanishes.
std::vector<FrequencyTerm> MergedSpeedHarmonics(
    const TwoModeSpeedCoefficients& coeffs);

// Left-hand sides of the Lagrange stationarity equations for minimizing the
// boundary moment product at fixed area, written for the Lagrangian
// F = L^2 a^2 b^2 - lambda sum_k k (a_k b'_k - a'_k b_k), together with
// M_k = 4 a^2 b^2 (2 pi^2 k^2 a^2 + L^2)(2 pi^2 k^2 b^2 + L^2) - k^2 lambda^2.
// L comes from the coefficient sum L^2 = 2 pi^2 sum k^2 (...).
struct LagrangeModeResidual {
  int k = 0;
  std::array<double, 4> residual{};  // d/da_k, d/da'_k, d/db_k, d/db'_k
  double M = 0.0;
};

struct LagrangeSystemResult {
  double perimeter = 0.0;
  double a_squared = 0.0;
  double b_squared = 0.0;
  std::vector<LagrangeModeResidual> modes;
  double residual_norm = 0.0;
};

inline constexpr double kLagrangeSpeedTolerance = 1e-6;

// Throws Error(kConstantSpeedRequired) when the speed residual is at least
// kLagrangeSpeedTolerance. Offsets a0, b0 are ignored.
LagrangeSystemResult LagrangeSystem(const FourierBoundary& fb, double lambda);

// f(t) = (2 pi^2 t a^2 + L^2)(2 pi^2 t b^2 + L^2) / t.
double LagrangeF(double t, double a_squared, double b_squared,
                 double perimeter);

}  // namespace isoinertia

#endif  // ISOINERTIA_FOURIER_H_
