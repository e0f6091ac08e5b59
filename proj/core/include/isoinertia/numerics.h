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

#ifndef ISOINERTIA_NUMERICS_H_
#define ISOINERTIA_NUMERICS_H_

#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace isoinertia {

using Vec2 = Eigen::Vector2d;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;

inline constexpr double kPi = std::numbers::pi;

// Volume of the unit ball in R^n, pi^{n/2} / Gamma(n/2 + 1).
double UnitBallVolume(int n);

// Gamma(n/2 + 1) for integer n >= 0, via the half-integer recurrence.
double GammaHalfIntegerPlusOne(int n);

// Gauss-Legendre rule on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadratureRule GaussLegendre(int points);

// Real trigonometric coefficients of equally spaced periodic samples
// f(2 pi j / n), j = 0..n-1:
//   f(s) ~ c[0] + sum_{m>=1} (c[m] cos(m s) + s[m] sin(m s)).
// Only modes 0..max_mode are computed; max_mode < n / 2.
struct TrigSeries {
  std::vector<double> cos_coeffs;
  std::vector<double> sin_coeffs;
};
TrigSeries RealDft(const std::vector<double>& samples, int max_mode);

// Short scientific rendering for error messages, e.g. "1.16e-06".
std::string FormatNumber(double value);

}  // namespace isoinertia

#endif  // ISOINERTIA_NUMERICS_H_
