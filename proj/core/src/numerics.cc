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

#include "isoinertia/numerics.h"

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "isoinertia/error.h"

namespace isoinertia {

double GammaHalfIntegerPlusOne(int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative n");
  // Gamma(x + 1) = x Gamma(x), starting from Gamma(1) = 1 or
  // Gamma(3/2) = sqrt(pi) / 2.
  double value = (n % 2 == 0) ? 1.0 : 0.5 * std::sqrt(kPi);
  for (int twice = (n % 2 == 0) ? 2 : 3; twice <= n; twice += 2) {
    value *= 0.5 * twice;
  }
  return value;
}

double UnitBallVolume(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "dimension < 1");
  return std::pow(kPi, 0.5 * n) / GammaHalfIntegerPlusOne(n);
}

QuadratureRule GaussLegendre(int points) {
  if (points < 1) throw Error(ErrorCode::kInvalidArgument, "points < 1");
  QuadratureRule rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  for (int i = 0; i < (points + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (points + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= points; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (points == 1) p0 = 1.0;
      derivative = points * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / derivative;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[points - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    rule.weights[i] = w;
    rule.weights[points - 1 - i] = w;
  }
  return rule;
}

TrigSeries RealDft(const std::vector<double>& samples, int max_mode) {
  const int n = static_cast<int>(samples.size());
  if (n < 2 || 2 * max_mode >= n) {
    throw Error(ErrorCode::kInvalidArgument, "too few samples for DFT");
  }
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> spectrum;
  fft.fwd(spectrum, samples);
  TrigSeries series;
  series.cos_coeffs.assign(max_mode + 1, 0.0);
  series.sin_coeffs.assign(max_mode + 1, 0.0);
  for (int m = 0; m <= max_mode; ++m) {
    const double scale = (m == 0) ? 1.0 / n : 2.0 / n;
    series.cos_coeffs[m] = spectrum[m].real() * scale;
    series.sin_coeffs[m] = -spectrum[m].imag() * scale;
  }
  return series;
}

std::string FormatNumber(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3g", value);
  return buffer;
}

}  // namespace isoinertia
