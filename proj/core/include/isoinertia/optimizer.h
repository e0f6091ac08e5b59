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

#ifndef ISOINERTIA_OPTIMIZER_H_
#define ISOINERTIA_OPTIMIZER_H_

#include <string>
#include <vector>

#include "isoinertia/fourier.h"

namespace isoinertia {

// Minimizes I(Omega) = I_1 I_2 over Fourier coefficients at fixed area.
//
// The objective uses moments about the boundary centroid, so the offsets
// a0, b0 carry no information and are pinned to zero. The rotation and
// start-point gauge a'_1 = b_1 = 0 is imposed on the initial curve and kept
// fixed. A small penalty on the speed variance removes the
// reparametrization null space.
struct OptimizationProblem {
  int order = 8;
  double target_area = kPi;
  double speed_weight = 1.0;
  double initial_penalty = 10.0;
  int max_outer_iterations = 40;
  int max_inner_iterations = 500;
  double area_tolerance = 1e-10;     // relative
  double gradient_tolerance = 1e-9;  // on the augmented Lagrangian
  int quadrature_nodes = 0;          // 0: 32 * order, at least 128
};

struct TraceEntry {
  int outer = 0;
  int iteration = 0;
  double objective = 0.0;      // I_1 I_2
  double area_residual = 0.0;  // (area - target) / target
  double speed_residual = 0.0;
  double gradient_norm = 0.0;  // of the augmented Lagrangian
  double multiplier = 0.0;     // lambda in the 4I - (lambda/pi)|Omega| form
  double augmented = 0.0;
};

struct OptimizationTrace {
  std::vector<TraceEntry> iterations;
  FourierBoundary final_boundary;
  double final_objective = 0.0;
  double final_area_residual = 0.0;
  double lambda = 0.0;
  bool converged = false;
  std::string verdict;
};

// The initial curve is gauged and then truncated or zero-padded to
// `problem.order` harmonics.
OptimizationTrace MinimizeI(const FourierBoundary& initial,
                            const OptimizationProblem& problem);

// Coefficient layout used by the gradient routines:
//   [a0, b0, a_1, a'_1, b_1, b'_1, a_2, ...].
std::vector<double> PackCoefficients(const FourierBoundary& fb);
FourierBoundary UnpackCoefficients(const std::vector<double>& packed);

// I_1 I_2 about the boundary centroid from an n-node periodic trapezoid
// (n = 0 picks 32 K, at least 128).
double ObjectiveValue(const FourierBoundary& fb, int nodes = 0);

// Exact gradient of ObjectiveValue with respect to the packed coefficients.
std::vector<double> ObjectiveGradient(const FourierBoundary& fb,
                                      int nodes = 0);

// Gradient of the trapezoid area with respect to the packed coefficients.
std::vector<double> AreaGradient(const FourierBoundary& fb, int nodes = 0);

// Component of the objective gradient orthogonal to the area gradient, with
// the gauge coordinates (a0, b0, a'_1, b_1) removed.
std::vector<double> ProjectedObjectiveGradient(const FourierBoundary& fb,
                                               int nodes = 0);

// Rotation and start-point shift making a'_1 = b_1 = 0 with a_1, b'_1 >= 0;
// offsets set to zero.
FourierBoundary ApplyGauge(const FourierBoundary& fb);

// Uniform scaling to the given enclosed area.
FourierBoundary ScaleToArea(const FourierBoundary& fb, double area);

// Standard deviation of the distance to the boundary centroid, weighted by
// arc length.
double RadiusDeviation(const FourierBoundary& fb);

struct StationarityReport {
  double lambda = 0.0;  // least-squares multiplier
  LagrangeSystemResult system;
  double relative_residual = 0.0;  // |residual| / |lambda-free terms|
  std::vector<int> active_modes;   // modes carrying non-negligible amplitude
  std::vector<int> vanishing_M;    // modes with |M_k| <= tol * k^2 lambda^2
  bool at_most_two_roots = false;  // |{k : M_k = 0}| <= 2 among k <= K
};

// Estimates lambda from the stationarity equations by least squares.
// Throws Error(kConstantSpeedRequired) when the speed residual is at least
// kLagrangeSpeedTolerance.
StationarityReport MakeStationarityReport(const FourierBoundary& fb,
                                          double activity_tolerance = 1e-6,
                                          double root_tolerance = 1e-6);

}  // namespace isoinertia

#endif  // ISOINERTIA_OPTIMIZER_H_
