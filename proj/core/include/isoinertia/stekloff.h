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

#ifndef ISOINERTIA_STEKLOFF_H_
#define ISOINERTIA_STEKLOFF_H_

#include <optional>
#include <string>
#include <vector>

#include "isoinertia/numerics.h"
#include "isoinertia/shape.h"

namespace isoinertia {

// Trial functions for the Steklov Rayleigh quotient
//   R[v] = int_Omega |grad v|^2 / int_dOmega v^2.
// Harmonic members let the Dirichlet integral be evaluated on the boundary:
// int_Omega grad v_i . grad v_j = int_dOmega v_i dv_j/dn.
struct TrialFunction {
  enum class Kind { kHarmonicReal, kHarmonicImag, kMonomial };

  Kind kind = Kind::kHarmonicReal;
  int degree = 1;  // m of Re z^m / Im z^m
  int x_power = 0;
  int y_power = 0;

  static TrialFunction Re(int m) { return {Kind::kHarmonicReal, m, 0, 0}; }
  static TrialFunction Im(int m) { return {Kind::kHarmonicImag, m, 0, 0}; }
  static TrialFunction Monomial(int px, int py) {
    return {Kind::kMonomial, px + py, px, py};
  }

  bool IsHarmonic() const;
  std::string Name() const;
};

// Coordinates x, y.
std::vector<TrialFunction> CoordinateTrialSpace();
// Re z^m, Im z^m for m = 1..degree, in that order.
std::vector<TrialFunction> HarmonicTrialSpace(int degree);

// Nodes, outward normals and arc-length weights on a planar boundary:
// Gauss-Legendre per polygon edge, periodic trapezoid for Fourier curves.
struct BoundaryQuadrature {
  std::vector<Vec2> points;
  std::vector<Vec2> normals;
  std::vector<double> weights;
};

inline constexpr int kPolygonEdgeGaussPoints = 16;

BoundaryQuadrature BuildBoundaryQuadrature(const Shape& shape, int min_nodes);

// Rayleigh-Ritz matrices over a trial space with the boundary
// means removed, scaled so that B has unit diagonal, and the ordered roots
// p'_2 <= ... <= p'_{n+1} of det(A - p B) = 0.
struct RayleighPair {
  int n = 0;
  MatX A;
  MatX B;
  std::vector<double> roots;
  // Relative boundary residual |du/dn - p u| / (p |u|) in L2(dOmega) of the
  // Ritz function u belonging to each root.
  std::vector<double> residuals;
  double b_condition = 0.0;
};

// Polygons, Fourier boundaries and planar ellipses. Coordinates are
// measured from the boundary centroid and divided by the largest boundary
// radius before the trial functions are evaluated. Throws
// Error(kUnsupported) for non-harmonic trial functions or N != 2,
// Error(kDegenerate) when a trial function vanishes after the boundary mean
// is removed, and Error(kIllConditioned) when B is numerically indefinite.
RayleighPair MakeRayleighPair(const Shape& shape,
                              const std::vector<TrialFunction>& trial_space,
                              int min_nodes = 0);

struct StekloffBounds {
  std::string method;              // "coordinate" or "harmonic"
  int degree = 0;                  // harmonic degree reached
  std::vector<double> bounds;      // p'_2, p'_3, ...
  double product = 0.0;            // of the first N bounds
  std::vector<std::vector<double>> history;  // bounds per degree 1..degree
  bool converged = true;
  double achieved_tolerance = 0.0;
};

// p'_k = |Omega| / I_k after boundary centering and diagonalizing rotation;
// product |Omega|^N / prod I_k. Works in any dimension.
StekloffBounds CoordinateBounds(const Shape& shape);

// Raises the harmonic degree from 1 until the first N + 1 bounds change by
// less than `tol` (relative) between consecutive degrees and their Ritz
// residuals are below sqrt(tol). The residual test keeps symmetric shapes,
// whose bounds stall for degrees that add nothing to the tracked symmetry
// classes, from stopping early. Stops with `converged` false at
// `max_degree` or when B loses definiteness.
StekloffBounds ConvergeSpectrum(const Shape& shape, int max_degree,
                                double tol);

// Steklov spectrum of the ball: 0, then n / R with the multiplicity of the
// degree-n spherical harmonics, first `count` values.
struct BallSpectrum {
  int dimension = 0;
  double radius = 0.0;
  std::vector<double> eigenvalues;
};

BallSpectrum MakeBallSpectrum(int dimension, double radius, int count);

// Dimension of the degree-n harmonic polynomials in `dimension` variables.
long HarmonicMultiplicity(int dimension, int degree);

// One link "lhs <= rhs" of an upper-bound chain.
struct ChainLink {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  double relative_margin = 0.0;
  bool holds = false;
  bool equality = false;
};

inline constexpr double kChainTolerance = 1e-9;

ChainLink MakeChainLink(std::string name, double lhs, double rhs);

struct StekloffChainReport {
  int dimension = 0;
  StekloffBounds coordinate;
  std::optional<StekloffBounds> converged;  // planar shapes only
  std::vector<ChainLink> links;
  bool holds = false;
};

// Checks prod p_k <= prod p'_k = |Omega|^N / I <= omega_N / |Omega| and
// sum 1 / p_k >= N R* with R* the radius of the ball of equal volume. The
// spectral side uses converged planar spectra; in N >= 3 only the bound
// chain is checked. Throws Error(kHypothesisViolation) for nonconvex shapes.
StekloffChainReport StekloffChainCheck(const Shape& shape, int max_degree = 40,
                             double tol = 1e-10);

}  // namespace isoinertia

#endif  // ISOINERTIA_STEKLOFF_H_
