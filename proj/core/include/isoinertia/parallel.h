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

#ifndef ISOINERTIA_PARALLEL_H_
#define ISOINERTIA_PARALLEL_H_

#include <vector>

#include "isoinertia/moment_summary.h"
#include "isoinertia/polygon.h"

namespace isoinertia {

// Pieces of the parallel body Omega_h = Omega + B_h of a convex polygon:
// the polygon itself, one rectangle of height h on every edge, and one
// circular sector of radius h at every vertex.
struct OffsetSector {
  Vec2 center;
  double start_angle = 0.0;  // direction of the incoming edge normal
  double sweep = 0.0;        // exterior angle at the vertex, in [0, pi)
};

class OffsetBody {
 public:
  // Throws Error(kHypothesisViolation) for a nonconvex base and
  // Error(kInvalidArgument) for h < 0.
  OffsetBody(Polygon2 base, double h);

  const Polygon2& base() const { return base_; }
  double h() const { return h_; }
  const std::vector<OffsetSector>& sectors() const { return sectors_; }

  // Sum of the sector sweeps; 2 pi for a convex base.
  double TotalTurning() const;

 private:
  Polygon2 base_;
  double h_;
  std::vector<OffsetSector> sectors_;
};

// Exact volume and boundary moments of Omega_h from the closed forms of the
// rectangles and sectors.
MomentSummary OffsetMoments(const OffsetBody& body);
MomentSummary OffsetMoments(const Polygon2& base, double h);

// Coefficients of h -> J_k(B_{R + h}) = omega_N (R + h)^{N+2} / (N + 2),
// lowest order first.
std::vector<double> BallParallelMomentPolynomial(int dimension, double radius);

// Least-squares polynomial of degree N + 2 through samples of
// h -> J_k(Omega_h).
struct ExpansionFit {
  int axis = 0;
  std::vector<double> h_grid;
  std::vector<double> samples;
  std::vector<double> coefficients;  // lowest order first
  double residual = 0.0;             // max |fit - sample| / max |sample|
  double condition = 0.0;            // of the scaled normal matrix
};

// 12 Chebyshev points of the first kind mapped to [0, 1].
std::vector<double> DefaultExpansionGrid();

// `axis` is zero based. Needs at least N + 4 distinct points; throws
// Error(kIllConditioned) when the scaled normal equations are singular to
// working precision or the grid is too clustered.
ExpansionFit FitExpansion(const Polygon2& base, int axis,
                          const std::vector<double>& h_grid);

enum class ParallelFunctional { kAxisMoment, kVolume };

struct ConcavityReport {
  ParallelFunctional functional = ParallelFunctional::kVolume;
  int axis = 0;
  double exponent = 0.0;
  std::vector<double> h_grid;
  std::vector<double> g;                   // functional^exponent
  std::vector<double> second_differences;  // interior grid points
  double max_second_difference = 0.0;
  bool concave = false;
  // Axis-moment case: smallest chord slope of g over the grid and the
  // limiting slope C = (omega_N / (N + 2))^{1/(N+2)} of the ball.
  double min_chord_slope = 0.0;
  double slope_bound = 0.0;
  bool slope_bound_holds = false;
};

inline constexpr double kConcavityTolerance = 1e-10;

// Uniform grid of `points` values in [0, 1].
std::vector<double> UniformGrid(int points);

// Second differences of g(h) = F(Omega_h)^exponent. On a nonuniform grid the
// difference is 2 (w_- g_{j-1} + w_+ g_{j+1} - g_j) with linear
// interpolation weights, which reduces to the usual central form.
ConcavityReport ConcavityScan(const Polygon2& base,
                              ParallelFunctional functional, int axis,
                              double exponent,
                              const std::vector<double>& h_grid);

}  // namespace isoinertia

#endif  // ISOINERTIA_PARALLEL_H_
