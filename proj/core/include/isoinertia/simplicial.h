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

#ifndef ISOINERTIA_SIMPLICIAL_H_
#define ISOINERTIA_SIMPLICIAL_H_

#include <vector>

#include "isoinertia/moment_summary.h"
#include "isoinertia/numerics.h"

namespace isoinertia {

// A body in R^N given as a signed sum of N-simplices together with its
// boundary as (N-1)-simplices (facets).
//
// Simplices contribute with the sign of their orientation, so cone
// decompositions of nonconvex bodies are allowed; the signed total must be
// positive. A facet (w_0, ..., w_{N-1}) is outward when
// det[w_0 - c, ..., w_{N-1} - c] > 0 for a point c just inside the body.
class SimplicialBody {
 public:
  // Validates every invariant. Throws Error(kDegenerate) for a flat simplex
  // or facet, Error(kInconsistentOrientation) when the facets do not form a
  // closed, outward oriented boundary of the simplices.
  SimplicialBody(int dimension, std::vector<VecX> vertices,
                 std::vector<std::vector<int>> simplices,
                 std::vector<std::vector<int>> facets);

  // Orients every simplex positively and derives the boundary as the facets
  // that belong to exactly one simplex.
  static SimplicialBody FromSimplices(int dimension, std::vector<VecX> vertices,
                                      std::vector<std::vector<int>> simplices);

  int dimension() const { return dimension_; }
  const std::vector<VecX>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& simplices() const { return simplices_; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }

  double SignedSimplexVolume(int simplex) const;
  double FacetMeasure(int facet) const;
  // Unit normal, pointing outward for valid bodies.
  VecX FacetNormal(int facet) const;

  // Every vertex lies on the inner side of every facet hyperplane.
  bool IsConvex() const;

 private:
  int dimension_;
  std::vector<VecX> vertices_;
  std::vector<std::vector<int>> simplices_;
  std::vector<std::vector<int>> facets_;
};

RawMoments SimplicialRawMoments(const SimplicialBody& body, bool with_boundary);

// Sums the closed-form second moments of each simplex and facet: for a
// k-simplex with vertices v_0..v_k and measure V,
//   int x x^T = V / ((k+1)(k+2)) * (sum v_i v_i^T + (sum v_i)(sum v_i)^T).
MomentSummary SimplicialMoments(const SimplicialBody& body);

// [lo, hi]^N split into N! simplices by the Kuhn (path) triangulation.
SimplicialBody KuhnCube(int dimension, double lo = 0.0, double hi = 1.0);

// The simplex conv(0, e_1, ..., e_N).
SimplicialBody StandardSimplex(int dimension);

}  // namespace isoinertia

#endif  // ISOINERTIA_SIMPLICIAL_H_
