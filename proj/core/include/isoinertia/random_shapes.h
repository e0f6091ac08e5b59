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

#ifndef ISOINERTIA_RANDOM_SHAPES_H_
#define ISOINERTIA_RANDOM_SHAPES_H_

#include <random>
#include <vector>

#include "isoinertia/fourier.h"
#include "isoinertia/polygon.h"
#include "isoinertia/simplicial.h"

namespace isoinertia {

using Rng = std::mt19937_64;

// Counterclockwise hull (monotone chain) without collinear points.
std::vector<Vec2> ConvexHull(std::vector<Vec2> points);

// Hull of 6..40 uniform samples in the unit disc, optionally scaled to
// area pi about its centroid.
Polygon2 RandomConvexPolygon(Rng& rng, bool normalize_area = true);

// Curve r(t) = 1 + sum_{m=2}^{mode_cap} (alpha_m cos mt + beta_m sin mt) in
// polar form, with alpha_m, beta_m uniform in [-amplitude, amplitude] / m.
// Represented exactly with mode_cap + 1 harmonics; mode_cap < 2 gives the
// unit circle. Draws are repeated until min r >= 0.2, at most 1000 times
// (then Error(kInvalidArgument)).
FourierBoundary RandomStarFourier(Rng& rng, int mode_cap, double amplitude,
                                  bool normalize_area = true);

// Star curve built from explicit radial harmonics (index m in `alpha`,
// `beta`; entries 0 and 1 are ignored).
FourierBoundary StarFourier(const std::vector<double>& alpha,
                            const std::vector<double>& beta);

// Kuhn triangulated unit cube with every vertex moved by a uniform offset
// in [-amplitude, amplitude]^N. Degenerate draws are retried up to 1000
// times.
SimplicialBody RandomPerturbedBox(Rng& rng, int dimension, double amplitude);

}  // namespace isoinertia

#endif  // ISOINERTIA_RANDOM_SHAPES_H_
