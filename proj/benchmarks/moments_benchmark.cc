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

#include <benchmark/benchmark.h>

#include "isoinertia/fourier.h"
#include "isoinertia/parallel.h"
#include "isoinertia/polygon.h"
#include "isoinertia/random_shapes.h"
#include "isoinertia/simplicial.h"

namespace isoinertia {
namespace {

void BM_PolygonMoments(benchmark::State& state) {
  const Polygon2 polygon = RegularPolygon(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(PolygonMoments(polygon));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PolygonMoments)->RangeMultiplier(4)->Range(4, 4096)->Complexity();

void BM_FourierMoments(benchmark::State& state) {
  Rng rng(1);
  const FourierBoundary fb = RandomStarFourier(rng, static_cast<int>(state.range(0)), 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(FourierMoments(fb));
}
BENCHMARK(BM_FourierMoments)->Arg(4)->Arg(16)->Arg(64);

void BM_SimplicialMoments(benchmark::State& state) {
  const SimplicialBody cube = KuhnCube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SimplicialMoments(cube));
}
BENCHMARK(BM_SimplicialMoments)->DenseRange(2, 5);

void BM_OffsetMoments(benchmark::State& state) {
  Rng rng(2);
  const Polygon2 polygon = RandomConvexPolygon(rng);
  for (auto _ : state) benchmark::DoNotOptimize(OffsetMoments(polygon, 0.5));
}
BENCHMARK(BM_OffsetMoments);

void BM_ReparametrizeConstantSpeed(benchmark::State& state) {
  const FourierBoundary ellipse = FourierBoundary::Ellipse(2.0, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ReparametrizeConstantSpeed(ellipse, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ReparametrizeConstantSpeed)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

}  // namespace
}  // namespace isoinertia

BENCHMARK_MAIN();
