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

#include "isoinertia/polygon.h"
#include "isoinertia/random_shapes.h"
#include "isoinertia/stekloff.h"

namespace isoinertia {
namespace {

void BM_RayleighPairDisc(benchmark::State& state) {
  const FourierBoundary disc = FourierBoundary::Circle(1.0);
  const auto space = HarmonicTrialSpace(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(MakeRayleighPair(disc, space));
}
BENCHMARK(BM_RayleighPairDisc)->Arg(2)->Arg(8)->Arg(16)->Arg(32);

void BM_RayleighPairSquare(benchmark::State& state) {
  const Polygon2 square({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
  const auto space = HarmonicTrialSpace(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(MakeRayleighPair(square, space));
}
BENCHMARK(BM_RayleighPairSquare)->Arg(2)->Arg(8)->Arg(16);

void BM_ConvergeSpectrum(benchmark::State& state) {
  Rng rng(3);
  const FourierBoundary fb = RandomStarFourier(rng, 4, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(ConvergeSpectrum(fb, 40, 1e-10));
}
BENCHMARK(BM_ConvergeSpectrum)->Unit(benchmark::kMillisecond);

void BM_StekloffChainCheck(benchmark::State& state) {
  const Polygon2 hexagon = RegularPolygon(6, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(StekloffChainCheck(hexagon));
}
BENCHMARK(BM_StekloffChainCheck)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace isoinertia

BENCHMARK_MAIN();
