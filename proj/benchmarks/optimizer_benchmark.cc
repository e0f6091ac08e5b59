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

#include "isoinertia/optimizer.h"
#include "isoinertia/random_shapes.h"

namespace isoinertia {
namespace {

FourierBoundary Start(int order) {
  Rng rng(4);
  FourierBoundary fb = RandomStarFourier(rng, 4, 0.2);
  fb.modes.resize(order);
  return fb;
}

void BM_ObjectiveGradient(benchmark::State& state) {
  const FourierBoundary fb = Start(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ObjectiveGradient(fb));
}
BENCHMARK(BM_ObjectiveGradient)->Arg(4)->Arg(8)->Arg(16);

void BM_MinimizeI(benchmark::State& state) {
  OptimizationProblem problem;
  problem.order = static_cast<int>(state.range(0));
  const FourierBoundary fb = Start(problem.order);
  for (auto _ : state) benchmark::DoNotOptimize(MinimizeI(fb, problem));
}
BENCHMARK(BM_MinimizeI)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_StationarityReport(benchmark::State& state) {
  FourierBoundary circle = FourierBoundary::Circle(1.0);
  circle.modes.resize(16);
  for (auto _ : state) benchmark::DoNotOptimize(MakeStationarityReport(circle));
}
BENCHMARK(BM_StationarityReport);

}  // namespace
}  // namespace isoinertia

BENCHMARK_MAIN();
