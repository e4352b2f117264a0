// Copyright 2026 The farmlayout Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>

#include "farmlayout/aep.hpp"
#include "farmlayout/layoutopt.hpp"
#include "farmlayout/rng.hpp"
#include "farmlayout/turbine.hpp"
#include "farmlayout/wake.hpp"
#include "farmlayout/windrose.hpp"

namespace {

using namespace farmlayout;

WindRose bench_rose() {
  WindRose rose;
  double sum = 0.0;
  for (int i = 0; i < kRoseBins; ++i) {
    const double center = 10.0 * i + 5.0;
    const double rel = (center - 335.0) * M_PI / 180.0;
    rose.bins[i].center_deg = center;
    rose.bins[i].frequency = std::exp(2.0 * std::cos(rel));
    rose.bins[i].mean_speed_ms = 9.0 + 2.0 * std::cos(rel);
    sum += rose.bins[i].frequency;
  }
  for (auto& bin : rose.bins) bin.frequency /= sum;
  return rose;
}

Layout random_layout(int n, double extent_m, std::uint64_t seed) {
  Rng rng(seed);
  Layout layout;
  for (int i = 0; i < n; ++i) {
    layout.push_back({rng.uniform(0.0, extent_m), rng.uniform(0.0, extent_m)});
  }
  return layout;
}

void BM_FarmPowerOneDirection(benchmark::State& state) {
  const TurbineSpec spec = reference_turbine_15mw();
  const TurbinePerformance perf = TurbinePerformance::from_spec(spec);
  const Layout layout = random_layout(static_cast<int>(state.range(0)), 13400.0, 3);
  WakeModelConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(farm_power_mw(layout, perf, 335.0, 9.5, cfg));
  }
}
BENCHMARK(BM_FarmPowerOneDirection)->Arg(10)->Arg(41)->Arg(125);

void BM_ComputeAep(benchmark::State& state) {
  const TurbineSpec spec = reference_turbine_15mw();
  const WindRose rose = bench_rose();
  const Layout layout = random_layout(static_cast<int>(state.range(0)), 13400.0, 3);
  WakeModelConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_aep(layout, spec, rose, cfg).aep_gwh);
  }
}
BENCHMARK(BM_ComputeAep)->Arg(41)->Arg(125);

void BM_EvaluatorSetLayout(benchmark::State& state) {
  const TurbineSpec spec = reference_turbine_15mw();
  const WindRose rose = bench_rose();
  const Layout layout = random_layout(static_cast<int>(state.range(0)), 13400.0, 3);
  WakeModelConfig cfg;
  FarmEvaluator evaluator(spec, rose, cfg);
  for (auto _ : state) {
    evaluator.set_layout(layout);
    benchmark::DoNotOptimize(evaluator.aep_gwh());
  }
}
BENCHMARK(BM_EvaluatorSetLayout)->Arg(41);

void BM_EvaluatorProbe(benchmark::State& state) {
  const TurbineSpec spec = reference_turbine_15mw();
  const WindRose rose = bench_rose();
  const Layout layout = random_layout(static_cast<int>(state.range(0)), 13400.0, 3);
  WakeModelConfig cfg;
  FarmEvaluator evaluator(spec, rose, cfg);
  evaluator.set_layout(layout);
  int index = 0;
  for (auto _ : state) {
    const Point p{layout[index].x + 1.0, layout[index].y};
    benchmark::DoNotOptimize(evaluator.aep_with_moved(index, p));
    index = (index + 1) % static_cast<int>(layout.size());
  }
}
BENCHMARK(BM_EvaluatorProbe)->Arg(41);

void BM_ObjectiveGradient(benchmark::State& state) {
  const TurbineSpec spec = reference_turbine_15mw();
  const WindRose rose = bench_rose();
  const Boundary boundary = make_rectangle(13400.0, 13380.0);
  const Layout layout = random_layout(static_cast<int>(state.range(0)), 13000.0, 3);
  WakeModelConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(objective_gradient(layout, spec, rose, cfg, boundary,
                                                480.0, 0.01, 1.0));
  }
}
BENCHMARK(BM_ObjectiveGradient)->Arg(41)->Unit(benchmark::kMillisecond);

void BM_LatinHypercube(benchmark::State& state) {
  const Boundary boundary = make_rectangle(13400.0, 13380.0);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        latin_hypercube_layout(static_cast<int>(state.range(0)), boundary, seed++));
  }
}
BENCHMARK(BM_LatinHypercube)->Arg(41);

}  // namespace

BENCHMARK_MAIN();
