// Copyright 2026 The secz Authors
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

// Serial reference loop against the OpenMP series kernels, per strategy and
// thread count, plus the parallel batch evaluation used for figure data.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "secz/charollois.hpp"
#include "secz/series.hpp"
#include "secz/series_kernels.hpp"

namespace {

using secz::DoubleDouble;
using secz::Function;
using namespace secz::series;

const DoubleDouble kPoint{0.35355339059327373, 0.0};  // 1/sqrt(8)

void BM_Reference(benchmark::State& state) {
  const auto terms = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::sum(Function::f, kPoint, terms));
  }
  state.SetItemsProcessed(state.iterations() * terms);
}
BENCHMARK(BM_Reference)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_Evaluate(benchmark::State& state) {
  SeriesConfig cfg;
  cfg.terms = state.range(0);
  cfg.strategy = static_cast<Strategy>(state.range(1));
  cfg.threads = static_cast<int>(state.range(2));
  state.SetLabel(std::string(to_string(cfg.strategy)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(Function::f, kPoint, cfg).value);
  }
  state.SetItemsProcessed(state.iterations() * cfg.terms);
}
BENCHMARK(BM_Evaluate)
    ->ArgsProduct({{1 << 20},
                   {static_cast<int>(Strategy::naive),
                    static_cast<int>(Strategy::compensated),
                    static_cast<int>(Strategy::recurrence)},
                   {1, 2, 4}})
    ->ArgNames({"terms", "strategy", "threads"})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_BatchEval(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<double> points;
  while (points.size() < 256) {
    const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (r > 0.0 && !nearest_singularity(Function::f, r, {})) points.push_back(r);
  }
  SeriesConfig cfg;
  cfg.terms = 10000;
  cfg.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(batch_eval(Function::f, points, cfg).size());
  }
  state.SetItemsProcessed(state.iterations() * cfg.terms *
                          static_cast<std::int64_t>(points.size()));
}
BENCHMARK(BM_BatchEval)->Arg(1)->Arg(2)->Arg(4)->ArgName("threads")->UseRealTime()->Unit(
    benchmark::kMillisecond);

void BM_CgSquared(benchmark::State& state) {
  secz::charollois::CGOptions opts;
  opts.threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(secz::charollois::cg_eval(state.range(0), true, opts));
  }
}
BENCHMARK(BM_CgSquared)
    ->ArgsProduct({{8, 16}, {1, 4}})
    ->ArgNames({"p", "threads"})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
