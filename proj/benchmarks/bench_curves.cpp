/*
 * Copyright 2026 The prspace Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "prspace/prspace.hpp"

namespace {

prspace::ScoredDataset make_dataset(std::int64_t n, double skew) {
  std::mt19937_64 rng(42);
  const auto unit = [&rng] {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  };
  std::vector<prspace::ScoredRecord> records;
  records.reserve(static_cast<std::size_t>(n));
  const auto positives = static_cast<std::int64_t>(skew * static_cast<double>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    const int label = i < positives ? 1 : 0;
    records.push_back({label, unit() + 0.2 * label, {}, {}});
  }
  return prspace::ScoredDataset(std::move(records));
}

void BM_PrCurveBuild(benchmark::State& state) {
  const prspace::ScoredDataset data = make_dataset(state.range(0), 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(prspace::pr_curve(data));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PrCurveBuild)->Arg(1000)->Arg(100000);

void BM_Aucpr(benchmark::State& state) {
  const prspace::PRCurve curve = prspace::pr_curve(make_dataset(state.range(0), 0.1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(prspace::aucpr(curve));
  }
}
BENCHMARK(BM_Aucpr)->Arg(1000)->Arg(100000);

void BM_AveragePrecision(benchmark::State& state) {
  const prspace::ScoredDataset data = make_dataset(state.range(0), 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(prspace::average_precision(data));
  }
}
BENCHMARK(BM_AveragePrecision)->Arg(1000)->Arg(100000);

void BM_AucprMinRange(benchmark::State& state) {
  const prspace::RecallRange range(0.2, 0.9);
  double skew = 1e-6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prspace::aucpr_min_range(skew, range));
    skew = skew < 0.99 ? skew * 1.01 : 1e-6;
  }
}
BENCHMARK(BM_AucprMinRange);

void BM_DownsampleNegatives(benchmark::State& state) {
  const prspace::ScoredDataset data = make_dataset(100000, 0.02);
  const prspace::Ratio ratio(1, 5);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prspace::downsample_negatives(data, ratio, seed++));
  }
}
BENCHMARK(BM_DownsampleNegatives);

void BM_VerticalAverage(benchmark::State& state) {
  std::vector<prspace::PRCurve> curves;
  for (int fold = 0; fold < 10; ++fold) {
    curves.push_back(prspace::pr_curve(make_dataset(10000, 0.1)));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(prspace::vertical_average(curves, 0.01));
  }
}
BENCHMARK(BM_VerticalAverage);

}  // namespace
