/*
 * Copyright 2026 The vfbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "inputs.hpp"
#include "vfbench/metrics.hpp"

namespace vfb {
namespace {

struct Triple {
  Plane a;
  Plane b;
  Plane f;
  explicit Triple(int n) : a(bench::pattern(n, n, 4)), b(bench::pattern(n, n, 5, 3.0)), f(bench::pattern(n, n, 6, 1.0)) {}
};

void BM_Ssim(benchmark::State& state) {
  const Triple t(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ssim(t.a, t.f));
}
BENCHMARK(BM_Ssim)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_MutualInformation(benchmark::State& state) {
  const Triple t(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mutual_information(t.a, t.f));
}
BENCHMARK(BM_MutualInformation)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_Vif(benchmark::State& state) {
  const Triple t(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vif(t.a, t.f));
}
BENCHMARK(BM_Vif)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_Qabf(benchmark::State& state) {
  const Triple t(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qabf(t.a, t.b, t.f));
}
BENCHMARK(BM_Qabf)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace vfb
