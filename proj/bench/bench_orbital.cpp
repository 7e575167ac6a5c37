// Copyright 2026 The jmfl Authors.
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

// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "jmfl/global.hpp"
#include "jmfl/orbital.hpp"

namespace {

using namespace jmfl;

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_EnumerateY_r2(benchmark::State& state) {
  const Field& F = Field::of_order(5);
  TorusParam t{{Rat::var_pow(F, 3).scaled(2), Rat::constant(F, 3)}};
  Locality loc = Locality::at(Place::origin(F));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_Y(t, loc, exec_of(state)).size());
}
BENCHMARK(BM_EnumerateY_r2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumerateY_r3(benchmark::State& state) {
  const Field& F = Field::of_order(3);
  TorusParam t{{Rat::var(F), Rat::var_pow(F, 2).scaled(2), Rat::constant(F, 2)}};
  Locality loc = Locality::at(Place::origin(F));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_Y(t, loc, exec_of(state)).size());
}
BENCHMARK(BM_EnumerateY_r3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FiberTableJ(benchmark::State& state) {
  const Field& F = Field::of_order(3);
  for (auto _ : state) benchmark::DoNotOptimize(fiber_table_J(F, 3, exec_of(state)).size());
}
BENCHMARK(BM_FiberTableJ)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FiberTableI(benchmark::State& state) {
  const Field& F = Field::of_order(5);
  for (auto _ : state) benchmark::DoNotOptimize(fiber_table_I(F, 3, exec_of(state)).size());
}
BENCHMARK(BM_FiberTableI)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
