// Copyright 2026 The astat Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "astat/fock.hpp"

using namespace astat;

namespace {

void BM_BuildModuleA(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_module(StatisticsFamily::a(3, p)));
  }
}
BENCHMARK(BM_BuildModuleA)->Arg(4)->Arg(16)->Arg(64);

void BM_CreationMatrix(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  auto module = build_module(StatisticsFamily::a(3, p));
  for (auto _ : state) {
    benchmark::DoNotOptimize(creation(module, 2));
  }
}
BENCHMARK(BM_CreationMatrix)->Arg(4)->Arg(16)->Arg(64);

void BM_Compose(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  auto module = build_module(StatisticsFamily::a(3, p));
  Operator plus = creation(module, 1);
  Operator minus = annihilation(module, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(plus, minus));
  }
}
BENCHMARK(BM_Compose)->Arg(4)->Arg(16)->Arg(64);

}  // namespace
