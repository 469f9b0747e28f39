// Copyright 2026 The astat Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "astat/limits.hpp"
#include "astat/oscillator.hpp"
#include "astat/verify.hpp"

using namespace astat;

namespace {

void BM_VerifyARelations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int p = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_A_relations(n, p));
  }
}
BENCHMARK(BM_VerifyARelations)->Args({2, 2})->Args({3, 4})->Args({4, 6});

void BM_VerifyGlRelations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_gl_relations(n, 3));
  }
}
BENCHMARK(BM_VerifyGlRelations)->Arg(2)->Arg(3);

void BM_CheckCompatibility(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_compatibility({p}));
  }
}
BENCHMARK(BM_CheckCompatibility)->Arg(1)->Arg(6);

void BM_BosonDeviation(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  LimitProbe probe{2, {p}, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(boson_limit_deviation(probe));
  }
}
BENCHMARK(BM_BosonDeviation)->Arg(8)->Arg(32)->Arg(64);

}  // namespace
