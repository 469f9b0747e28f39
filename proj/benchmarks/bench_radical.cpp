// Copyright 2026 The astat Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "astat/radical.hpp"

using namespace astat;

namespace {

std::vector<RadicalScalar> sample_scalars(std::size_t count) {
  static const std::int64_t radicands[] = {1, 2, 3, 5, 6, 7, 10, 15};
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> pick(0, 7);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<RadicalScalar> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    RadicalScalar s;
    for (int t = 0; t < 3; ++t) {
      s += RadicalScalar::term(radicands[pick(rng)],
                               {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
    }
    out.push_back(std::move(s));
  }
  return out;
}

void BM_RadicalMul(benchmark::State& state) {
  auto scalars = sample_scalars(64);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scalars[k % 64] * scalars[(k + 7) % 64]);
    ++k;
  }
}
BENCHMARK(BM_RadicalMul);

void BM_RadicalInverse(benchmark::State& state) {
  auto scalars = sample_scalars(64);
  std::size_t k = 0;
  for (auto _ : state) {
    const RadicalScalar& s = scalars[k % 64];
    if (!s.is_zero()) benchmark::DoNotOptimize(s.inverse());
    ++k;
  }
}
BENCHMARK(BM_RadicalInverse);

}  // namespace
