// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "nullrig/jet.hpp"

namespace {

template <class T>
T polynomial_mix(const std::vector<T>& u) {
  T acc(0.0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    acc += sin(u[i]) * exp(u[(i + 1) % u.size()] * T(0.25)) + u[i] * u[i];
  }
  return acc;
}

void BM_JetGradient(benchmark::State& state) {
  std::vector<double> x(static_cast<std::size_t>(state.range(0)), 0.37);
  for (auto _ : state) {
    auto lifted = nullrig::lift(x, 1);
    benchmark::DoNotOptimize(polynomial_mix(lifted));
  }
}
BENCHMARK(BM_JetGradient)->Arg(3)->Arg(4)->Arg(6);

void BM_JetHessian(benchmark::State& state) {
  std::vector<double> x(static_cast<std::size_t>(state.range(0)), 0.37);
  for (auto _ : state) {
    auto lifted = nullrig::lift(x, 2);
    benchmark::DoNotOptimize(polynomial_mix(lifted));
  }
}
BENCHMARK(BM_JetHessian)->Arg(3)->Arg(4)->Arg(6);

void BM_NestedThirdOrder(benchmark::State& state) {
  std::vector<double> x(static_cast<std::size_t>(state.range(0)), 0.37);
  for (auto _ : state) {
    auto inner = nullrig::lift(x, 1);
    auto outer = nullrig::lift_over<nullrig::J1>(inner, 2);
    benchmark::DoNotOptimize(polynomial_mix(outer));
  }
}
BENCHMARK(BM_NestedThirdOrder)->Arg(3)->Arg(4);

}  // namespace
