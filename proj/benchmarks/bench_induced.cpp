// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "nullrig/catalog.hpp"
#include "nullrig/induced.hpp"

namespace {

using namespace nullrig;

void BM_BuildInduced(benchmark::State& state, const char* id) {
  const CatalogEntry& e = catalog_entry(id);
  for (auto _ : state) {
    InducedPoint<double> ip = build_induced<double>(e.ambient, *e.immersion, e.options, e.probe);
    benchmark::DoNotOptimize(ip.gamma_tilde);
  }
}
BENCHMARK_CAPTURE(BM_BuildInduced, light_cone, "light-cone");
BENCHMARK_CAPTURE(BM_BuildInduced, r1_lightlike_surface, "r1-lightlike-surface");
BENCHMARK_CAPTURE(BM_BuildInduced, cone_x_nullline, "cone-x-nullline");

void BM_InducedCurvature(benchmark::State& state) {
  const CatalogEntry& e = catalog_entry("light-cone");
  for (auto _ : state) {
    Tensor4<double> r = induced_curvature(e.ambient, *e.immersion, e.options, e.probe);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_InducedCurvature);

void BM_RiggedCurvature(benchmark::State& state) {
  const CatalogEntry& e = catalog_entry("light-cone");
  for (auto _ : state) {
    Tensor4<double> r = rigged_curvature(e.ambient, *e.immersion, e.options, e.probe);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_RiggedCurvature);

}  // namespace
