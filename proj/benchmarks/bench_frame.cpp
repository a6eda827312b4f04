// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "nullrig/catalog.hpp"
#include "nullrig/frame.hpp"

namespace {

using namespace nullrig;

void BM_BuildFrame(benchmark::State& state, const char* id) {
  const CatalogEntry& e = catalog_entry(id);
  for (auto _ : state) {
    FramePoint<double> fp = build_frame<double>(e.ambient, *e.immersion, e.options, e.probe);
    benchmark::DoNotOptimize(fp.gtilde);
  }
}
BENCHMARK_CAPTURE(BM_BuildFrame, light_cone, "light-cone");
BENCHMARK_CAPTURE(BM_BuildFrame, flat_coisotropic_r2, "flat-coisotropic-r2");
BENCHMARK_CAPTURE(BM_BuildFrame, cone_x_sphere, "cone-x-sphere");

void BM_BuildFrameGradient(benchmark::State& state) {
  const CatalogEntry& e = catalog_entry("light-cone");
  for (auto _ : state) {
    auto u = lift(e.probe, 1);
    FramePoint<J1> fp = build_frame<J1>(e.ambient, *e.immersion, e.options, u);
    benchmark::DoNotOptimize(fp.gtilde);
  }
}
BENCHMARK(BM_BuildFrameGradient);

}  // namespace
