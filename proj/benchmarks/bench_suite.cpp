// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "nullrig/catalog.hpp"
#include "nullrig/checks.hpp"

namespace {

using namespace nullrig;

void BM_RunEntrySuite(benchmark::State& state, const char* suite) {
  const CatalogEntry& e = catalog_entry("light-cone");
  RunOptions opt;
  opt.suite = suite;
  opt.samples = 4;
  for (auto _ : state) {
    EntryResult er = run_entry(e, opt);
    benchmark::DoNotOptimize(er.checks);
  }
}
BENCHMARK_CAPTURE(BM_RunEntrySuite, frames, "frames");
BENCHMARK_CAPTURE(BM_RunEntrySuite, metric, "metric");
BENCHMARK_CAPTURE(BM_RunEntrySuite, connection, "connection");
BENCHMARK_CAPTURE(BM_RunEntrySuite, curvature, "curvature");
BENCHMARK_CAPTURE(BM_RunEntrySuite, conformal, "conformal");

void BM_CatalogFrames(benchmark::State& state) {
  RunOptions opt;
  opt.suite = "frames";
  opt.samples = 2;
  for (auto _ : state) {
    std::vector<EntryResult> results = run_catalog_suite(opt);
    benchmark::DoNotOptimize(results);
  }
}
BENCHMARK(BM_CatalogFrames);

}  // namespace
