// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nullrig/tensor.hpp"

namespace nullrig {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

using Box = std::vector<Interval>;

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t hash_name(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Deterministic across platforms: draws raw 64-bit words from mt19937_64
// and maps them to doubles directly instead of going through the
// implementation-defined std::uniform_real_distribution.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  VectorD point(const Box& box) {
    VectorD u;
    u.reserve(box.size());
    for (const Interval& iv : box) u.push_back(uniform(iv.lo, iv.hi));
    return u;
  }

  VectorD direction(std::size_t n) {
    VectorD d(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i] = uniform(-1.0, 1.0);
    return d;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace nullrig
