// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "nullrig/tensor.hpp"

namespace nullrig {

struct FinDiffConfig {
  double step = 1e-5;
  double step_second = 1e-3;
  int richardson_levels = 2;
};

namespace detail {

inline VectorD shifted(const VectorD& x, const VectorD& dir, double t) {
  VectorD y(x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += t * dir[i];
  return y;
}

template <class Stencil>
double richardson(Stencil&& stencil, double h, int levels) {
  std::vector<double> row(static_cast<std::size_t>(levels) + 1);
  for (int k = 0; k <= levels; ++k)
    row[static_cast<std::size_t>(k)] = stencil(h / static_cast<double>(1 << k));
  double pow4 = 1.0;
  for (int j = 1; j <= levels; ++j) {
    pow4 *= 4.0;
    for (int k = 0; k <= levels - j; ++k) {
      std::size_t i = static_cast<std::size_t>(k);
      row[i] = (pow4 * row[i + 1] - row[i]) / (pow4 - 1.0);
    }
  }
  return row[0];
}

}  // namespace detail

// Central-difference directional derivative with Richardson extrapolation.
template <class F>
double fd_derivative(F&& f, const VectorD& x, const VectorD& dir,
                     const FinDiffConfig& cfg = {}) {
  auto stencil = [&](double h) {
    return (f(detail::shifted(x, dir, h)) - f(detail::shifted(x, dir, -h))) / (2.0 * h);
  };
  return detail::richardson(stencil, cfg.step, cfg.richardson_levels);
}

// Mixed second directional derivative d^2/(ds dt) f(x + s d1 + t d2) at 0.
template <class F>
double fd_second(F&& f, const VectorD& x, const VectorD& d1, const VectorD& d2,
                 const FinDiffConfig& cfg = {}) {
  auto stencil = [&](double h) {
    VectorD pp = detail::shifted(detail::shifted(x, d1, h), d2, h);
    VectorD pm = detail::shifted(detail::shifted(x, d1, h), d2, -h);
    VectorD mp = detail::shifted(detail::shifted(x, d1, -h), d2, h);
    VectorD mm = detail::shifted(detail::shifted(x, d1, -h), d2, -h);
    return (f(pp) - f(pm) - f(mp) + f(mm)) / (4.0 * h * h);
  };
  return detail::richardson(stencil, cfg.step_second, cfg.richardson_levels);
}

}  // namespace nullrig
