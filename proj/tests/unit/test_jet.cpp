// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#include "nullrig/jet.hpp"

#include <cmath>

#include "doctest.h"

using nullrig::J1;
using nullrig::J2;
using nullrig::Jet;
using nullrig::lift;
using nullrig::lift_over;
using nullrig::scalar_value;

namespace {

double approx_eps(double x) { return std::abs(x) * 1e-12 + 1e-12; }

}  // namespace

TEST_CASE("constants broadcast through arithmetic") {
  J1 a = 3.0;
  CHECK(a.is_const());
  J1 b = a * 2.0 + 1.0;
  CHECK(b.is_const());
  CHECK(scalar_value(b) == doctest::Approx(7.0));

  auto u = lift({2.0, 5.0}, 1);
  J1 c = u[0] * 4.0 + b;
  CHECK(c.dim() == 2);
  CHECK(scalar_value(c) == doctest::Approx(15.0));
  CHECK(c.g[0] == doctest::Approx(4.0));
  CHECK(c.g[1] == doctest::Approx(0.0));
}

TEST_CASE("first-order gradients are exact") {
  auto u = lift({1.3, -0.7}, 1);
  J1 x = u[0];
  J1 y = u[1];
  J1 f = x * x * y + sin(y);

  CHECK(scalar_value(f) ==
        doctest::Approx(1.3 * 1.3 * -0.7 + std::sin(-0.7)).epsilon(1e-14));
  CHECK(f.g[0] == doctest::Approx(2.0 * 1.3 * -0.7).epsilon(1e-14));
  CHECK(f.g[1] == doctest::Approx(1.3 * 1.3 + std::cos(-0.7)).epsilon(1e-14));
  CHECK_FALSE(f.has_hess());
}

TEST_CASE("second-order jets carry a symmetric exact Hessian") {
  auto u = lift({0.8, 0.4}, 2);
  J1 x = u[0];
  J1 y = u[1];
  J1 f = exp(x * y) + x * x * x;

  double e = std::exp(0.8 * 0.4);
  CHECK(f.h[0 * 2 + 0] == doctest::Approx(0.4 * 0.4 * e + 6.0 * 0.8).epsilon(1e-13));
  CHECK(f.h[0 * 2 + 1] == doctest::Approx(e + 0.8 * 0.4 * e).epsilon(1e-13));
  CHECK(f.h[1 * 2 + 0] == doctest::Approx(f.h[0 * 2 + 1]).epsilon(approx_eps(f.h[0])));
  CHECK(f.h[1 * 2 + 1] == doctest::Approx(0.8 * 0.8 * e).epsilon(1e-13));
}

TEST_CASE("elementary functions follow the chain rule") {
  auto u = lift({0.9}, 2);
  J1 x = u[0];

  J1 s = sqrt(x);
  CHECK(s.g[0] == doctest::Approx(0.5 / std::sqrt(0.9)).epsilon(1e-13));
  CHECK(s.h[0] == doctest::Approx(-0.25 * std::pow(0.9, -1.5)).epsilon(1e-13));

  J1 l = log(x);
  CHECK(l.g[0] == doctest::Approx(1.0 / 0.9).epsilon(1e-13));
  CHECK(l.h[0] == doctest::Approx(-1.0 / (0.9 * 0.9)).epsilon(1e-13));

  J1 p = pow(x, 2.5);
  CHECK(p.g[0] == doctest::Approx(2.5 * std::pow(0.9, 1.5)).epsilon(1e-13));
  CHECK(p.h[0] == doctest::Approx(2.5 * 1.5 * std::pow(0.9, 0.5)).epsilon(1e-13));

  J1 sh = sinh(x);
  J1 ch = cosh(x);
  CHECK(sh.g[0] == doctest::Approx(std::cosh(0.9)).epsilon(1e-13));
  CHECK(ch.g[0] == doctest::Approx(std::sinh(0.9)).epsilon(1e-13));
  CHECK(sh.h[0] == doctest::Approx(std::sinh(0.9)).epsilon(1e-13));

  J1 q = cos(x) / x;
  double want = (-std::sin(0.9) * 0.9 - std::cos(0.9)) / (0.9 * 0.9);
  CHECK(q.g[0] == doctest::Approx(want).epsilon(1e-13));

  auto neg = lift({-1.7}, 1);
  J1 a = abs(neg[0]);
  CHECK(scalar_value(a) == doctest::Approx(1.7));
  CHECK(a.g[0] == doctest::Approx(-1.0));
}

TEST_CASE("nested jets expose third derivatives") {
  std::vector<double> at = {2.0};
  auto inner = lift(at, 1);
  auto outer = lift_over<J1>(inner, 2);
  J2 x = outer[0];
  J2 f = x * x * x;

  CHECK(scalar_value(f) == doctest::Approx(8.0));
  CHECK(scalar_value(f.g[0]) == doctest::Approx(12.0));
  CHECK(scalar_value(f.h[0]) == doctest::Approx(12.0));
  CHECK(f.h[0].g[0] == doctest::Approx(6.0));
}

TEST_CASE("nested jets expose mixed third derivatives") {
  std::vector<double> at = {1.1, 0.6};
  auto inner = lift(at, 1);
  auto outer = lift_over<J1>(inner, 2);
  J2 x = outer[0];
  J2 y = outer[1];
  J2 f = x * x * y + sin(x * y);

  auto third = [&](int i, int j, int k) {
    return f.h[static_cast<size_t>(j * 2 + k)].g[static_cast<size_t>(i)];
  };

  double xx = 1.1, yy = 0.6;
  double c = std::cos(xx * yy);
  double s = std::sin(xx * yy);
  double want_xxy = 2.0 - 2.0 * yy * s - xx * yy * yy * c;
  CHECK(third(1, 0, 0) == doctest::Approx(want_xxy).epsilon(1e-12));
  CHECK(third(0, 0, 1) == doctest::Approx(want_xxy).epsilon(1e-12));
  CHECK(third(0, 1, 0) == doctest::Approx(want_xxy).epsilon(1e-12));

  double want_xxx = -yy * yy * yy * c;
  CHECK(third(0, 0, 0) == doctest::Approx(want_xxx).epsilon(1e-12));
}

TEST_CASE("mismatched jet tuples are rejected") {
  auto a = lift({1.0, 2.0}, 1);
  auto b = lift({1.0, 2.0, 3.0}, 1);
  CHECK_THROWS_AS((void)(a[0] + b[0]), nullrig::EvaluationError);

  auto c = lift({1.0, 2.0}, 2);
  CHECK_THROWS_AS((void)(a[0] * c[0]), nullrig::EvaluationError);
}
