// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "nullrig/errors.hpp"

namespace nullrig {

// Forward-mode scalar carrying an optional gradient and symmetric Hessian
// with respect to a shared tuple of independent variables.  A jet with an
// empty gradient is a broadcastable constant.  The component type S may
// itself be a Jet, which nests differentiation passes; each pass sees the
// inner values as opaque scalars.
template <class S>
struct Jet;

inline double scalar_value(double x) { return x; }

template <class S>
double scalar_value(const Jet<S>& x);

template <class S>
Jet<S> apply_unary(const Jet<S>& x, const S& f0, const S& f1);

template <class S>
Jet<S> apply_unary(const Jet<S>& x, const S& f0, const S& f1, const S& f2);

template <class S>
struct Jet {
  S v{};
  std::vector<S> g;
  std::vector<S> h;

  Jet() : v(0.0) {}

  Jet(double x) : v(x) {}  // NOLINT(google-explicit-constructor)

  template <class U = S, std::enable_if_t<!std::is_same_v<U, double>, int> = 0>
  Jet(S value) : v(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  int dim() const { return static_cast<int>(g.size()); }
  bool is_const() const { return g.empty(); }
  bool has_hess() const { return !h.empty(); }

  S gat(int i) const { return g.empty() ? S(0.0) : g[static_cast<std::size_t>(i)]; }
  S hat(int i, int j, int dim) const {
    return h.empty() ? S(0.0) : h[static_cast<std::size_t>(i * dim + j)];
  }

  static void shape(const Jet& a, const Jet& b, int& dim, bool& hess) {
    if (a.is_const() && b.is_const()) {
      dim = 0;
      hess = false;
      return;
    }
    if (a.is_const()) {
      dim = b.dim();
      hess = b.has_hess();
      return;
    }
    if (b.is_const()) {
      dim = a.dim();
      hess = a.has_hess();
      return;
    }
    if (a.dim() != b.dim()) throw EvaluationError("jet dimension mismatch");
    if (a.has_hess() != b.has_hess()) throw EvaluationError("jet order mismatch");
    dim = a.dim();
    hess = a.has_hess();
  }

  Jet& operator+=(const Jet& o) { return *this = *this + o; }
  Jet& operator-=(const Jet& o) { return *this = *this - o; }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  Jet& operator/=(const Jet& o) { return *this = *this / o; }

  friend Jet operator+(const Jet& a) { return a; }

  friend Jet operator-(const Jet& a) {
    Jet r;
    r.v = S(-1.0) * a.v;
    r.g.reserve(a.g.size());
    for (const S& x : a.g) r.g.push_back(S(-1.0) * x);
    r.h.reserve(a.h.size());
    for (const S& x : a.h) r.h.push_back(S(-1.0) * x);
    return r;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    int dim = 0;
    bool hess = false;
    shape(a, b, dim, hess);
    Jet r;
    r.v = a.v + b.v;
    r.g.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) r.g.push_back(a.gat(i) + b.gat(i));
    if (hess) {
      r.h.reserve(static_cast<std::size_t>(dim * dim));
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) r.h.push_back(a.hat(i, j, dim) + b.hat(i, j, dim));
    }
    return r;
  }

  friend Jet operator-(const Jet& a, const Jet& b) {
    int dim = 0;
    bool hess = false;
    shape(a, b, dim, hess);
    Jet r;
    r.v = a.v - b.v;
    r.g.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) r.g.push_back(a.gat(i) - b.gat(i));
    if (hess) {
      r.h.reserve(static_cast<std::size_t>(dim * dim));
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) r.h.push_back(a.hat(i, j, dim) - b.hat(i, j, dim));
    }
    return r;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    int dim = 0;
    bool hess = false;
    shape(a, b, dim, hess);
    Jet r;
    r.v = a.v * b.v;
    r.g.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) r.g.push_back(a.gat(i) * b.v + a.v * b.gat(i));
    if (hess) {
      r.h.reserve(static_cast<std::size_t>(dim * dim));
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          r.h.push_back(a.hat(i, j, dim) * b.v + a.gat(i) * b.gat(j) + a.gat(j) * b.gat(i) +
                        a.v * b.hat(i, j, dim));
    }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

  friend Jet reciprocal(const Jet& b) {
    S iv = S(1.0) / b.v;
    if (b.has_hess()) return apply_unary(b, iv, S(-1.0) * iv * iv, S(2.0) * iv * iv * iv);
    return apply_unary(b, iv, S(-1.0) * iv * iv);
  }

  friend Jet sin(const Jet& x) {
    using std::cos;
    using std::sin;
    S s = sin(x.v);
    S c = cos(x.v);
    if (x.has_hess()) return apply_unary(x, s, c, S(-1.0) * s);
    return apply_unary(x, s, c);
  }

  friend Jet cos(const Jet& x) {
    using std::cos;
    using std::sin;
    S s = sin(x.v);
    S c = cos(x.v);
    if (x.has_hess()) return apply_unary(x, c, S(-1.0) * s, S(-1.0) * c);
    return apply_unary(x, c, S(-1.0) * s);
  }

  friend Jet exp(const Jet& x) {
    using std::exp;
    S e = exp(x.v);
    if (x.has_hess()) return apply_unary(x, e, e, e);
    return apply_unary(x, e, e);
  }

  friend Jet log(const Jet& x) {
    using std::log;
    S l = log(x.v);
    S iv = S(1.0) / x.v;
    if (x.has_hess()) return apply_unary(x, l, iv, S(-1.0) * iv * iv);
    return apply_unary(x, l, iv);
  }

  friend Jet sqrt(const Jet& x) {
    using std::sqrt;
    S s = sqrt(x.v);
    S f1 = S(0.5) / s;
    if (x.has_hess()) return apply_unary(x, s, f1, S(-0.25) / (x.v * s));
    return apply_unary(x, s, f1);
  }

  friend Jet sinh(const Jet& x) {
    using std::cosh;
    using std::sinh;
    S s = sinh(x.v);
    S c = cosh(x.v);
    if (x.has_hess()) return apply_unary(x, s, c, s);
    return apply_unary(x, s, c);
  }

  friend Jet cosh(const Jet& x) {
    using std::cosh;
    using std::sinh;
    S s = sinh(x.v);
    S c = cosh(x.v);
    if (x.has_hess()) return apply_unary(x, c, s, c);
    return apply_unary(x, c, s);
  }

  friend Jet pow(const Jet& x, double p) {
    using std::pow;
    S f0 = pow(x.v, p);
    S f1 = S(p) * pow(x.v, p - 1.0);
    if (x.has_hess()) return apply_unary(x, f0, f1, S(p * (p - 1.0)) * pow(x.v, p - 2.0));
    return apply_unary(x, f0, f1);
  }

  friend Jet abs(const Jet& x) {
    if (scalar_value(x) < 0.0) return -x;
    return x;
  }
};

template <class S>
double scalar_value(const Jet<S>& x) {
  return scalar_value(x.v);
}

// Chain rule for f applied to x, given f, f', and optionally f'' at x.v.
template <class S>
Jet<S> apply_unary(const Jet<S>& x, const S& f0, const S& f1) {
  Jet<S> r;
  r.v = f0;
  r.g.reserve(x.g.size());
  for (const S& gi : x.g) r.g.push_back(f1 * gi);
  return r;
}

template <class S>
Jet<S> apply_unary(const Jet<S>& x, const S& f0, const S& f1, const S& f2) {
  Jet<S> r = apply_unary(x, f0, f1);
  const int n = x.dim();
  r.h.reserve(x.h.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r.h.push_back(f1 * x.hat(i, j, n) + f2 * x.gat(i) * x.gat(j));
  return r;
}

// Seeds each coordinate of u as an independent variable of a new
// differentiation pass layered on top of whatever T already carries.
template <class T>
std::vector<Jet<T>> lift_over(const std::vector<T>& u, int order) {
  const int n = static_cast<int>(u.size());
  std::vector<Jet<T>> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Jet<T>& ji = out[static_cast<std::size_t>(i)];
    ji.v = u[static_cast<std::size_t>(i)];
    ji.g.assign(static_cast<std::size_t>(n), T(0.0));
    ji.g[static_cast<std::size_t>(i)] = T(1.0);
    if (order >= 2) ji.h.assign(static_cast<std::size_t>(n * n), T(0.0));
  }
  return out;
}

inline std::vector<Jet<double>> lift(const std::vector<double>& u, int order) {
  return lift_over<double>(u, order);
}

using J1 = Jet<double>;
using J2 = Jet<J1>;
using J3 = Jet<J2>;

}  // namespace nullrig
