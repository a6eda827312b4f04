// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nullrig/errors.hpp"
#include "nullrig/fields.hpp"
#include "nullrig/tensor.hpp"

namespace nullrig {

// Index layout conventions used across the engine:
//   christoffel-type tensors:  gamma(c, a, b) = Gamma^c_{ab}
//   curvature (up form):       rup(a, b, c, d) = component along e_d of R(e_a, e_b) e_c
//   curvature (lowered):       r4(a, b, c, d) = <R(e_a, e_b) e_c, e_d>
// with R(X,Y)Z = D_X D_Y Z - D_Y D_X Z - D_[X,Y] Z.

class ConstantMetric : public MetricFieldBase<ConstantMetric> {
 public:
  explicit ConstantMetric(MatrixD g) : g_(std::move(g)) {}

  static ConstantMetric diagonal(const VectorD& entries) {
    MatrixD g(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
    for (int i = 0; i < g.rows(); ++i) g(i, i) = entries[static_cast<std::size_t>(i)];
    return ConstantMetric(std::move(g));
  }

  int dim() const override { return g_.rows(); }

  std::string describe() const override {
    std::ostringstream os;
    os << "constant metric, dim " << g_.rows();
    return os.str();
  }

  const MatrixD& matrix() const { return g_; }

  template <class T>
  Matrix<T> eval_t(const Vector<T>& x) const {
    if (static_cast<int>(x.size()) != g_.rows()) throw EvaluationError("metric point dimension mismatch");
    Matrix<T> out(g_.rows(), g_.cols());
    for (int i = 0; i < g_.rows(); ++i)
      for (int j = 0; j < g_.cols(); ++j) out(i, j) = T(g_(i, j));
    return out;
  }

 private:
  MatrixD g_;
};

enum class WarpKind { Identity, Sin, Sinh, Cosh, Exp };

inline std::string warp_name(WarpKind k) {
  switch (k) {
    case WarpKind::Identity: return "id";
    case WarpKind::Sin: return "sin";
    case WarpKind::Sinh: return "sinh";
    case WarpKind::Cosh: return "cosh";
    case WarpKind::Exp: return "exp";
  }
  return "?";
}

template <class T>
T warp_eval(WarpKind k, const T& x) {
  using std::cosh;
  using std::exp;
  using std::sin;
  using std::sinh;
  switch (k) {
    case WarpKind::Identity: return x;
    case WarpKind::Sin: return sin(x);
    case WarpKind::Sinh: return sinh(x);
    case WarpKind::Cosh: return cosh(x);
    case WarpKind::Exp: return exp(x);
  }
  throw EvaluationError("unknown warp kind");
}

struct Warp {
  std::vector<int> coords;
  int depends_on = 0;
  WarpKind kind = WarpKind::Identity;
};

// Diagonal constant-coefficient metric whose listed coordinate blocks are
// scaled by w(x_c)^2; covers polar forms and product-with-sphere factors.
class BlockWarpedMetric : public MetricFieldBase<BlockWarpedMetric> {
 public:
  BlockWarpedMetric(VectorD diag, std::vector<Warp> warps)
      : diag_(std::move(diag)), warps_(std::move(warps)) {}

  int dim() const override { return static_cast<int>(diag_.size()); }

  std::string describe() const override {
    std::ostringstream os;
    os << "warped diagonal metric, dim " << diag_.size();
    for (const Warp& w : warps_) {
      os << "; " << warp_name(w.kind) << "(x" << w.depends_on << ")^2 on {";
      for (std::size_t i = 0; i < w.coords.size(); ++i) os << (i ? "," : "") << w.coords[i];
      os << "}";
    }
    return os.str();
  }

  const VectorD& diagonal() const { return diag_; }
  const std::vector<Warp>& warps() const { return warps_; }

  template <class T>
  Matrix<T> eval_t(const Vector<T>& x) const {
    const int d = dim();
    if (static_cast<int>(x.size()) != d) throw EvaluationError("metric point dimension mismatch");
    Matrix<T> out(d, d);
    for (int i = 0; i < d; ++i) out(i, i) = T(diag_[static_cast<std::size_t>(i)]);
    for (const Warp& w : warps_) {
      T f = warp_eval<T>(w.kind, x[static_cast<std::size_t>(w.depends_on)]);
      T f2 = f * f;
      for (int c : w.coords) out(c, c) *= f2;
    }
    return out;
  }

 private:
  VectorD diag_;
  std::vector<Warp> warps_;
};

struct Ambient {
  int dim = 0;
  int index = 0;
  MetricPtr metric;
};

// Checks nondegeneracy and the constant-signature claim at one point.
inline void validate_ambient_at(const Ambient& amb, const VectorD& x) {
  MatrixD g = amb.metric->eval(x);
  for (int i = 0; i < g.rows(); ++i)
    for (int j = i + 1; j < g.cols(); ++j)
      if (std::abs(g(i, j) - g(j, i)) > 1e-12) throw DegeneracyError("ambient metric not symmetric");
  SignatureCounts c = signature_counts(g);
  if (c.zero != 0) throw DegeneracyError("ambient metric degenerate at sampled point");
  if (c.negative != amb.index)
    throw DegeneracyError("ambient metric index mismatch at sampled point");
}

template <class T>
Tensor3<T> christoffel(const MetricField& m, const Vector<T>& x) {
  const int d = m.dim();
  Matrix<Jet<T>> gj = m.eval(lift_over<T>(x, 1));
  Matrix<T> g0(d, d);
  Tensor3<T> dg(d, d, d);
  for (int b = 0; b < d; ++b)
    for (int c = 0; c < d; ++c) {
      g0(b, c) = gj(b, c).v;
      for (int a = 0; a < d; ++a) dg(a, b, c) = gj(b, c).gat(a);
    }
  Matrix<T> ginv;
  try {
    ginv = inverse(g0);
  } catch (const DegeneracyError&) {
    throw DegeneracyError("singular ambient metric in christoffel");
  }
  Tensor3<T> gamma(d, d, d);
  for (int c = 0; c < d; ++c)
    for (int a = 0; a < d; ++a)
      for (int b = a; b < d; ++b) {
        T acc(0.0);
        for (int e = 0; e < d; ++e)
          acc += ginv(c, e) * (dg(a, b, e) + dg(b, a, e) - dg(e, a, b));
        acc *= T(0.5);
        gamma(c, a, b) = acc;
        gamma(c, b, a) = acc;
      }
  return gamma;
}

// Curvature of any connection given as a Christoffel-symbol field on a
// chart; `gamma_field` must be callable on derivative-carrying points.
// Used for the ambient connection, the induced connection, and the
// Levi-Civita connection of the rigged metric.
template <class F>
Tensor4<double> curvature_of_connection(F&& gamma_field, const VectorD& u) {
  Tensor3<J1> gj = gamma_field(lift(u, 1));
  const int n = gj.dim0();
  Tensor3<double> gam(n, n, n);
  Tensor4<double> dgam(n, n, n, n);
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        gam(c, a, b) = scalar_value(gj(c, a, b));
        for (int e = 0; e < n; ++e)
          dgam(e, c, a, b) = gj(c, a, b).is_const() ? 0.0 : gj(c, a, b).g[static_cast<std::size_t>(e)];
      }
  Tensor4<double> rup(n, n, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          double acc = dgam(a, d, b, c) - dgam(b, d, a, c);
          for (int e = 0; e < n; ++e)
            acc += gam(d, a, e) * gam(e, b, c) - gam(d, b, e) * gam(e, a, c);
          rup(a, b, c, d) = acc;
        }
  return rup;
}

inline Tensor4<double> lower_curvature(const Tensor4<double>& rup, const MatrixD& g) {
  const int n = rup.dim0();
  Tensor4<double> r4(n, n, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          double acc = 0.0;
          for (int e = 0; e < n; ++e) acc += rup(a, b, c, e) * g(e, d);
          r4(a, b, c, d) = acc;
        }
  return r4;
}

inline Tensor4<double> ambient_curvature(const MetricField& m, const VectorD& x) {
  auto gamma_field = [&]<class T>(const Vector<T>& p) { return christoffel<T>(m, p); };
  return curvature_of_connection(gamma_field, x);
}

// Covariant derivative along the image of an immersion of a vector field
// given in ambient components as a function of the chart point:
// (D_X V)^c = X(V^c) + Gamma^c_{ab} (dphi X)^a V^b.
template <class T, class VF>
Vector<T> ambient_cov_deriv_along(const MetricField& m, const ImmersionField& f, VF&& vfield,
                                  const Vector<T>& u, const Vector<T>& xdir) {
  const int n = f.chart_dim();
  const int md = f.ambient_dim();
  Vector<Jet<T>> uj = lift_over<T>(u, 1);
  Vector<Jet<T>> vj = vfield(uj);
  Vector<Jet<T>> xj = f.eval(uj);
  if (static_cast<int>(vj.size()) != md) throw EvaluationError("vector field has wrong ambient dimension");

  Vector<T> x(static_cast<std::size_t>(md), T(0.0));
  Vector<T> xamb(static_cast<std::size_t>(md), T(0.0));
  for (int c = 0; c < md; ++c) {
    x[static_cast<std::size_t>(c)] = xj[static_cast<std::size_t>(c)].v;
    for (int a = 0; a < n; ++a)
      xamb[static_cast<std::size_t>(c)] +=
          xj[static_cast<std::size_t>(c)].gat(a) * xdir[static_cast<std::size_t>(a)];
  }
  Tensor3<T> gamma = christoffel<T>(m, x);

  Vector<T> out(static_cast<std::size_t>(md), T(0.0));
  for (int c = 0; c < md; ++c) {
    T acc(0.0);
    for (int a = 0; a < n; ++a)
      acc += vj[static_cast<std::size_t>(c)].gat(a) * xdir[static_cast<std::size_t>(a)];
    for (int a = 0; a < md; ++a)
      for (int b = 0; b < md; ++b)
        acc += gamma(c, a, b) * xamb[static_cast<std::size_t>(a)] * vj[static_cast<std::size_t>(b)].v;
    out[static_cast<std::size_t>(c)] = acc;
  }
  return out;
}

}  // namespace nullrig
