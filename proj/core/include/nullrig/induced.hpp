// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "nullrig/ambient.hpp"
#include "nullrig/frame.hpp"

namespace nullrig {

namespace detail {

template <class T>
Vector<T> value_part(const Vector<Jet<T>>& v) {
  Vector<T> out(v.size(), T(0.0));
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].v;
  return out;
}

template <class T>
Matrix<T> value_part(const Matrix<Jet<T>>& m) {
  Matrix<T> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).v;
  return out;
}

template <class T>
FramePoint<T> value_part(const FramePoint<Jet<T>>& fj) {
  FramePoint<T> fp;
  fp.n = fj.n;
  fp.k = fj.k;
  fp.r = fj.r;
  fp.sign_eps = fj.sign_eps;
  fp.cls = fj.cls;
  fp.u = value_part(fj.u);
  fp.x = value_part(fj.x);
  fp.jac = value_part(fj.jac);
  fp.gbar = value_part(fj.gbar);
  fp.g = value_part(fj.g);
  fp.radical_chart = value_part(fj.radical_chart);
  fp.radical_amb = value_part(fj.radical_amb);
  fp.screen_chart = value_part(fj.screen_chart);
  fp.screen_amb = value_part(fj.screen_amb);
  fp.screen_sign = fj.screen_sign;
  fp.st_amb = value_part(fj.st_amb);
  fp.st_sign = fj.st_sign;
  fp.n_amb = value_part(fj.n_amb);
  fp.omega = value_part(fj.omega);
  fp.p_chart = value_part(fj.p_chart);
  fp.gtilde = value_part(fj.gtilde);
  return fp;
}

// Coefficients of an ambient vector in the adapted frame
//   v = sum_a screen_a e_a + sum_i radical_i xi_i
//     + sum_i lightlike_i N_i + sum_alpha st_alpha W_alpha.
template <class T>
struct FrameSplit {
  Vector<T> screen;
  Vector<T> radical;
  Vector<T> lightlike;
  Vector<T> st;
  Vector<T> tangent_chart;
};

template <class T>
FrameSplit<T> split_ambient(const FramePoint<T>& fp, const Vector<T>& v) {
  FrameSplit<T> s;
  const int n = fp.n;
  const int r = fp.r;
  const int k = fp.k;
  s.screen.assign(static_cast<std::size_t>(n - r), T(0.0));
  s.radical.assign(static_cast<std::size_t>(r), T(0.0));
  s.lightlike.assign(static_cast<std::size_t>(r), T(0.0));
  s.st.assign(static_cast<std::size_t>(k - r), T(0.0));
  for (int a = 0; a < n - r; ++a)
    s.screen[static_cast<std::size_t>(a)] =
        T(static_cast<double>(fp.screen_sign[static_cast<std::size_t>(a)])) *
        bilinear(fp.gbar, v, fp.screen_amb.row(a));
  for (int i = 0; i < r; ++i) {
    s.radical[static_cast<std::size_t>(i)] = bilinear(fp.gbar, v, fp.n_amb.row(i));
    s.lightlike[static_cast<std::size_t>(i)] = bilinear(fp.gbar, v, fp.radical_amb.row(i));
  }
  for (int a = 0; a < k - r; ++a)
    s.st[static_cast<std::size_t>(a)] =
        T(static_cast<double>(fp.st_sign[static_cast<std::size_t>(a)])) *
        bilinear(fp.gbar, v, fp.st_amb.row(a));
  s.tangent_chart.assign(static_cast<std::size_t>(n), T(0.0));
  for (int a = 0; a < n - r; ++a)
    for (int j = 0; j < n; ++j)
      s.tangent_chart[static_cast<std::size_t>(j)] +=
          s.screen[static_cast<std::size_t>(a)] * fp.screen_chart(a, j);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j)
      s.tangent_chart[static_cast<std::size_t>(j)] +=
          s.radical[static_cast<std::size_t>(i)] * fp.radical_chart(i, j);
  return s;
}

}  // namespace detail

// Pointwise decomposition data for the ambient connection restricted to
// the submanifold, in the adapted frame.  All derivative-indexed slots use
// chart coordinate directions; `i, j` run over radical indices, `alpha,
// beta` over screen-transversal indices, `a, b, c` over chart indices.
template <class T>
struct InducedPoint {
  FramePoint<T> frame;

  Tensor3<T> gammabar;  // ambient Christoffels at the image point
  Tensor3<T> sff;       // sff(c, a, b): ambient components of D_a d_b(phi)
  Tensor3<T> gamma;     // induced connection on the chart, gamma(c, a, b)
  Tensor3<T> hl;        // hl(i, a, b): lightlike second fundamental form
  Tensor3<T> hs;        // hs(alpha, a, b): screen-transversal form

  std::vector<Matrix<T>> an;     // an[i](c, a): A_{N_i} d_a in chart components
  Tensor3<T> tau;                // tau(i, j, a) = gbar(D_a N_i, xi_j)
  Tensor3<T> dsn;                // dsn(i, alpha, a): W_alpha part of D_a N_i

  std::vector<Matrix<T>> astar;  // astar[i](c, a): A*_i d_a, screen-valued
  Tensor3<T> nstar;              // nstar(i, j, a): xi_j part of D_a xi_i
  Tensor3<T> hlxi;               // hlxi(i, j, a) = gbar(D_a xi_i, xi_j)
  Tensor3<T> hsxi;               // hsxi(i, alpha, a): W_alpha part of D_a xi_i

  std::vector<Matrix<T>> aw;     // aw[alpha](c, a): A_{W_alpha} d_a, chart
  Tensor3<T> dlw;                // dlw(alpha, i, a): N_i part of D_a W_alpha
  Tensor3<T> nabla_s;            // nabla_s(alpha, beta, a): W_beta part

  Tensor3<T> cscreen;            // cscreen(i, a, b) = omega_i(nabla_a P d_b)
  Tensor3<T> dg;                 // dg(a, b, c) = d_a g(b, c)
  Tensor3<T> dgtilde;            // dgtilde(a, b, c) = d_a gtilde(b, c)
  Tensor3<T> domega;             // domega(i, a, b) = (d omega_i)(d_a, d_b)
  Tensor3<T> gamma_tilde;        // Levi-Civita connection of the rigged metric
};

template <class T>
InducedPoint<T> build_induced(const Ambient& amb, const ImmersionField& f,
                              const FrameOptions& opt, const Vector<T>& u) {
  using JT = Jet<T>;
  InducedPoint<T> ip;
  Vector<JT> uj = lift_over<T>(u, 1);
  FramePoint<JT> fj = build_frame<JT>(amb, f, opt, uj);
  ip.frame = detail::value_part(fj);
  const FramePoint<T>& fp = ip.frame;
  const int n = fp.n;
  const int r = fp.r;
  const int k = fp.k;
  const int m = n + k;

  ip.gammabar = christoffel<T>(*amb.metric, fp.x);

  // Ambient covariant derivative of a frame field given as jet-valued
  // ambient rows: out(a, c) = (D_{d_a} F)^c.
  auto cov_rows = [&](const Matrix<JT>& rows, int i) {
    Matrix<T> out(n, m);
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < m; ++c) {
        T acc = rows(i, c).gat(a);
        for (int d = 0; d < m; ++d)
          for (int e = 0; e < m; ++e)
            acc += ip.gammabar(c, d, e) * fp.jac(d, a) * rows(i, e).v;
        out(a, c) = acc;
      }
    return out;
  };

  ip.sff = Tensor3<T>(m, n, n);
  ip.gamma = Tensor3<T>(n, n, n);
  ip.hl = Tensor3<T>(r, n, n);
  ip.hs = Tensor3<T>(k - r, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Vector<T> v(static_cast<std::size_t>(m), T(0.0));
      for (int c = 0; c < m; ++c) {
        T acc = fj.jac(c, b).gat(a);
        for (int d = 0; d < m; ++d)
          for (int e = 0; e < m; ++e)
            acc += ip.gammabar(c, d, e) * fp.jac(d, a) * fp.jac(e, b);
        v[static_cast<std::size_t>(c)] = acc;
      }
      detail::FrameSplit<T> s = detail::split_ambient(fp, v);
      for (int c = 0; c < m; ++c) {
        ip.sff(c, a, b) = v[static_cast<std::size_t>(c)];
        ip.sff(c, b, a) = v[static_cast<std::size_t>(c)];
      }
      for (int c = 0; c < n; ++c) {
        ip.gamma(c, a, b) = s.tangent_chart[static_cast<std::size_t>(c)];
        ip.gamma(c, b, a) = s.tangent_chart[static_cast<std::size_t>(c)];
      }
      for (int i = 0; i < r; ++i) {
        ip.hl(i, a, b) = s.lightlike[static_cast<std::size_t>(i)];
        ip.hl(i, b, a) = s.lightlike[static_cast<std::size_t>(i)];
      }
      for (int al = 0; al < k - r; ++al) {
        ip.hs(al, a, b) = s.st[static_cast<std::size_t>(al)];
        ip.hs(al, b, a) = s.st[static_cast<std::size_t>(al)];
      }
    }

  ip.an.assign(static_cast<std::size_t>(r), Matrix<T>(n, n));
  ip.tau = Tensor3<T>(r, r, n);
  ip.dsn = Tensor3<T>(r, k - r, n);
  for (int i = 0; i < r; ++i) {
    Matrix<T> dn = cov_rows(fj.n_amb, i);
    for (int a = 0; a < n; ++a) {
      detail::FrameSplit<T> s = detail::split_ambient(fp, dn.row(a));
      for (int c = 0; c < n; ++c)
        ip.an[static_cast<std::size_t>(i)](c, a) = -s.tangent_chart[static_cast<std::size_t>(c)];
      for (int j = 0; j < r; ++j) ip.tau(i, j, a) = s.lightlike[static_cast<std::size_t>(j)];
      for (int al = 0; al < k - r; ++al) ip.dsn(i, al, a) = s.st[static_cast<std::size_t>(al)];
    }
  }

  ip.astar.assign(static_cast<std::size_t>(r), Matrix<T>(n, n));
  ip.nstar = Tensor3<T>(r, r, n);
  ip.hlxi = Tensor3<T>(r, r, n);
  ip.hsxi = Tensor3<T>(r, k - r, n);
  for (int i = 0; i < r; ++i) {
    Matrix<T> dxi = cov_rows(fj.radical_amb, i);
    for (int a = 0; a < n; ++a) {
      detail::FrameSplit<T> s = detail::split_ambient(fp, dxi.row(a));
      for (int c = 0; c < n; ++c) {
        T acc(0.0);
        for (int b = 0; b < n - r; ++b)
          acc += s.screen[static_cast<std::size_t>(b)] * fp.screen_chart(b, c);
        ip.astar[static_cast<std::size_t>(i)](c, a) = -acc;
      }
      for (int j = 0; j < r; ++j) {
        ip.nstar(i, j, a) = s.radical[static_cast<std::size_t>(j)];
        ip.hlxi(i, j, a) = s.lightlike[static_cast<std::size_t>(j)];
      }
      for (int al = 0; al < k - r; ++al) ip.hsxi(i, al, a) = s.st[static_cast<std::size_t>(al)];
    }
  }

  ip.aw.assign(static_cast<std::size_t>(k - r), Matrix<T>(n, n));
  ip.dlw = Tensor3<T>(k - r, r, n);
  ip.nabla_s = Tensor3<T>(k - r, k - r, n);
  for (int al = 0; al < k - r; ++al) {
    Matrix<T> dw = cov_rows(fj.st_amb, al);
    for (int a = 0; a < n; ++a) {
      detail::FrameSplit<T> s = detail::split_ambient(fp, dw.row(a));
      for (int c = 0; c < n; ++c)
        ip.aw[static_cast<std::size_t>(al)](c, a) = -s.tangent_chart[static_cast<std::size_t>(c)];
      for (int i = 0; i < r; ++i) ip.dlw(al, i, a) = s.lightlike[static_cast<std::size_t>(i)];
      for (int be = 0; be < k - r; ++be) ip.nabla_s(al, be, a) = s.st[static_cast<std::size_t>(be)];
    }
  }

  ip.dg = Tensor3<T>(n, n, n);
  ip.dgtilde = Tensor3<T>(n, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        ip.dg(a, b, c) = fj.g(b, c).gat(a);
        ip.dgtilde(a, b, c) = fj.gtilde(b, c).gat(a);
      }

  ip.domega = Tensor3<T>(r, n, n);
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        ip.domega(i, a, b) = fj.omega(i, b).gat(a) - fj.omega(i, a).gat(b);

  ip.cscreen = Tensor3<T>(r, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vector<T> cov(static_cast<std::size_t>(n), T(0.0));
      for (int c = 0; c < n; ++c) {
        T acc = fj.p_chart(c, b).gat(a);
        for (int e = 0; e < n; ++e) acc += ip.gamma(c, a, e) * fp.p_chart(e, b);
        cov[static_cast<std::size_t>(c)] = acc;
      }
      for (int i = 0; i < r; ++i) {
        T acc(0.0);
        for (int c = 0; c < n; ++c) acc += fp.omega(i, c) * cov[static_cast<std::size_t>(c)];
        ip.cscreen(i, a, b) = acc;
      }
    }

  Matrix<T> gtinv = inverse(fp.gtilde);
  ip.gamma_tilde = Tensor3<T>(n, n, n);
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        T acc(0.0);
        for (int d = 0; d < n; ++d)
          acc += gtinv(c, d) * (ip.dgtilde(a, b, d) + ip.dgtilde(b, a, d) - ip.dgtilde(d, a, b));
        acc *= T(0.5);
        ip.gamma_tilde(c, a, b) = acc;
        ip.gamma_tilde(c, b, a) = acc;
      }

  return ip;
}

// Curvature of the induced connection, rup layout on the chart.
inline Tensor4<double> induced_curvature(const Ambient& amb, const ImmersionField& f,
                                         const FrameOptions& opt, const VectorD& u) {
  auto gamma_field = [&]<class S>(const Vector<S>& uu) {
    return build_induced<S>(amb, f, opt, uu).gamma;
  };
  return curvature_of_connection(gamma_field, u);
}

// Curvature of the Levi-Civita connection of the rigged metric.
inline Tensor4<double> rigged_curvature(const Ambient& amb, const ImmersionField& f,
                                        const FrameOptions& opt, const VectorD& u) {
  auto gamma_field = [&]<class S>(const Vector<S>& uu) {
    return build_induced<S>(amb, f, opt, uu).gamma_tilde;
  };
  return curvature_of_connection(gamma_field, u);
}

// Ambient curvature with all four slots pulled back to chart directions,
// lowered layout: out(a, b, c, d) = gbar(Rbar(d_a, d_b) d_c, d_d).
inline Tensor4<double> pullback_ambient_curvature(const Ambient& amb,
                                                  const FramePoint<double>& fp) {
  Tensor4<double> r4 = lower_curvature(ambient_curvature(*amb.metric, fp.x), fp.gbar);
  const int n = fp.n;
  const int m = fp.jac.rows();
  Tensor4<double> out(n, n, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          double acc = 0.0;
          for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q)
              for (int s = 0; s < m; ++s)
                for (int t = 0; t < m; ++t)
                  acc += r4(p, q, s, t) * fp.jac(p, a) * fp.jac(q, b) * fp.jac(s, c) *
                         fp.jac(t, d);
          out(a, b, c, d) = acc;
        }
  return out;
}

// R(x, y) z contracted against an up-form curvature tensor.
template <class T>
Vector<T> apply_curvature(const Tensor4<T>& rup, const Vector<T>& x, const Vector<T>& y,
                          const Vector<T>& z) {
  const int n = rup.dim0();
  Vector<T> out(static_cast<std::size_t>(n), T(0.0));
  for (int d = 0; d < n; ++d) {
    T acc(0.0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          acc += rup(a, b, c, d) * x[static_cast<std::size_t>(a)] * y[static_cast<std::size_t>(b)] *
                 z[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(d)] = acc;
  }
  return out;
}

}  // namespace nullrig
