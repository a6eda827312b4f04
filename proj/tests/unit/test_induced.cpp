// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#include "nullrig/induced.hpp"

#include <cmath>

#include "doctest.h"
#include "nullrig/finite_diff.hpp"
#include "nullrig/immersion.hpp"

using namespace nullrig;

namespace {

Ambient minkowski4() {
  Ambient amb;
  amb.dim = 4;
  amb.index = 1;
  amb.metric = std::make_shared<ConstantMetric>(ConstantMetric::diagonal({-1.0, 1.0, 1.0, 1.0}));
  return amb;
}

Ambient split4() {
  Ambient amb;
  amb.dim = 4;
  amb.index = 2;
  amb.metric = std::make_shared<ConstantMetric>(ConstantMetric::diagonal({-1.0, -1.0, 1.0, 1.0}));
  return amb;
}

ImmersionPtr null_hyperplane() {
  MatrixD a(4, 3);
  a(0, 0) = 1.0;
  a(1, 0) = 1.0;
  a(2, 1) = 1.0;
  a(3, 2) = 1.0;
  Box box = {{-2.0, 2.0}, {-2.0, 2.0}, {-2.0, 2.0}};
  return std::make_shared<AffineImmersion>(a, VectorD(4, 0.0), box);
}

double max_abs3(const Tensor3<double>& t) {
  double m = 0.0;
  for (int a = 0; a < t.dim0(); ++a)
    for (int b = 0; b < t.dim1(); ++b)
      for (int c = 0; c < t.dim2(); ++c) m = std::max(m, std::abs(t(a, b, c)));
  return m;
}

double max_abs4(const Tensor4<double>& t) {
  double m = 0.0;
  for (int a = 0; a < t.dim0(); ++a)
    for (int b = 0; b < t.dim1(); ++b)
      for (int c = 0; c < t.dim2(); ++c)
        for (int d = 0; d < t.dim3(); ++d) m = std::max(m, std::abs(t(a, b, c, d)));
  return m;
}

}  // namespace

TEST_CASE("affine null hyperplane has vanishing induced objects") {
  Ambient amb = minkowski4();
  ImmersionPtr f = null_hyperplane();
  FrameOptions opt;
  VectorD u = {0.3, -0.8, 1.2};
  InducedPoint<double> ip = build_induced<double>(amb, *f, opt, u);

  CHECK(max_abs3(ip.gamma) == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
  CHECK(max_abs3(ip.gamma_tilde) == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
  CHECK(max_abs3(ip.hl) == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
  CHECK(max_abs3(ip.tau) == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
  CHECK(max_abs3(ip.cscreen) == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
  CHECK(max_abs3(ip.domega) == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
  for (const MatrixD& a : ip.an)
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) CHECK(a(i, j) == doctest::Approx(0.0).epsilon(1e-12));
  for (const MatrixD& a : ip.astar)
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) CHECK(a(i, j) == doctest::Approx(0.0).epsilon(1e-12));

  CHECK(max_abs4(induced_curvature(amb, *f, opt, u)) ==
        doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
  CHECK(max_abs4(rigged_curvature(amb, *f, opt, u)) ==
        doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
}

TEST_CASE("light cone induced objects match their closed forms") {
  Ambient amb = minkowski4();
  ConeImmersion cone(3);
  FrameOptions opt;
  double s = 1.4, th = 0.9;
  VectorD u = {s, th, 2.1};
  InducedPoint<double> ip = build_induced<double>(amb, cone, opt, u);
  const double sin2 = std::sin(th) * std::sin(th);
  const double eps = 1e-11;

  CHECK(ip.gamma(1, 0, 1) == doctest::Approx(1.0 / s).epsilon(eps));
  CHECK(ip.gamma(2, 0, 2) == doctest::Approx(1.0 / s).epsilon(eps));
  CHECK(ip.gamma(0, 1, 1) == doctest::Approx(-s / 2.0).epsilon(eps));
  CHECK(ip.gamma(0, 2, 2) == doctest::Approx(-(s / 2.0) * sin2).epsilon(eps));
  CHECK(ip.gamma(1, 2, 2) == doctest::Approx(-std::sin(th) * std::cos(th)).epsilon(eps));
  CHECK(ip.gamma(2, 1, 2) == doctest::Approx(std::cos(th) / std::sin(th)).epsilon(eps));
  CHECK(ip.gamma(0, 0, 0) == doctest::Approx(0.0).epsilon(eps).scale(1.0));
  CHECK(ip.gamma(1, 0, 0) == doctest::Approx(0.0).epsilon(eps).scale(1.0));

  CHECK(ip.hl(0, 1, 1) == doctest::Approx(-s).epsilon(eps));
  CHECK(ip.hl(0, 2, 2) == doctest::Approx(-s * sin2).epsilon(eps));
  CHECK(ip.hl(0, 0, 0) == doctest::Approx(0.0).epsilon(eps).scale(1.0));
  CHECK(ip.hl(0, 0, 1) == doctest::Approx(0.0).epsilon(eps).scale(1.0));

  CHECK(ip.astar[0](1, 1) == doctest::Approx(-1.0 / s).epsilon(eps));
  CHECK(ip.astar[0](2, 2) == doctest::Approx(-1.0 / s).epsilon(eps));
  CHECK(ip.astar[0](1, 0) == doctest::Approx(0.0).epsilon(eps).scale(1.0));

  CHECK(ip.an[0](1, 1) == doctest::Approx(-0.5 / s).epsilon(eps));
  CHECK(ip.an[0](2, 2) == doctest::Approx(-0.5 / s).epsilon(eps));
  CHECK(ip.an[0](0, 0) == doctest::Approx(0.0).epsilon(eps).scale(1.0));

  CHECK(max_abs3(ip.tau) == doctest::Approx(0.0).epsilon(eps).scale(1.0));
  CHECK(max_abs3(ip.domega) == doctest::Approx(0.0).epsilon(eps).scale(1.0));
  CHECK(max_abs3(ip.hlxi) == doctest::Approx(0.0).epsilon(eps).scale(1.0));
  CHECK(max_abs3(ip.nstar) == doctest::Approx(0.0).epsilon(eps).scale(1.0));

  CHECK(ip.cscreen(0, 1, 1) == doctest::Approx(-s / 2.0).epsilon(eps));
  CHECK(ip.cscreen(0, 2, 2) == doctest::Approx(-(s / 2.0) * sin2).epsilon(eps));
  CHECK(ip.cscreen(0, 0, 1) == doctest::Approx(0.0).epsilon(eps).scale(1.0));
  CHECK(ip.cscreen(0, 1, 0) == doctest::Approx(0.0).epsilon(eps).scale(1.0));

  CHECK(ip.gamma_tilde(0, 1, 1) == doctest::Approx(-s).epsilon(eps));
  CHECK(ip.gamma_tilde(1, 0, 1) == doctest::Approx(1.0 / s).epsilon(eps));
  CHECK(ip.gamma_tilde(0, 2, 2) == doctest::Approx(-s * sin2).epsilon(eps));
  CHECK(ip.gamma_tilde(2, 0, 2) == doctest::Approx(1.0 / s).epsilon(eps));

  // The difference between the rigged and induced connections is valued
  // in the radical.
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CHECK(ip.gamma_tilde(1, a, b) - ip.gamma(1, a, b) ==
            doctest::Approx(0.0).epsilon(eps).scale(1.0));
      CHECK(ip.gamma_tilde(2, a, b) - ip.gamma(2, a, b) ==
            doctest::Approx(0.0).epsilon(eps).scale(1.0));
    }
  CHECK(ip.gamma_tilde(0, 1, 1) - ip.gamma(0, 1, 1) == doctest::Approx(-s / 2.0).epsilon(eps));
}

TEST_CASE("light cone curvature tensors take their known values") {
  Ambient amb = minkowski4();
  ConeImmersion cone(3);
  FrameOptions opt;
  double s = 1.2, th = 1.0;
  VectorD u = {s, th, 0.8};

  Tensor4<double> rind = induced_curvature(amb, cone, opt, u);
  double sin2 = std::sin(th) * std::sin(th);
  CHECK(rind(1, 2, 2, 1) == doctest::Approx(sin2 / 2.0).epsilon(1e-8));
  CHECK(rind(1, 2, 2, 0) == doctest::Approx(0.0).epsilon(1e-8).scale(1.0));
  CHECK(rind(0, 1, 1, 0) == doctest::Approx(0.0).epsilon(1e-8).scale(1.0));
  CHECK(rind(0, 1, 1, 1) == doctest::Approx(0.0).epsilon(1e-8).scale(1.0));

  CHECK(max_abs4(rigged_curvature(amb, cone, opt, u)) ==
        doctest::Approx(0.0).epsilon(1e-8).scale(1.0));

  FramePoint<double> fp = build_frame<double>(amb, cone, opt, u);
  CHECK(max_abs4(pullback_ambient_curvature(amb, fp)) ==
        doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
}

TEST_CASE("rescaling the radical turns on the transversal one-form") {
  Ambient amb = minkowski4();
  ConeImmersion cone(3);
  FrameOptions opt;
  opt.radical_scale = {AffineScalar{0.0, {1.0, 0.0, 0.0}}};
  double s = 1.6, th = 0.7;
  VectorD u = {s, th, 1.9};
  InducedPoint<double> ip = build_induced<double>(amb, cone, opt, u);

  CHECK(ip.tau(0, 0, 0) == doctest::Approx(-1.0 / s).epsilon(1e-11));
  CHECK(ip.tau(0, 0, 1) == doctest::Approx(0.0).epsilon(1e-11).scale(1.0));
  CHECK(ip.tau(0, 0, 2) == doctest::Approx(0.0).epsilon(1e-11).scale(1.0));

  CHECK(ip.an[0](1, 1) == doctest::Approx(-0.5 / (s * s)).epsilon(1e-11));
  CHECK(max_abs3(ip.domega) == doctest::Approx(0.0).epsilon(1e-11).scale(1.0));

  Tensor4<double> rt = rigged_curvature(amb, cone, opt, u);
  CHECK(rt(0, 1, 1, 0) == doctest::Approx(-s * s).epsilon(1e-7));
}

TEST_CASE("chart-dependent rescaling makes the rigging one-form non-closed") {
  Ambient amb = minkowski4();
  ConeImmersion cone(3);
  FrameOptions opt;
  opt.radical_scale = {AffineScalar{1.0, {0.0, 0.3, 0.0}}};
  double th = 0.9;
  VectorD u = {1.1, th, 2.6};
  InducedPoint<double> ip = build_induced<double>(amb, cone, opt, u);

  double psi = 1.0 + 0.3 * th;
  CHECK(ip.domega(0, 0, 1) == doctest::Approx(0.3 / (psi * psi)).epsilon(1e-10));
  CHECK(ip.domega(0, 1, 0) == doctest::Approx(-0.3 / (psi * psi)).epsilon(1e-10));
}

TEST_CASE("sinh graph carries only screen-transversal second fundamental form") {
  Ambient amb = split4();
  SinhGraphImmersion f;
  FrameOptions opt;
  double v = 0.9;
  VectorD u = {0.4, v};
  InducedPoint<double> ip = build_induced<double>(amb, f, opt, u);

  CHECK(max_abs3(ip.hl) == doctest::Approx(0.0).epsilon(1e-11).scale(1.0));
  CHECK(ip.hs(0, 1, 1) == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(ip.hs(0, 0, 0) == doctest::Approx(0.0).epsilon(1e-11).scale(1.0));
  CHECK(ip.hs(0, 0, 1) == doctest::Approx(0.0).epsilon(1e-11).scale(1.0));

  CHECK(ip.gamma(1, 1, 1) == doctest::Approx(std::cosh(v) / std::sinh(v)).epsilon(1e-10));
  CHECK(ip.gamma(0, 1, 1) == doctest::Approx(0.0).epsilon(1e-11).scale(1.0));

  double csch2 = 1.0 / (std::sinh(v) * std::sinh(v));
  CHECK(ip.aw[0](1, 1) == doctest::Approx(csch2).epsilon(1e-10));
  CHECK(ip.aw[0](0, 1) == doctest::Approx(0.0).epsilon(1e-10).scale(1.0));

  double gav = 0.0;
  for (int c = 0; c < 2; ++c) gav += ip.aw[0](c, 1) * ip.frame.g(c, 1);
  CHECK(gav == doctest::Approx(1.0).epsilon(1e-10));

  CHECK(max_abs3(ip.tau) == doctest::Approx(0.0).epsilon(1e-11).scale(1.0));
  for (const MatrixD& a : ip.an)
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j)
        CHECK(a(i, j) == doctest::Approx(0.0).epsilon(1e-11).scale(1.0));
  CHECK(max_abs3(ip.dlw) == doctest::Approx(0.0).epsilon(1e-11).scale(1.0));
  CHECK(max_abs3(ip.nabla_s) == doctest::Approx(0.0).epsilon(1e-11).scale(1.0));

  CHECK(max_abs4(induced_curvature(amb, f, opt, u)) ==
        doctest::Approx(0.0).epsilon(1e-8).scale(1.0));
  CHECK(max_abs4(rigged_curvature(amb, f, opt, u)) ==
        doctest::Approx(0.0).epsilon(1e-8).scale(1.0));
}

TEST_CASE("frame decompositions reconstruct ambient derivatives") {
  struct Case {
    Ambient amb;
    ImmersionPtr f;
    FrameOptions opt;
  };
  std::vector<Case> cases;
  cases.push_back({minkowski4(), null_hyperplane(), FrameOptions{}});
  cases.push_back({minkowski4(), std::make_shared<ConeImmersion>(3), FrameOptions{}});
  cases.push_back({split4(), std::make_shared<SinhGraphImmersion>(), FrameOptions{}});
  FrameOptions scaled;
  scaled.radical_scale = {AffineScalar{0.0, {1.0, 0.0, 0.0}}};
  cases.push_back({minkowski4(), std::make_shared<ConeImmersion>(3), scaled});

  Sampler rng(808);
  for (const Case& cs : cases) {
    Box box = cs.f->domain();
    for (int trial = 0; trial < 8; ++trial) {
      VectorD u = sample_point(box, rng);
      InducedPoint<double> ip = build_induced<double>(cs.amb, *cs.f, cs.opt, u);
      const FramePoint<double>& fp = ip.frame;
      const int n = fp.n;
      const int r = fp.r;
      const int k = fp.k;
      const int m = n + k;

      // Gauss decomposition: tangential connection part plus transversal
      // second fundamental forms rebuild the ambient derivative of the
      // coordinate frame.
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          VectorD recon(static_cast<std::size_t>(m), 0.0);
          for (int c = 0; c < n; ++c)
            recon = vadd(recon, vscale(ip.gamma(c, a, b), fp.jac.col(c)));
          for (int i = 0; i < r; ++i)
            recon = vadd(recon, vscale(ip.hl(i, a, b), fp.n_amb.row(i)));
          for (int al = 0; al < k - r; ++al)
            recon = vadd(recon, vscale(ip.hs(al, a, b), fp.st_amb.row(al)));
          VectorD direct(static_cast<std::size_t>(m), 0.0);
          for (int c = 0; c < m; ++c) direct[static_cast<std::size_t>(c)] = ip.sff(c, a, b);
          CHECK(vnorm(vsub(recon, direct)) == doctest::Approx(0.0).epsilon(1e-9).scale(1.0));
        }

      // Weingarten decomposition of the rigging fields, cross-checked
      // against an independent covariant-derivative evaluation.
      for (int i = 0; i < r; ++i) {
        for (int a = 0; a < n; ++a) {
          VectorD dir(static_cast<std::size_t>(n), 0.0);
          dir[static_cast<std::size_t>(a)] = 1.0;
          auto nfield = [&]<class S>(const Vector<S>& uu) {
            return build_frame<S>(cs.amb, *cs.f, cs.opt, uu).n_amb.row(i);
          };
          VectorD dn = ambient_cov_deriv_along(*cs.amb.metric, *cs.f, nfield, u, dir);
          VectorD recon(static_cast<std::size_t>(m), 0.0);
          for (int c = 0; c < n; ++c)
            recon = vadd(recon, vscale(-ip.an[static_cast<std::size_t>(i)](c, a), fp.jac.col(c)));
          for (int j = 0; j < r; ++j)
            recon = vadd(recon, vscale(ip.tau(i, j, a), fp.n_amb.row(j)));
          for (int al = 0; al < k - r; ++al)
            recon = vadd(recon, vscale(ip.dsn(i, al, a), fp.st_amb.row(al)));
          CHECK(vnorm(vsub(recon, dn)) == doctest::Approx(0.0).epsilon(1e-9).scale(1.0));
        }
      }

      // The rigged connection is metric for the rigged metric.
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            double cov = ip.dgtilde(a, b, c);
            for (int e = 0; e < n; ++e)
              cov -= ip.gamma_tilde(e, a, b) * fp.gtilde(e, c) +
                     ip.gamma_tilde(e, a, c) * fp.gtilde(b, e);
            CHECK(cov == doctest::Approx(0.0).epsilon(1e-9).scale(1.0));
          }

      // Both connections are torsion-free by construction.
      for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            CHECK(ip.gamma(c, a, b) - ip.gamma(c, b, a) ==
                  doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
            CHECK(ip.gamma_tilde(c, a, b) - ip.gamma_tilde(c, b, a) ==
                  doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
          }
    }
  }
}

TEST_CASE("induced build is jet-smooth and matches finite differences") {
  Ambient amb = minkowski4();
  ConeImmersion cone(3);
  FrameOptions opt;
  opt.radical_scale = {AffineScalar{0.0, {1.0, 0.0, 0.0}}};
  VectorD u = {1.3, 1.0, 1.5};

  auto lifted = lift(u, 1);
  InducedPoint<J1> ipj = build_induced<J1>(amb, cone, opt, lifted);

  for (int dir = 0; dir < 3; ++dir) {
    VectorD d(3, 0.0);
    d[static_cast<std::size_t>(dir)] = 1.0;
    auto tau_comp = [&](const VectorD& uu) {
      return build_induced<double>(amb, cone, opt, uu).tau(0, 0, 0);
    };
    double fd = fd_derivative(tau_comp, u, d);
    CHECK(ipj.tau(0, 0, 0).g[static_cast<std::size_t>(dir)] ==
          doctest::Approx(fd).epsilon(1e-6).scale(1.0));
  }

  CHECK(scalar_value(ipj.tau(0, 0, 0)) == doctest::Approx(-1.0 / 1.3).epsilon(1e-11));
}
