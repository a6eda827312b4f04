// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#include "nullrig/frame.hpp"

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

Ambient flat5_index2() {
  Ambient amb;
  amb.dim = 5;
  amb.index = 2;
  amb.metric =
      std::make_shared<ConstantMetric>(ConstantMetric::diagonal({-1.0, -1.0, 1.0, 1.0, 1.0}));
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

ImmersionPtr coisotropic_r2_plane() {
  MatrixD a(5, 3);
  a(0, 0) = 1.0;
  a(1, 1) = 1.0;
  a(2, 0) = 1.0;
  a(3, 1) = 1.0;
  a(4, 2) = 1.0;
  Box box = {{-2.0, 2.0}, {-2.0, 2.0}, {-2.0, 2.0}};
  return std::make_shared<AffineImmersion>(a, VectorD(5, 0.0), box);
}

double pair(const MatrixD& gbar, const VectorD& a, const VectorD& b) {
  return bilinear(gbar, a, b);
}

}  // namespace

TEST_CASE("classification labels follow the case table") {
  CHECK(classify(3, 1, 1) == NullClass::Coisotropic);
  CHECK(classify(2, 2, 1) == NullClass::RLightlike);
  CHECK(classify(2, 2, 2) == NullClass::TotallyNull);
  CHECK(classify(2, 3, 2) == NullClass::Isotropic);
  CHECK(classify(4, 2, 2) == NullClass::Coisotropic);
}

TEST_CASE("null hyperplane frame has the expected closed-form pieces") {
  Ambient amb = minkowski4();
  ImmersionPtr f = null_hyperplane();
  FrameOptions opt;
  FramePoint<double> fp = build_frame<double>(amb, *f, opt, {0.4, -1.1, 0.7});

  CHECK(fp.r == 1);
  CHECK(fp.cls == NullClass::Coisotropic);

  CHECK(fp.g(0, 0) == doctest::Approx(0.0));
  CHECK(fp.g(1, 1) == doctest::Approx(1.0));
  CHECK(fp.g(2, 2) == doctest::Approx(1.0));

  VectorD xi = fp.radical_amb.row(0);
  CHECK(xi[0] == doctest::Approx(1.0));
  CHECK(xi[1] == doctest::Approx(1.0));
  CHECK(xi[2] == doctest::Approx(0.0));
  CHECK(xi[3] == doctest::Approx(0.0));

  VectorD nvec = fp.n_amb.row(0);
  CHECK(nvec[0] == doctest::Approx(-0.5));
  CHECK(nvec[1] == doctest::Approx(0.5));
  CHECK(nvec[2] == doctest::Approx(0.0));
  CHECK(nvec[3] == doctest::Approx(0.0));

  CHECK(fp.omega(0, 0) == doctest::Approx(1.0));
  CHECK(fp.omega(0, 1) == doctest::Approx(0.0));
  CHECK(fp.omega(0, 2) == doctest::Approx(0.0));

  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(fp.gtilde(a, b) == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-12));

  CHECK(fp.screen_sign[0] == 1);
  CHECK(fp.screen_sign[1] == 1);
}

TEST_CASE("light cone frame matches the analytic rigging") {
  Ambient amb = minkowski4();
  ConeImmersion cone(3);
  FrameOptions opt;
  double s = 1.3, th = 1.1, ph = 2.0;
  FramePoint<double> fp = build_frame<double>(amb, cone, opt, {s, th, ph});

  CHECK(fp.r == 1);
  CHECK(fp.cls == NullClass::Coisotropic);

  VectorD nhat = {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};

  VectorD xi = fp.radical_amb.row(0);
  CHECK(xi[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (int c = 0; c < 3; ++c)
    CHECK(xi[static_cast<size_t>(c + 1)] == doctest::Approx(nhat[static_cast<size_t>(c)]).epsilon(1e-12));

  VectorD nvec = fp.n_amb.row(0);
  CHECK(nvec[0] == doctest::Approx(-0.5).epsilon(1e-12));
  for (int c = 0; c < 3; ++c)
    CHECK(nvec[static_cast<size_t>(c + 1)] == doctest::Approx(0.5 * nhat[static_cast<size_t>(c)]).epsilon(1e-12));

  CHECK(fp.omega(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fp.omega(0, 1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(fp.omega(0, 2) == doctest::Approx(0.0).epsilon(1e-12));

  CHECK(fp.gtilde(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fp.gtilde(1, 1) == doctest::Approx(s * s).epsilon(1e-12));
  CHECK(fp.gtilde(2, 2) == doctest::Approx(s * s * std::sin(th) * std::sin(th)).epsilon(1e-12));

  VectorD etheta = fp.screen_chart.row(0);
  CHECK(etheta[1] == doctest::Approx(1.0 / s).epsilon(1e-12));

  SignatureCounts sc = signature_counts(fp.gtilde);
  CHECK(sc.negative == 0);
  CHECK(sc.zero == 0);
}

TEST_CASE("flat r2 coisotropic plane produces two null transversals") {
  Ambient amb = flat5_index2();
  ImmersionPtr f = coisotropic_r2_plane();
  FrameOptions opt;
  FramePoint<double> fp = build_frame<double>(amb, *f, opt, {0.2, 0.4, -0.9});

  CHECK(fp.r == 2);
  CHECK(fp.cls == NullClass::Coisotropic);

  VectorD n1 = fp.n_amb.row(0);
  VectorD n2 = fp.n_amb.row(1);
  VectorD want1 = {-0.5, 0.0, 0.5, 0.0, 0.0};
  VectorD want2 = {0.0, -0.5, 0.0, 0.5, 0.0};
  for (int c = 0; c < 5; ++c) {
    CHECK(n1[static_cast<size_t>(c)] == doctest::Approx(want1[static_cast<size_t>(c)]).epsilon(1e-12));
    CHECK(n2[static_cast<size_t>(c)] == doctest::Approx(want2[static_cast<size_t>(c)]).epsilon(1e-12));
  }

  SignatureCounts sc = signature_counts(fp.gtilde);
  CHECK(sc.negative == 0);
  CHECK(sc.zero == 0);
}

TEST_CASE("r1-lightlike sinh graph carries a timelike screen-transversal") {
  Ambient amb = split4();
  SinhGraphImmersion f;
  FrameOptions opt;
  double v = 0.8;
  FramePoint<double> fp = build_frame<double>(amb, f, opt, {-0.3, v});

  CHECK(fp.r == 1);
  CHECK(fp.cls == NullClass::RLightlike);

  VectorD xi = fp.radical_amb.row(0);
  CHECK(xi[0] == doctest::Approx(1.0));
  CHECK(xi[2] == doctest::Approx(1.0));

  VectorD nvec = fp.n_amb.row(0);
  CHECK(nvec[0] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(nvec[2] == doctest::Approx(0.5).epsilon(1e-12));

  REQUIRE(fp.st_amb.rows() == 1);
  VectorD w = fp.st_amb.row(0);
  CHECK(fp.st_sign[0] == -1);
  CHECK(w[1] == doctest::Approx(std::cosh(v) / std::sinh(v)).epsilon(1e-10));
  CHECK(w[3] == doctest::Approx(1.0 / std::sinh(v)).epsilon(1e-10));
  CHECK(pair(fp.gbar, w, w) == doctest::Approx(-1.0).epsilon(1e-10));

  // Index of the rigged metric: ambient index 2, nullity 1, and the
  // screen-transversal is timelike, so the screen is Riemannian and
  // g-tilde is positive definite.
  SignatureCounts sc = signature_counts(fp.gtilde);
  CHECK(sc.positive == 2);
  CHECK(sc.negative == 0);
  int st_index = 0;
  for (int sgn : fp.st_sign)
    if (sgn < 0) ++st_index;
  CHECK(sc.negative == amb.index - fp.r - st_index);
}

TEST_CASE("frame invariants hold at random samples on all geometries") {
  struct Case {
    Ambient amb;
    ImmersionPtr f;
  };
  std::vector<Case> cases;
  cases.push_back({minkowski4(), null_hyperplane()});
  cases.push_back({minkowski4(), std::make_shared<ConeImmersion>(3)});
  cases.push_back({flat5_index2(), coisotropic_r2_plane()});
  cases.push_back({split4(), std::make_shared<SinhGraphImmersion>()});

  FrameOptions opt;
  Sampler rng(404);
  for (const Case& cs : cases) {
    Box box = cs.f->domain();
    for (int trial = 0; trial < 25; ++trial) {
      VectorD u = sample_point(box, rng);
      FramePoint<double> fp = build_frame<double>(cs.amb, *cs.f, opt, u);
      const int m = fp.k + fp.n;

      for (int i = 0; i < fp.r; ++i) {
        VectorD ni = fp.n_amb.row(i);
        for (int j = 0; j < fp.r; ++j) {
          double want = i == j ? 1.0 : 0.0;
          CHECK(pair(fp.gbar, ni, fp.radical_amb.row(j)) ==
                doctest::Approx(want).epsilon(1e-10).scale(1.0));
          CHECK(pair(fp.gbar, ni, fp.n_amb.row(j)) ==
                doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
        }
        for (int a = 0; a < fp.n - fp.r; ++a)
          CHECK(pair(fp.gbar, ni, fp.screen_amb.row(a)) ==
                doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
        for (int a = 0; a < fp.k - fp.r; ++a)
          CHECK(pair(fp.gbar, ni, fp.st_amb.row(a)) ==
                doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
      }

      for (int i = 0; i < fp.r; ++i) {
        VectorD xi = fp.radical_amb.row(i);
        for (int j = 0; j < fp.n; ++j)
          CHECK(pair(fp.gbar, xi, fp.jac.col(j)) == doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
        for (int a = 0; a < fp.k - fp.r; ++a)
          CHECK(pair(fp.gbar, xi, fp.st_amb.row(a)) ==
                doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
      }

      for (int a = 0; a < fp.n - fp.r; ++a)
        for (int b = 0; b < fp.n - fp.r; ++b) {
          double want = a == b ? static_cast<double>(fp.screen_sign[static_cast<size_t>(a)]) : 0.0;
          CHECK(pair(fp.gbar, fp.screen_amb.row(a), fp.screen_amb.row(b)) ==
                doctest::Approx(want).epsilon(1e-10).scale(1.0));
        }

      Sampler vec_rng(mix_seed(404, static_cast<std::uint64_t>(trial)));
      VectorD wv = vec_rng.direction(static_cast<std::size_t>(m));
      VectorD recon(static_cast<std::size_t>(m), 0.0);
      for (int a = 0; a < fp.n - fp.r; ++a) {
        VectorD ea = fp.screen_amb.row(a);
        double c = fp.screen_sign[static_cast<size_t>(a)] * pair(fp.gbar, wv, ea);
        recon = vadd(recon, vscale(c, ea));
      }
      for (int i = 0; i < fp.r; ++i) {
        double toward_xi = pair(fp.gbar, wv, fp.n_amb.row(i));
        double toward_n = pair(fp.gbar, wv, fp.radical_amb.row(i));
        recon = vadd(recon, vscale(toward_xi, fp.radical_amb.row(i)));
        recon = vadd(recon, vscale(toward_n, fp.n_amb.row(i)));
      }
      for (int a = 0; a < fp.k - fp.r; ++a) {
        VectorD wa = fp.st_amb.row(a);
        double c = fp.st_sign[static_cast<size_t>(a)] * pair(fp.gbar, wv, wa);
        recon = vadd(recon, vscale(c, wa));
      }
      CHECK(vnorm(vsub(recon, wv)) == doctest::Approx(0.0).epsilon(1e-9).scale(1.0));

      // P kills the radical and fixes the screen.
      for (int i = 0; i < fp.r; ++i) {
        VectorD pxi = matvec(fp.p_chart, fp.radical_chart.row(i));
        CHECK(vnorm(pxi) == doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
      }
      for (int a = 0; a < fp.n - fp.r; ++a) {
        VectorD eps_a = fp.screen_chart.row(a);
        VectorD pe = matvec(fp.p_chart, eps_a);
        CHECK(vnorm(vsub(pe, eps_a)) == doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
      }
    }
  }
}

TEST_CASE("unsupported and non-null immersions are rejected") {
  Box box2 = {{-2.0, 2.0}, {-2.0, 2.0}};

  MatrixD tn(4, 2);
  tn(0, 0) = 1.0;
  tn(1, 1) = 1.0;
  tn(2, 0) = 1.0;
  tn(3, 1) = 1.0;
  AffineImmersion totally_null(tn, VectorD(4, 0.0), box2);
  CHECK_THROWS_AS(
      (void)build_frame<double>(split4(), totally_null, FrameOptions{}, VectorD{0.1, 0.2}),
      UnsupportedError);

  MatrixD iso(5, 2);
  iso(0, 0) = 1.0;
  iso(1, 1) = 1.0;
  iso(3, 0) = 1.0;
  iso(4, 1) = 1.0;
  AffineImmersion isotropic(iso, VectorD(5, 0.0), box2);
  CHECK_THROWS_AS(
      (void)build_frame<double>(flat5_index2(), isotropic, FrameOptions{}, VectorD{0.1, 0.2}),
      UnsupportedError);

  MatrixD graph(3, 2);
  graph(0, 0) = 1.0;
  graph(1, 1) = 1.0;
  Ambient euclid3;
  euclid3.dim = 3;
  euclid3.index = 0;
  euclid3.metric = std::make_shared<ConstantMetric>(ConstantMetric::diagonal({1.0, 1.0, 1.0}));
  AffineImmersion riem(graph, VectorD(3, 0.0), box2);
  CHECK_THROWS_AS((void)build_frame<double>(euclid3, riem, FrameOptions{}, VectorD{0.1, 0.2}),
                  NotNullError);

  MatrixD defect(4, 2);
  defect(0, 0) = 1.0;
  defect(1, 0) = 1.0;
  AffineImmersion degenerate(defect, VectorD(4, 0.0), box2);
  CHECK_THROWS_AS(
      (void)build_frame<double>(minkowski4(), degenerate, FrameOptions{}, VectorD{0.1, 0.2}),
      ImmersionError);
}

TEST_CASE("radical rescaling scales the rigging inversely") {
  Ambient amb = minkowski4();
  ConeImmersion cone(3);
  FrameOptions opt;
  opt.radical_scale = {AffineScalar{0.0, {1.0, 0.0, 0.0}}};  // psi(s,theta,phi) = s
  double s = 1.7;
  FramePoint<double> fp = build_frame<double>(amb, cone, opt, {s, 0.9, 1.2});

  VectorD xi = fp.radical_amb.row(0);
  CHECK(xi[0] == doctest::Approx(s).epsilon(1e-12));

  VectorD nvec = fp.n_amb.row(0);
  CHECK(nvec[0] == doctest::Approx(-0.5 / s).epsilon(1e-12));

  CHECK(fp.omega(0, 0) == doctest::Approx(1.0 / s).epsilon(1e-12));
}

TEST_CASE("screen shifts keep the frame invariants and bend omega") {
  Ambient amb = minkowski4();
  ConeImmersion cone(3);
  FrameOptions opt;
  opt.screen_shifts = {ScreenShift{0, 0, AffineScalar{0.0, {0.0, 0.25, 0.0}}}};
  FramePoint<double> fp = build_frame<double>(amb, cone, opt, {1.2, 0.8, 2.4});

  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double want = a == b ? static_cast<double>(fp.screen_sign[static_cast<size_t>(a)]) : 0.0;
      CHECK(pair(fp.gbar, fp.screen_amb.row(a), fp.screen_amb.row(b)) ==
            doctest::Approx(want).epsilon(1e-10).scale(1.0));
    }
  for (int i = 0; i < fp.r; ++i) {
    CHECK(pair(fp.gbar, fp.n_amb.row(i), fp.radical_amb.row(i)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(pair(fp.gbar, fp.n_amb.row(i), fp.n_amb.row(i)) == doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
    for (int a = 0; a < fp.n - fp.r; ++a)
      CHECK(pair(fp.gbar, fp.n_amb.row(i), fp.screen_amb.row(a)) ==
            doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
  }
  CHECK(std::abs(fp.omega(0, 1)) > 0.01);
}

TEST_CASE("frame construction is jet-smooth and matches finite differences") {
  Ambient amb = minkowski4();
  ConeImmersion cone(3);
  FrameOptions opt;
  VectorD u = {1.1, 1.3, 0.7};

  auto lifted = lift(u, 1);
  FramePoint<J1> fpj = build_frame<J1>(amb, cone, opt, lifted);

  for (int c = 0; c < 4; ++c) {
    for (int dir = 0; dir < 3; ++dir) {
      VectorD d(3, 0.0);
      d[static_cast<size_t>(dir)] = 1.0;
      auto ncomp = [&](const VectorD& uu) {
        return build_frame<double>(amb, cone, opt, uu).n_amb(0, c);
      };
      double fd = fd_derivative(ncomp, u, d);
      CHECK(fpj.n_amb(0, c).g[static_cast<size_t>(dir)] ==
            doctest::Approx(fd).epsilon(1e-7).scale(1.0));
    }
  }

  // The canonical cone rigging does not change along the ray direction.
  auto nfield = [&]<class S>(const Vector<S>& uu) {
    return build_frame<S>(amb, cone, opt, uu).n_amb.row(0);
  };
  VectorD dn = ambient_cov_deriv_along(*amb.metric, cone, nfield, u, {1.0, 0.0, 0.0});
  CHECK(vnorm(dn) == doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
}
