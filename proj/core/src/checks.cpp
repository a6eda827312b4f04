// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#include "nullrig/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <future>
#include <iomanip>
#include <sstream>
#include <utility>

#include "nullrig/errors.hpp"
#include "nullrig/finite_diff.hpp"
#include "nullrig/rng.hpp"

namespace nullrig {

namespace {

constexpr double kClosedGate = 1e-9;      // measured d omega below this counts as closed
constexpr double kConformalGate = 1e-8;   // measured fit residual below this counts as conformal
constexpr double kWitnessFloor = 1e-3;    // negative expectations must be witnessed by this much
constexpr int kCurvatureSampleCap = 25;

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << v;
  return os.str();
}

struct Accum {
  double max = 0.0;
  double sum = 0.0;
  long count = 0;

  void add(double r) {
    r = std::abs(r);
    if (r > max) max = r;
    sum += r;
    ++count;
  }

  double mean() const { return count > 0 ? sum / static_cast<double>(count) : 0.0; }
};

VectorD mat_col(const MatrixD& m, int j) {
  VectorD out(static_cast<std::size_t>(m.rows()), 0.0);
  for (int i = 0; i < m.rows(); ++i) out[static_cast<std::size_t>(i)] = m(i, j);
  return out;
}

double max_abs(const MatrixD& m) {
  double out = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out = std::max(out, std::abs(m(i, j)));
  return out;
}

double max_abs(const std::vector<MatrixD>& ms) {
  double out = 0.0;
  for (const MatrixD& m : ms) out = std::max(out, max_abs(m));
  return out;
}

double max_abs(const Tensor3<double>& t) {
  double out = 0.0;
  for (int a = 0; a < t.dim0(); ++a)
    for (int b = 0; b < t.dim1(); ++b)
      for (int c = 0; c < t.dim2(); ++c) out = std::max(out, std::abs(t(a, b, c)));
  return out;
}

double max_abs(const Tensor4<double>& t) {
  double out = 0.0;
  for (int a = 0; a < t.dim0(); ++a)
    for (int b = 0; b < t.dim1(); ++b)
      for (int c = 0; c < t.dim2(); ++c)
        for (int d = 0; d < t.dim3(); ++d) out = std::max(out, std::abs(t(a, b, c, d)));
  return out;
}

MatrixD values(const Matrix<J1>& m) {
  MatrixD out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).v;
  return out;
}

Tensor3<double> values(const Tensor3<J1>& t) {
  Tensor3<double> out(t.dim0(), t.dim1(), t.dim2());
  for (int a = 0; a < t.dim0(); ++a)
    for (int b = 0; b < t.dim1(); ++b)
      for (int c = 0; c < t.dim2(); ++c) out(a, b, c) = t(a, b, c).v;
  return out;
}

InducedPoint<double> value_point(const InducedPoint<J1>& j) {
  InducedPoint<double> ip;
  ip.frame = detail::value_part(j.frame);
  ip.gammabar = values(j.gammabar);
  ip.sff = values(j.sff);
  ip.gamma = values(j.gamma);
  ip.hl = values(j.hl);
  ip.hs = values(j.hs);
  ip.an.reserve(j.an.size());
  for (const Matrix<J1>& m : j.an) ip.an.push_back(values(m));
  ip.tau = values(j.tau);
  ip.dsn = values(j.dsn);
  ip.astar.reserve(j.astar.size());
  for (const Matrix<J1>& m : j.astar) ip.astar.push_back(values(m));
  ip.nstar = values(j.nstar);
  ip.hlxi = values(j.hlxi);
  ip.hsxi = values(j.hsxi);
  ip.aw.reserve(j.aw.size());
  for (const Matrix<J1>& m : j.aw) ip.aw.push_back(values(m));
  ip.dlw = values(j.dlw);
  ip.nabla_s = values(j.nabla_s);
  ip.cscreen = values(j.cscreen);
  ip.dg = values(j.dg);
  ip.dgtilde = values(j.dgtilde);
  ip.domega = values(j.domega);
  ip.gamma_tilde = values(j.gamma_tilde);
  return ip;
}

// Curvature of a connection whose Christoffel field is available with
// first-derivative jets; same contraction as curvature_of_connection.
Tensor4<double> curvature_from_jets(const Tensor3<J1>& gj) {
  const int n = gj.dim0();
  Tensor3<double> gam(n, n, n);
  Tensor4<double> dgam(n, n, n, n);
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        gam(c, a, b) = gj(c, a, b).v;
        for (int e = 0; e < n; ++e) dgam(e, c, a, b) = gj(c, a, b).gat(e);
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

// gan(i, a, b) = g(A_{N_i} d_a, d_b); the degenerate metric kills the
// radical component of the operator value, so no screen projection is
// needed on the second slot.
Tensor3<double> gan_pairing(const InducedPoint<double>& ip) {
  const FramePoint<double>& fp = ip.frame;
  const int n = fp.n;
  const int r = fp.r;
  Tensor3<double> out(r, n, n);
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        double acc = 0.0;
        for (int c = 0; c < n; ++c) acc += ip.an[static_cast<std::size_t>(i)](c, a) * fp.g(c, b);
        out(i, a, b) = acc;
      }
  return out;
}

// gstar(i, a, b) = g(A*_i d_a, d_b).
Tensor3<double> gstar_pairing(const InducedPoint<double>& ip) {
  const FramePoint<double>& fp = ip.frame;
  const int n = fp.n;
  const int r = fp.r;
  Tensor3<double> out(r, n, n);
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        double acc = 0.0;
        for (int c = 0; c < n; ++c) acc += ip.astar[static_cast<std::size_t>(i)](c, a) * fp.g(c, b);
        out(i, a, b) = acc;
      }
  return out;
}

// Ambient components of D_{d_a} xi_i reconstructed from the stored frame
// split; rows indexed by the chart direction a.
MatrixD dxi_ambient(const InducedPoint<double>& ip, int i) {
  const FramePoint<double>& fp = ip.frame;
  const int n = fp.n;
  const int r = fp.r;
  const int kt = fp.k - fp.r;
  const int m = fp.jac.rows();
  MatrixD out(n, m);
  for (int a = 0; a < n; ++a) {
    VectorD tchart(static_cast<std::size_t>(n), 0.0);
    for (int c = 0; c < n; ++c) {
      double acc = -ip.astar[static_cast<std::size_t>(i)](c, a);
      for (int j = 0; j < r; ++j) acc += ip.nstar(i, j, a) * fp.radical_chart(j, c);
      tchart[static_cast<std::size_t>(c)] = acc;
    }
    for (int cm = 0; cm < m; ++cm) {
      double acc = 0.0;
      for (int c = 0; c < n; ++c) acc += tchart[static_cast<std::size_t>(c)] * fp.jac(cm, c);
      for (int j = 0; j < r; ++j) acc += ip.hlxi(i, j, a) * fp.n_amb(j, cm);
      for (int al = 0; al < kt; ++al) acc += ip.hsxi(i, al, a) * fp.st_amb(al, cm);
      out(a, cm) = acc;
    }
  }
  return out;
}

// Ambient components of D_{d_a} N_i from the stored split.
MatrixD dn_ambient(const InducedPoint<double>& ip, int i) {
  const FramePoint<double>& fp = ip.frame;
  const int n = fp.n;
  const int r = fp.r;
  const int kt = fp.k - fp.r;
  const int m = fp.jac.rows();
  MatrixD out(n, m);
  for (int a = 0; a < n; ++a)
    for (int cm = 0; cm < m; ++cm) {
      double acc = 0.0;
      for (int c = 0; c < n; ++c) acc += -ip.an[static_cast<std::size_t>(i)](c, a) * fp.jac(cm, c);
      for (int j = 0; j < r; ++j) acc += ip.tau(i, j, a) * fp.n_amb(j, cm);
      for (int al = 0; al < kt; ++al) acc += ip.dsn(i, al, a) * fp.st_amb(al, cm);
      out(a, cm) = acc;
    }
  return out;
}

struct SampleData {
  VectorD u;
  InducedPoint<J1> jets;
  InducedPoint<double> ip;
};

struct EntryContext {
  const CatalogEntry* entry = nullptr;
  const RunOptions* run = nullptr;
  FrameOptions opt;
  bool catalog_frame = true;  // frame options match the entry's published ones
  bool default_sign = true;

  std::vector<SampleData> samples;
  int curv_count = 0;
  std::vector<Tensor4<double>> rind;
  std::vector<Tensor4<double>> rtilde;
  std::vector<Tensor4<double>> rbar;

  double max_domega = 0.0;
  bool measured_closed = true;
  double max_conformal = 0.0;
  bool measured_conformal = false;
};

double tol_for(const RunOptions& run, const std::string& id, double fallback) {
  auto it = run.tolerances.find(id);
  if (it != run.tolerances.end()) return it->second;
  it = run.tolerances.find("all");
  if (it != run.tolerances.end()) return it->second;
  return fallback;
}

CheckResult measured(const EntryContext& ctx, std::string id, int nsamples, const Accum& acc,
                     double fallback_tol, std::string note = "") {
  CheckResult c;
  c.id = std::move(id);
  c.samples = nsamples;
  c.max_residual = acc.max;
  c.mean_residual = acc.mean();
  c.tolerance = tol_for(*ctx.run, c.id, fallback_tol);
  c.status = c.max_residual < c.tolerance ? CheckStatus::Pass : CheckStatus::Fail;
  c.note = std::move(note);
  return c;
}

CheckResult skipped(const EntryContext& ctx, std::string id, std::string reason,
                    std::string note = "") {
  CheckResult c;
  c.id = std::move(id);
  c.samples = 0;
  c.tolerance = tol_for(*ctx.run, c.id, 0.0);
  c.status = CheckStatus::Skipped;
  c.skip_reason = std::move(reason);
  c.note = std::move(note);
  return c;
}

// Inverted expectation: `observed` must sit at or above `floor`, so the
// reported residual is the shortfall below the floor.
CheckResult shortfall(const EntryContext& ctx, std::string id, int nsamples, double floor_value,
                      double observed, const std::string& what) {
  Accum acc;
  acc.add(std::max(0.0, floor_value - observed));
  std::string note = what + " = " + sci(observed) + ", required floor " + sci(floor_value);
  return measured(ctx, std::move(id), nsamples, acc, 1e-12, note);
}

template <class F>
CheckResult sampled_check(const EntryContext& ctx, std::string id, double fallback_tol,
                          F&& per_sample, std::string note = "") {
  Accum acc;
  for (const SampleData& sd : ctx.samples) per_sample(sd, acc);
  return measured(ctx, std::move(id), static_cast<int>(ctx.samples.size()), acc, fallback_tol,
                  std::move(note));
}

template <class F>
CheckResult curvature_check(const EntryContext& ctx, std::string id, double fallback_tol,
                            F&& per_sample, std::string note = "") {
  Accum acc;
  for (int s = 0; s < ctx.curv_count; ++s) per_sample(s, acc);
  return measured(ctx, std::move(id), ctx.curv_count, acc, fallback_tol, std::move(note));
}

// --------------------------------------------------------------------------
// frames suite
// --------------------------------------------------------------------------

void add_frame_checks(const EntryContext& ctx, std::vector<CheckResult>& out) {
  const CatalogEntry& entry = *ctx.entry;

  out.push_back(sampled_check(ctx, "frame-duality", 1e-9, [](const SampleData& sd, Accum& acc) {
    const FramePoint<double>& fp = sd.ip.frame;
    for (int i = 0; i < fp.r; ++i)
      for (int j = 0; j < fp.r; ++j) {
        double want = i == j ? 1.0 : 0.0;
        acc.add(bilinear(fp.gbar, fp.n_amb.row(i), fp.radical_amb.row(j)) - want);
      }
  }));

  out.push_back(
      sampled_check(ctx, "frame-transversal-null", 1e-9, [](const SampleData& sd, Accum& acc) {
        const FramePoint<double>& fp = sd.ip.frame;
        for (int i = 0; i < fp.r; ++i) {
          VectorD ni = fp.n_amb.row(i);
          for (int j = 0; j < fp.r; ++j) acc.add(bilinear(fp.gbar, ni, fp.n_amb.row(j)));
          for (int a = 0; a < fp.n - fp.r; ++a) acc.add(bilinear(fp.gbar, ni, fp.screen_amb.row(a)));
          for (int al = 0; al < fp.k - fp.r; ++al) acc.add(bilinear(fp.gbar, ni, fp.st_amb.row(al)));
        }
      }));

  out.push_back(
      sampled_check(ctx, "frame-orthogonality", 1e-9, [](const SampleData& sd, Accum& acc) {
        const FramePoint<double>& fp = sd.ip.frame;
        for (int i = 0; i < fp.r; ++i) {
          VectorD xi = fp.radical_amb.row(i);
          for (int j = 0; j < fp.r; ++j) acc.add(bilinear(fp.gbar, xi, fp.radical_amb.row(j)));
          for (int a = 0; a < fp.n - fp.r; ++a) acc.add(bilinear(fp.gbar, xi, fp.screen_amb.row(a)));
          for (int al = 0; al < fp.k - fp.r; ++al) acc.add(bilinear(fp.gbar, xi, fp.st_amb.row(al)));
        }
        for (int a = 0; a < fp.n - fp.r; ++a)
          for (int al = 0; al < fp.k - fp.r; ++al)
            acc.add(bilinear(fp.gbar, fp.screen_amb.row(a), fp.st_amb.row(al)));
      }));

  out.push_back(
      sampled_check(ctx, "frame-screen-orthonormal", 1e-9, [](const SampleData& sd, Accum& acc) {
        const FramePoint<double>& fp = sd.ip.frame;
        for (int a = 0; a < fp.n - fp.r; ++a)
          for (int b = 0; b < fp.n - fp.r; ++b) {
            double want = a == b ? static_cast<double>(fp.screen_sign[static_cast<std::size_t>(a)])
                                 : 0.0;
            acc.add(bilinear(fp.gbar, fp.screen_amb.row(a), fp.screen_amb.row(b)) - want);
          }
        for (int al = 0; al < fp.k - fp.r; ++al)
          for (int be = 0; be < fp.k - fp.r; ++be) {
            double want = al == be ? static_cast<double>(fp.st_sign[static_cast<std::size_t>(al)])
                                   : 0.0;
            acc.add(bilinear(fp.gbar, fp.st_amb.row(al), fp.st_amb.row(be)) - want);
          }
      }));

  out.push_back(
      sampled_check(ctx, "frame-reconstruction", 1e-9, [](const SampleData& sd, Accum& acc) {
        const FramePoint<double>& fp = sd.ip.frame;
        const int m = fp.jac.rows();
        for (int a = 0; a < fp.n; ++a)
          for (int b = 0; b < fp.n; ++b)
            acc.add(fp.g(a, b) - bilinear(fp.gbar, mat_col(fp.jac, a), mat_col(fp.jac, b)));
        for (int i = 0; i < fp.r; ++i)
          for (int a = 0; a < fp.n; ++a) {
            double acc_g = 0.0;
            for (int b = 0; b < fp.n; ++b) acc_g += fp.g(a, b) * fp.radical_chart(i, b);
            acc.add(acc_g);
          }
        for (int i = 0; i < fp.r; ++i)
          for (int c = 0; c < m; ++c) {
            double amb = 0.0;
            for (int b = 0; b < fp.n; ++b) amb += fp.radical_chart(i, b) * fp.jac(c, b);
            acc.add(amb - fp.radical_amb(i, c));
          }
        for (int a = 0; a < fp.n - fp.r; ++a)
          for (int c = 0; c < m; ++c) {
            double amb = 0.0;
            for (int b = 0; b < fp.n; ++b) amb += fp.screen_chart(a, b) * fp.jac(c, b);
            acc.add(amb - fp.screen_amb(a, c));
          }
      }));

  {
    Accum acc;
    std::string note;
    for (const SampleData& sd : ctx.samples) {
      const FramePoint<double>& fp = sd.ip.frame;
      bool ok = fp.cls == entry.expected_class && fp.r == entry.expected_r;
      acc.add(ok ? 0.0 : 1.0);
      if (note.empty())
        note = class_name(fp.cls) + ", r = " + std::to_string(fp.r);
    }
    out.push_back(measured(ctx, "frame-classification", static_cast<int>(ctx.samples.size()), acc,
                           0.5, note));
  }

  out.push_back(
      sampled_check(ctx, "projection-screen", 1e-9, [](const SampleData& sd, Accum& acc) {
        const FramePoint<double>& fp = sd.ip.frame;
        for (int c = 0; c < fp.n; ++c)
          for (int b = 0; b < fp.n; ++b) {
            double pp = 0.0;
            for (int e = 0; e < fp.n; ++e) pp += fp.p_chart(c, e) * fp.p_chart(e, b);
            acc.add(pp - fp.p_chart(c, b));
            double expect = (c == b ? 1.0 : 0.0);
            for (int i = 0; i < fp.r; ++i) expect -= fp.radical_chart(i, c) * fp.omega(i, b);
            acc.add(fp.p_chart(c, b) - expect);
          }
        for (int i = 0; i < fp.r; ++i)
          for (int c = 0; c < fp.n; ++c) {
            double px = 0.0;
            for (int b = 0; b < fp.n; ++b) px += fp.p_chart(c, b) * fp.radical_chart(i, b);
            acc.add(px);
          }
      }));

  out.push_back(sampled_check(ctx, "omega-duality", 1e-9, [](const SampleData& sd, Accum& acc) {
    const FramePoint<double>& fp = sd.ip.frame;
    for (int i = 0; i < fp.r; ++i) {
      for (int a = 0; a < fp.n; ++a)
        acc.add(fp.omega(i, a) - bilinear(fp.gbar, mat_col(fp.jac, a), fp.n_amb.row(i)));
      for (int j = 0; j < fp.r; ++j) {
        double v = 0.0;
        for (int a = 0; a < fp.n; ++a) v += fp.omega(i, a) * fp.radical_chart(j, a);
        acc.add(v - (i == j ? 1.0 : 0.0));
      }
      for (int b = 0; b < fp.n - fp.r; ++b) {
        double v = 0.0;
        for (int a = 0; a < fp.n; ++a) v += fp.omega(i, a) * fp.screen_chart(b, a);
        acc.add(v);
      }
    }
  }));

  if (!ctx.catalog_frame) {
    out.push_back(skipped(ctx, "omega-closedness", "requires-catalog-rigging"));
  } else if (entry.omega_closed) {
    Accum acc;
    acc.add(ctx.max_domega);
    out.push_back(measured(ctx, "omega-closedness", static_cast<int>(ctx.samples.size()), acc,
                           1e-9, "rigging forms closed"));
  } else {
    out.push_back(shortfall(ctx, "omega-closedness", static_cast<int>(ctx.samples.size()),
                            kWitnessFloor, ctx.max_domega, "max |d omega|"));
  }

  bool any_ext = false;
  for (const RiggingExtension& e : entry.extensions)
    if (e.kind != RiggingExtension::Kind::None) any_ext = true;
  if (!any_ext) {
    out.push_back(skipped(ctx, "rigging-extension-agreement", "no-ambient-extension"));
  } else if (!ctx.catalog_frame) {
    out.push_back(skipped(ctx, "rigging-extension-agreement", "requires-catalog-rigging"));
  } else {
    out.push_back(sampled_check(
        ctx, "rigging-extension-agreement", 1e-10, [&entry](const SampleData& sd, Accum& acc) {
          const FramePoint<double>& fp = sd.ip.frame;
          const int m = fp.jac.rows();
          int nx = std::min<int>(fp.r, static_cast<int>(entry.extensions.size()));
          for (int i = 0; i < nx; ++i) {
            const RiggingExtension& ext = entry.extensions[static_cast<std::size_t>(i)];
            if (ext.kind == RiggingExtension::Kind::None) continue;
            VectorD v = ext.eval(fp.x, m);
            for (int c = 0; c < m; ++c) acc.add(v[static_cast<std::size_t>(c)] - fp.n_amb(i, c));
          }
        }));
  }
}

// --------------------------------------------------------------------------
// metric suite
// --------------------------------------------------------------------------

void add_metric_checks(const EntryContext& ctx, std::vector<CheckResult>& out) {
  const double eps = static_cast<double>(ctx.opt.sign_eps);

  {
    double min_det = 0.0;
    bool first = true;
    for (const SampleData& sd : ctx.samples) {
      double d = std::abs(det(sd.ip.frame.gtilde));
      if (first || d < min_det) min_det = d;
      first = false;
    }
    out.push_back(shortfall(ctx, "rigged-nondegenerate", static_cast<int>(ctx.samples.size()),
                            1e-10, min_det, "min |det gtilde|"));
  }

  if (!ctx.default_sign) {
    out.push_back(skipped(ctx, "rigged-index", "requires-default-sign-convention"));
    out.push_back(skipped(ctx, "rigged-index-split", "requires-default-sign-convention"));
  } else {
    Accum acc;
    std::string note;
    for (const SampleData& sd : ctx.samples) {
      const FramePoint<double>& fp = sd.ip.frame;
      int observed = signature_counts(fp.gtilde).negative;
      int want = ctx.entry->ambient.index - fp.r;
      acc.add(observed == want ? 0.0 : 1.0);
      if (note.empty())
        note = "index(gtilde) = " + std::to_string(observed) +
               ", ambient index - r = " + std::to_string(want);
    }
    out.push_back(measured(ctx, "rigged-index", static_cast<int>(ctx.samples.size()), acc, 0.5,
                           note));

    Accum acc2;
    std::string note2;
    for (const SampleData& sd : ctx.samples) {
      const FramePoint<double>& fp = sd.ip.frame;
      int observed = signature_counts(fp.gtilde).negative;
      int st_neg = 0;
      for (int s : fp.st_sign)
        if (s < 0) ++st_neg;
      int want = ctx.entry->ambient.index - fp.r - st_neg;
      acc2.add(observed == want ? 0.0 : 1.0);
      if (note2.empty())
        note2 = "index(gtilde) = " + std::to_string(observed) +
                ", ambient index - r - index(screen transversal) = " + std::to_string(want);
    }
    out.push_back(measured(ctx, "rigged-index-split", static_cast<int>(ctx.samples.size()), acc2,
                           0.5, note2));
  }

  out.push_back(
      sampled_check(ctx, "rigged-radical-pairing", 1e-9, [eps](const SampleData& sd, Accum& acc) {
        const FramePoint<double>& fp = sd.ip.frame;
        for (int i = 0; i < fp.r; ++i)
          for (int j = 0; j < fp.r; ++j) {
            double want = i == j ? eps : 0.0;
            acc.add(bilinear(fp.gtilde, fp.radical_chart.row(i), fp.radical_chart.row(j)) - want);
          }
        for (int a = 0; a < fp.n - fp.r; ++a)
          for (int b = 0; b < fp.n - fp.r; ++b)
            acc.add(bilinear(fp.gtilde, fp.screen_chart.row(a), fp.screen_chart.row(b)) -
                    bilinear(fp.g, fp.screen_chart.row(a), fp.screen_chart.row(b)));
      }));

  out.push_back(
      sampled_check(ctx, "omega-rigged-pairing", 1e-10, [eps](const SampleData& sd, Accum& acc) {
        const FramePoint<double>& fp = sd.ip.frame;
        for (int i = 0; i < fp.r; ++i)
          for (int b = 0; b < fp.n; ++b) {
            double v = 0.0;
            for (int a = 0; a < fp.n; ++a) v += fp.radical_chart(i, a) * fp.gtilde(a, b);
            acc.add(v - eps * fp.omega(i, b));
          }
      }));

  out.push_back(
      sampled_check(ctx, "induced-nonmetricity", 1e-9, [](const SampleData& sd, Accum& acc) {
        const InducedPoint<double>& ip = sd.ip;
        const FramePoint<double>& fp = ip.frame;
        const int n = fp.n;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
              double lhs = ip.dg(a, b, c);
              for (int e = 0; e < n; ++e)
                lhs -= ip.gamma(e, a, b) * fp.g(e, c) + ip.gamma(e, a, c) * fp.g(b, e);
              double rhs = 0.0;
              for (int i = 0; i < fp.r; ++i)
                rhs += ip.hl(i, a, b) * fp.omega(i, c) + ip.hl(i, a, c) * fp.omega(i, b);
              acc.add(lhs - rhs);
            }
      }));

  out.push_back(
      sampled_check(ctx, "rigged-metric-jump", 1e-8, [eps](const SampleData& sd, Accum& acc) {
        const InducedPoint<double>& ip = sd.ip;
        const FramePoint<double>& fp = ip.frame;
        const int n = fp.n;
        const int r = fp.r;
        Tensor3<double> gan = gan_pairing(ip);
        Tensor3<double> w(r, n, n);
        for (int i = 0; i < r; ++i)
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
              double acc_w = -gan(i, a, b);
              for (int j = 0; j < r; ++j) acc_w += ip.tau(i, j, a) * fp.omega(j, b);
              w(i, a, b) = acc_w;
            }
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
              double lhs = ip.dgtilde(a, b, c);
              for (int e = 0; e < n; ++e)
                lhs -= ip.gamma(e, a, b) * fp.gtilde(e, c) + ip.gamma(e, a, c) * fp.gtilde(b, e);
              double rhs = 0.0;
              for (int i = 0; i < r; ++i) {
                rhs += ip.hl(i, a, b) * fp.omega(i, c) + ip.hl(i, a, c) * fp.omega(i, b);
                rhs += eps * (w(i, a, b) * fp.omega(i, c) + w(i, a, c) * fp.omega(i, b));
              }
              acc.add(lhs - rhs);
            }
      }));
}

// --------------------------------------------------------------------------
// connection suite
// --------------------------------------------------------------------------

double connection_jump_residual(const InducedPoint<double>& ip) {
  const FramePoint<double>& fp = ip.frame;
  const int n = fp.n;
  Tensor3<double> jump = connection_jump(ip);
  double out = 0.0;
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        double diff = ip.gamma_tilde(c, a, b) - ip.gamma(c, a, b);
        for (int i = 0; i < fp.r; ++i) diff -= jump(i, a, b) * fp.radical_chart(i, c);
        out = std::max(out, std::abs(diff));
      }
  return out;
}

void add_connection_checks(const EntryContext& ctx, std::vector<CheckResult>& out) {
  out.push_back(
      sampled_check(ctx, "gauss-decomposition", 1e-9, [](const SampleData& sd, Accum& acc) {
        const InducedPoint<double>& ip = sd.ip;
        const FramePoint<double>& fp = ip.frame;
        const int n = fp.n;
        const int m = fp.jac.rows();
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int c = 0; c < m; ++c) {
              double recon = 0.0;
              for (int e = 0; e < n; ++e) recon += ip.gamma(e, a, b) * fp.jac(c, e);
              for (int i = 0; i < fp.r; ++i) recon += ip.hl(i, a, b) * fp.n_amb(i, c);
              for (int al = 0; al < fp.k - fp.r; ++al)
                recon += ip.hs(al, a, b) * fp.st_amb(al, c);
              acc.add(ip.sff(c, a, b) - recon);
            }
      }));

  out.push_back(
      sampled_check(ctx, "shape-operator-pairings", 1e-9, [](const SampleData& sd, Accum& acc) {
        const InducedPoint<double>& ip = sd.ip;
        const FramePoint<double>& fp = ip.frame;
        const int n = fp.n;
        const int r = fp.r;
        Tensor3<double> gan = gan_pairing(ip);
        Tensor3<double> gstar = gstar_pairing(ip);
        for (int i = 0; i < r; ++i)
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
              double hlp = 0.0;
              for (int bp = 0; bp < n; ++bp) hlp += ip.hl(i, a, bp) * fp.p_chart(bp, b);
              acc.add(hlp - gstar(i, a, b));
              acc.add(ip.cscreen(i, a, b) - gan(i, a, b));
            }
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j)
            for (int a = 0; a < n; ++a) {
              double hx = 0.0;
              for (int b = 0; b < n; ++b) hx += ip.hl(i, a, b) * fp.radical_chart(j, b);
              acc.add(hx);
              double ax = 0.0;
              for (int c = 0; c < n; ++c) {
                double av = 0.0;
                for (int aa = 0; aa < n; ++aa)
                  av += ip.astar[static_cast<std::size_t>(i)](c, aa) * fp.radical_chart(j, aa);
                ax = std::max(ax, std::abs(av));
              }
              acc.add(ax);
            }
      }));

  if (ctx.samples.front().ip.frame.k - ctx.samples.front().ip.frame.r == 0) {
    out.push_back(skipped(ctx, "screen-transversal-pairing", "no-screen-transversal"));
  } else {
    out.push_back(sampled_check(
        ctx, "screen-transversal-pairing", 1e-9, [](const SampleData& sd, Accum& acc) {
          const InducedPoint<double>& ip = sd.ip;
          const FramePoint<double>& fp = ip.frame;
          const int n = fp.n;
          const int r = fp.r;
          const int kt = fp.k - fp.r;
          for (int al = 0; al < kt; ++al) {
            double sg = static_cast<double>(fp.st_sign[static_cast<std::size_t>(al)]);
            for (int a = 0; a < n; ++a) {
              for (int b = 0; b < n; ++b) {
                double v = sg * ip.hs(al, a, b);
                for (int i = 0; i < r; ++i) v += ip.dlw(al, i, a) * fp.omega(i, b);
                for (int c = 0; c < n; ++c)
                  v -= ip.aw[static_cast<std::size_t>(al)](c, a) * fp.g(c, b);
                acc.add(v);
              }
              for (int i = 0; i < r; ++i) {
                double v = sg * ip.dsn(i, al, a);
                for (int c = 0; c < n; ++c)
                  v -= ip.aw[static_cast<std::size_t>(al)](c, a) * fp.omega(i, c);
                acc.add(v);
              }
            }
          }
        }));
  }

  out.push_back(
      sampled_check(ctx, "screen-split-consistency", 1e-9, [](const SampleData& sd, Accum& acc) {
        const InducedPoint<double>& ip = sd.ip;
        const FramePoint<double>& fp = ip.frame;
        for (int i = 0; i < fp.r; ++i)
          for (int a = 0; a < fp.n; ++a) {
            for (int j = 0; j < fp.r; ++j) {
              acc.add(ip.hlxi(i, j, a) + ip.hlxi(j, i, a));
              acc.add(ip.nstar(i, j, a) + ip.tau(j, i, a));
            }
            for (int al = 0; al < fp.k - fp.r; ++al) {
              double sg = static_cast<double>(fp.st_sign[static_cast<std::size_t>(al)]);
              acc.add(sg * ip.hsxi(i, al, a) + ip.dlw(al, i, a));
            }
          }
      }));

  out.push_back(
      sampled_check(ctx, "rigged-levi-civita", 1e-8, [](const SampleData& sd, Accum& acc) {
        const InducedPoint<double>& ip = sd.ip;
        const FramePoint<double>& fp = ip.frame;
        const int n = fp.n;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
              double v = ip.dgtilde(a, b, c);
              for (int e = 0; e < n; ++e)
                v -= ip.gamma_tilde(e, a, b) * fp.gtilde(e, c) +
                     ip.gamma_tilde(e, a, c) * fp.gtilde(b, e);
              acc.add(v);
            }
      }));

  const NullClass cls = ctx.samples.front().ip.frame.cls;

  if (cls != NullClass::Coisotropic) {
    out.push_back(skipped(ctx, "connection-jump-closed", "not-coisotropic"));
  } else if (!ctx.measured_closed) {
    out.push_back(skipped(ctx, "connection-jump-closed", "not-closed",
                          "max |d omega| = " + sci(ctx.max_domega)));
  } else {
    out.push_back(sampled_check(ctx, "connection-jump-closed", 1e-8,
                                [](const SampleData& sd, Accum& acc) {
                                  acc.add(connection_jump_residual(sd.ip));
                                }));
  }

  if (cls == NullClass::Coisotropic) {
    out.push_back(skipped(ctx, "connection-jump-extended", "coisotropic"));
  } else if (!ctx.measured_closed) {
    out.push_back(skipped(ctx, "connection-jump-extended", "not-closed",
                          "max |d omega| = " + sci(ctx.max_domega)));
  } else {
    out.push_back(sampled_check(ctx, "connection-jump-extended", 1e-8,
                                [](const SampleData& sd, Accum& acc) {
                                  acc.add(connection_jump_residual(sd.ip));
                                }));
  }

  {
    Accum acc;
    for (const SampleData& sd : ctx.samples) acc.add(connection_jump_residual(sd.ip));
    CheckResult c;
    c.id = "connection-jump-raw";
    c.samples = static_cast<int>(ctx.samples.size());
    c.max_residual = acc.max;
    c.mean_residual = acc.mean();
    c.tolerance = tol_for(*ctx.run, c.id, 0.0);
    c.status = CheckStatus::Skipped;
    c.skip_reason = "diagnostic";
    c.note = "raw jump-formula residual, recorded for inspection; the formula assumes closed "
             "rigging forms";
    out.push_back(std::move(c));
  }
}

// --------------------------------------------------------------------------
// curvature suite
// --------------------------------------------------------------------------

void add_curvature_checks(const EntryContext& ctx, std::vector<CheckResult>& out) {
  out.push_back(curvature_check(
      ctx, "ambient-curvature-symmetries", 1e-8, [&ctx](int s, Accum& acc) {
        const FramePoint<double>& fp = ctx.samples[static_cast<std::size_t>(s)].ip.frame;
        const Ambient& amb = ctx.entry->ambient;
        Tensor4<double> r4 = lower_curvature(ambient_curvature(*amb.metric, fp.x), fp.gbar);
        const int m = amb.dim;
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
              for (int d = 0; d < m; ++d) {
                acc.add(r4(a, b, c, d) + r4(b, a, c, d));
                acc.add(r4(a, b, c, d) + r4(a, b, d, c));
                acc.add(r4(a, b, c, d) - r4(c, d, a, b));
                acc.add(r4(a, b, c, d) + r4(b, c, a, d) + r4(c, a, b, d));
              }
      }));

  out.push_back(curvature_check(
      ctx, "induced-curvature-antisymmetry", 1e-8, [&ctx](int s, Accum& acc) {
        const Tensor4<double>& r = ctx.rind[static_cast<std::size_t>(s)];
        for (int a = 0; a < r.dim0(); ++a)
          for (int b = 0; b < r.dim0(); ++b)
            for (int c = 0; c < r.dim0(); ++c)
              for (int d = 0; d < r.dim0(); ++d) acc.add(r(a, b, c, d) + r(b, a, c, d));
      }));

  out.push_back(curvature_check(
      ctx, "rigged-curvature-symmetries", 1e-7, [&ctx](int s, Accum& acc) {
        const SampleData& sd = ctx.samples[static_cast<std::size_t>(s)];
        Tensor4<double> r4 =
            lower_curvature(ctx.rtilde[static_cast<std::size_t>(s)], sd.ip.frame.gtilde);
        const int n = r4.dim0();
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
              for (int d = 0; d < n; ++d) {
                acc.add(r4(a, b, c, d) + r4(b, a, c, d));
                acc.add(r4(a, b, c, d) + r4(a, b, d, c));
                acc.add(r4(a, b, c, d) - r4(c, d, a, b));
                acc.add(r4(a, b, c, d) + r4(b, c, a, d) + r4(c, a, b, d));
              }
      }));

  out.push_back(curvature_check(
      ctx, "curvature-difference-exact", 1e-7, [&ctx](int s, Accum& acc) {
        const SampleData& sd = ctx.samples[static_cast<std::size_t>(s)];
        const InducedPoint<double>& ip = sd.ip;
        const InducedPoint<J1>& jets = sd.jets;
        const int n = ip.frame.n;
        Tensor3<double> delta(n, n, n);
        for (int d = 0; d < n; ++d)
          for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
              delta(d, b, c) = ip.gamma_tilde(d, b, c) - ip.gamma(d, b, c);
        Tensor4<double> cov(n, n, n, n);
        for (int a = 0; a < n; ++a)
          for (int d = 0; d < n; ++d)
            for (int b = 0; b < n; ++b)
              for (int c = 0; c < n; ++c) {
                double v = jets.gamma_tilde(d, b, c).gat(a) - jets.gamma(d, b, c).gat(a);
                for (int e = 0; e < n; ++e)
                  v += ip.gamma(d, a, e) * delta(e, b, c) - ip.gamma(e, a, b) * delta(d, e, c) -
                       ip.gamma(e, a, c) * delta(d, b, e);
                cov(a, d, b, c) = v;
              }
        const Tensor4<double>& rt = ctx.rtilde[static_cast<std::size_t>(s)];
        const Tensor4<double>& ri = ctx.rind[static_cast<std::size_t>(s)];
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
              for (int d = 0; d < n; ++d) {
                double pred = cov(a, d, b, c) - cov(b, d, a, c);
                for (int e = 0; e < n; ++e)
                  pred += delta(d, a, e) * delta(e, b, c) - delta(d, b, e) * delta(e, a, c);
                acc.add(rt(a, b, c, d) - ri(a, b, c, d) - pred);
              }
      }));

  if (!ctx.measured_closed) {
    out.push_back(skipped(ctx, "curvature-jump-screen", "not-closed",
                          "max |d omega| = " + sci(ctx.max_domega)));
  } else {
    out.push_back(curvature_check(
        ctx, "curvature-jump-screen", 1e-7, [&ctx](int s, Accum& acc) {
          const SampleData& sd = ctx.samples[static_cast<std::size_t>(s)];
          const InducedPoint<double>& ip = sd.ip;
          const FramePoint<double>& fp = ip.frame;
          const int n = fp.n;
          const int r = fp.r;
          Tensor3<double> jump = connection_jump(ip);
          Tensor3<double> gstar = gstar_pairing(ip);
          const Tensor4<double>& rt = ctx.rtilde[static_cast<std::size_t>(s)];
          const Tensor4<double>& ri = ctx.rind[static_cast<std::size_t>(s)];
          Tensor3<double> gsp(r, n, n);
          for (int i = 0; i < r; ++i)
            for (int a = 0; a < n; ++a)
              for (int w = 0; w < n; ++w) {
                double v = 0.0;
                for (int e = 0; e < n; ++e) v += gstar(i, a, e) * fp.p_chart(e, w);
                gsp(i, a, w) = v;
              }
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              for (int c = 0; c < n; ++c)
                for (int w = 0; w < n; ++w) {
                  double lhs = 0.0;
                  double rhs = 0.0;
                  for (int d = 0; d < n; ++d)
                    for (int e = 0; e < n; ++e) {
                      lhs += rt(a, b, c, d) * fp.gtilde(d, e) * fp.p_chart(e, w);
                      rhs += ri(a, b, c, d) * fp.g(d, e) * fp.p_chart(e, w);
                    }
                  for (int i = 0; i < r; ++i)
                    rhs += jump(i, a, c) * gsp(i, b, w) - jump(i, b, c) * gsp(i, a, w);
                  acc.add(lhs - rhs);
                }
        }));
  }

  if (!ctx.default_sign) {
    out.push_back(skipped(ctx, "curvature-jump-radical", "requires-default-sign-convention"));
  } else if (!ctx.measured_closed) {
    out.push_back(skipped(ctx, "curvature-jump-radical", "not-closed",
                          "max |d omega| = " + sci(ctx.max_domega)));
  } else {
    out.push_back(curvature_check(
        ctx, "curvature-jump-radical", 1e-7, [&ctx](int s, Accum& acc) {
          const SampleData& sd = ctx.samples[static_cast<std::size_t>(s)];
          acc.add(radical_display_residual(sd.ip, ctx.rtilde[static_cast<std::size_t>(s)],
                                           ctx.rind[static_cast<std::size_t>(s)],
                                           radical_display_constants()));
        }));
  }

  out.push_back(curvature_check(
      ctx, "gauss-curvature-relation", 1e-8, [&ctx](int s, Accum& acc) {
        const SampleData& sd = ctx.samples[static_cast<std::size_t>(s)];
        const InducedPoint<double>& ip = sd.ip;
        const FramePoint<double>& fp = ip.frame;
        const int n = fp.n;
        const int r = fp.r;
        const int kt = fp.k - fp.r;
        Tensor3<double> gan = gan_pairing(ip);
        const Tensor4<double>& ri = ctx.rind[static_cast<std::size_t>(s)];
        const Tensor4<double>& rb = ctx.rbar[static_cast<std::size_t>(s)];

        Tensor3<double> hlp(r, n, n);
        Tensor3<double> snd(r, n, n);
        for (int i = 0; i < r; ++i)
          for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c) {
              double v1 = 0.0;
              double v2 = 0.0;
              for (int e = 0; e < n; ++e) {
                v1 += ip.hl(i, a, e) * fp.p_chart(e, c);
                v2 += gan(i, a, e) * fp.p_chart(e, c);
              }
              hlp(i, a, c) = v1;
              snd(i, a, c) = v2;
            }
        Tensor3<double> hsp(std::max(kt, 1), n, n);
        for (int al = 0; al < kt; ++al)
          for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c) {
              double v = 0.0;
              for (int e = 0; e < n; ++e) v += ip.hs(al, a, e) * fp.p_chart(e, c);
              hsp(al, a, c) = v;
            }

        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
              for (int w = 0; w < n; ++w) {
                double lhs = 0.0;
                for (int cp = 0; cp < n; ++cp)
                  for (int wp = 0; wp < n; ++wp)
                    lhs += rb(a, b, cp, wp) * fp.p_chart(cp, c) * fp.p_chart(wp, w);
                double rhs = 0.0;
                for (int cp = 0; cp < n; ++cp)
                  for (int d = 0; d < n; ++d)
                    for (int dp = 0; dp < n; ++dp)
                      rhs += ri(a, b, cp, d) * fp.p_chart(cp, c) * fp.g(d, dp) *
                             fp.p_chart(dp, w);
                for (int i = 0; i < r; ++i)
                  rhs += snd(i, b, w) * hlp(i, a, c) - snd(i, a, w) * hlp(i, b, c);
                for (int al = 0; al < kt; ++al) {
                  double sg = static_cast<double>(fp.st_sign[static_cast<std::size_t>(al)]);
                  rhs += sg * (hsp(al, b, w) * hsp(al, a, c) - hsp(al, a, w) * hsp(al, b, c));
                }
                acc.add(lhs - rhs);
              }
      }));
}

// --------------------------------------------------------------------------
// conformal suite
// --------------------------------------------------------------------------

// Largest deviation of one ambient vector field from conformality of its
// covariant differential against the ambient metric at the image point.
double ambient_conformal_deviation(const InducedPoint<double>& ip, const RiggingExtension& ext) {
  const FramePoint<double>& fp = ip.frame;
  const int m = fp.jac.rows();
  Vector<J1> xj = lift(fp.x, 1);
  Vector<J1> vj = ext.eval(xj, m);
  MatrixD dv(m, m);
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c) {
      double acc = vj[static_cast<std::size_t>(c)].gat(a);
      for (int b = 0; b < m; ++b)
        acc += ip.gammabar(c, a, b) * vj[static_cast<std::size_t>(b)].v;
      dv(a, c) = acc;
    }
  MatrixD smat(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      double acc = 0.0;
      for (int c = 0; c < m; ++c) acc += dv(a, c) * fp.gbar(c, b) + dv(b, c) * fp.gbar(c, a);
      smat(a, b) = acc;
    }
  double num = 0.0;
  double den = 0.0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      num += smat(a, b) * fp.gbar(a, b);
      den += fp.gbar(a, b) * fp.gbar(a, b);
    }
  double lambda = den > 0.0 ? num / den : 0.0;
  double dev = 0.0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) dev = std::max(dev, std::abs(smat(a, b) - lambda * fp.gbar(a, b)));
  return dev;
}

void add_conformal_checks(const EntryContext& ctx, std::vector<CheckResult>& out) {
  const CatalogEntry& entry = *ctx.entry;

  if (!ctx.catalog_frame) {
    out.push_back(skipped(ctx, "conformal-rigging", "requires-catalog-rigging"));
  } else if (entry.conformal_rigging) {
    Accum acc;
    acc.add(ctx.max_conformal);
    out.push_back(measured(ctx, "conformal-rigging", static_cast<int>(ctx.samples.size()), acc,
                           1e-8, "tangent-direction conformal fit residual"));
  } else {
    out.push_back(shortfall(ctx, "conformal-rigging", static_cast<int>(ctx.samples.size()),
                            kWitnessFloor, ctx.max_conformal, "max conformal-fit deviation"));
  }

  bool any_ext = false;
  for (const RiggingExtension& e : entry.extensions)
    if (e.kind != RiggingExtension::Kind::None) any_ext = true;
  if (!any_ext) {
    out.push_back(skipped(ctx, "conformal-rigging-ambient", "no-ambient-extension"));
  } else if (!ctx.catalog_frame) {
    out.push_back(skipped(ctx, "conformal-rigging-ambient", "requires-catalog-rigging"));
  } else {
    out.push_back(sampled_check(
        ctx, "conformal-rigging-ambient", 1e-8,
        [&entry](const SampleData& sd, Accum& acc) {
          for (const RiggingExtension& ext : entry.extensions) {
            if (ext.kind == RiggingExtension::Kind::None) continue;
            double dev = ambient_conformal_deviation(sd.ip, ext);
            if (ext.kind == RiggingExtension::Kind::Constant)
              acc.add(dev);
            else
              acc.add(std::max(0.0, kWitnessFloor - dev));
          }
        },
        "constant extensions must be conformal, cone-radial ones must deviate"));
  }

  if (!ctx.measured_conformal) {
    out.push_back(skipped(ctx, "conformal-tau-vanishing", "not-conformal-rigging",
                          "max conformal-fit residual = " + sci(ctx.max_conformal)));
    out.push_back(skipped(ctx, "conformal-radical-geodesic", "not-conformal-rigging",
                          "max conformal-fit residual = " + sci(ctx.max_conformal)));
  } else {
    out.push_back(
        sampled_check(ctx, "conformal-tau-vanishing", 1e-9, [](const SampleData& sd, Accum& acc) {
          const FramePoint<double>& fp = sd.ip.frame;
          for (int i = 0; i < fp.r; ++i)
            for (int j = 0; j < fp.r; ++j)
              for (int l = 0; l < fp.r; ++l) {
                double v = 0.0;
                for (int a = 0; a < fp.n; ++a) v += sd.ip.tau(i, j, a) * fp.radical_chart(l, a);
                acc.add(v);
              }
        }));

    out.push_back(sampled_check(ctx, "conformal-radical-geodesic", 1e-9,
                                [](const SampleData& sd, Accum& acc) {
                                  const FramePoint<double>& fp = sd.ip.frame;
                                  const int m = fp.jac.rows();
                                  for (int i = 0; i < fp.r; ++i) {
                                    MatrixD dxi = dxi_ambient(sd.ip, i);
                                    for (int c = 0; c < m; ++c) {
                                      double v = 0.0;
                                      for (int a = 0; a < fp.n; ++a)
                                        v += fp.radical_chart(i, a) * dxi(a, c);
                                      acc.add(v);
                                    }
                                  }
                                }));
  }

  out.push_back(sampled_check(ctx, "pregeodesic", 1e-9, [](const SampleData& sd, Accum& acc) {
    const FramePoint<double>& fp = sd.ip.frame;
    const int m = fp.jac.rows();
    for (int i = 0; i < fp.r; ++i) {
      MatrixD dxi = dxi_ambient(sd.ip, i);
      VectorD v(static_cast<std::size_t>(m), 0.0);
      for (int c = 0; c < m; ++c)
        for (int a = 0; a < fp.n; ++a)
          v[static_cast<std::size_t>(c)] += fp.radical_chart(i, a) * dxi(a, c);
      detail::FrameSplit<double> split = detail::split_ambient(fp, v);
      for (double x : split.screen) acc.add(x);
      for (double x : split.st) acc.add(x);
      for (double x : split.lightlike) acc.add(x);
    }
  }));

  if (!ctx.catalog_frame) {
    out.push_back(skipped(ctx, "conformal-screen", "requires-catalog-rigging"));
    out.push_back(skipped(ctx, "conformal-screen-factor", "requires-catalog-rigging"));
    return;
  }

  switch (entry.screen_fit) {
    case ScreenFitKind::Factor: {
      out.push_back(sampled_check(
          ctx, "conformal-screen", 1e-8,
          [](const SampleData& sd, Accum& acc) {
            ConformalScreenFit fit = conformal_screen_fit(sd.ip);
            acc.add(fit.both_zero ? 1.0 : fit.residual);
          },
          "single-factor fit of the rigging shape operator against the screen one"));
      if (entry.screen_factor_fixed) {
        out.push_back(sampled_check(
            ctx, "conformal-screen-factor", 1e-6,
            [&entry](const SampleData& sd, Accum& acc) {
              ConformalScreenFit fit = conformal_screen_fit(sd.ip);
              acc.add(fit.factor - entry.screen_factor);
            },
            "expected factor " + sci(entry.screen_factor)));
      } else {
        out.push_back(skipped(ctx, "conformal-screen-factor", "varying-factor",
                              "a single factor fits pointwise but varies over the entry"));
      }
      break;
    }
    case ScreenFitKind::DegenerateZero: {
      out.push_back(sampled_check(
          ctx, "conformal-screen", 1e-9,
          [](const SampleData& sd, Accum& acc) {
            acc.add(max_abs(sd.ip.an));
            acc.add(max_abs(sd.ip.astar));
          },
          "both shape operators vanish"));
      out.push_back(skipped(ctx, "conformal-screen-factor", "no-screen-factor",
                            "both shape operators vanish; any factor fits"));
      break;
    }
    case ScreenFitKind::None: {
      double max_fit = 0.0;
      for (const SampleData& sd : ctx.samples) {
        ConformalScreenFit fit = conformal_screen_fit(sd.ip);
        if (!fit.both_zero) max_fit = std::max(max_fit, fit.residual);
      }
      out.push_back(shortfall(ctx, "conformal-screen", static_cast<int>(ctx.samples.size()),
                              kWitnessFloor, max_fit, "max single-factor fit residual"));
      out.push_back(skipped(ctx, "conformal-screen-factor", "no-screen-factor",
                            "no single factor fits this entry"));
      break;
    }
  }
}

// --------------------------------------------------------------------------
// frozen expected values
// --------------------------------------------------------------------------

void add_expected_checks(const EntryContext& ctx, std::vector<CheckResult>& out) {
  const CatalogEntry& entry = *ctx.entry;
  for (const auto& [key, exp] : entry.expected) {
    std::string id = "expected:" + key;
    if (!ctx.default_sign) {
      out.push_back(skipped(ctx, id, "requires-default-sign-convention"));
      continue;
    }
    if (!ctx.catalog_frame) {
      out.push_back(skipped(ctx, id, "requires-catalog-rigging"));
      continue;
    }
    double got = evaluate_quantity(entry, key);
    Accum acc;
    acc.add(got - exp.value);
    out.push_back(measured(ctx, id, 1, acc, exp.tol,
                           provenance_name(exp.prov) + " value " + sci(exp.value) +
                               ", measured " + sci(got)));
  }
}

// --------------------------------------------------------------------------
// finite-difference oracles
// --------------------------------------------------------------------------

// Richardson-extrapolated central difference of a matrix-valued map along
// one chart coordinate.
template <class F>
MatrixD fd_matrix_dir(F&& f, const VectorD& u, int dir, double h) {
  auto at = [&](double t) {
    VectorD v = u;
    v[static_cast<std::size_t>(dir)] += t;
    return f(v);
  };
  MatrixD p1 = at(h);
  MatrixD m1 = at(-h);
  MatrixD p2 = at(h / 2.0);
  MatrixD m2 = at(-h / 2.0);
  MatrixD out(p1.rows(), p1.cols());
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) {
      double d1 = (p1(i, j) - m1(i, j)) / (2.0 * h);
      double d2 = (p2(i, j) - m2(i, j)) / h;
      out(i, j) = (4.0 * d2 - d1) / 3.0;
    }
  return out;
}

template <class F>
Tensor3<double> fd_tensor3_dir(F&& f, const VectorD& u, int dir, double h) {
  auto at = [&](double t) {
    VectorD v = u;
    v[static_cast<std::size_t>(dir)] += t;
    return f(v);
  };
  Tensor3<double> p1 = at(h);
  Tensor3<double> m1 = at(-h);
  Tensor3<double> p2 = at(h / 2.0);
  Tensor3<double> m2 = at(-h / 2.0);
  Tensor3<double> out(p1.dim0(), p1.dim1(), p1.dim2());
  for (int a = 0; a < out.dim0(); ++a)
    for (int b = 0; b < out.dim1(); ++b)
      for (int c = 0; c < out.dim2(); ++c) {
        double d1 = (p1(a, b, c) - m1(a, b, c)) / (2.0 * h);
        double d2 = (p2(a, b, c) - m2(a, b, c)) / h;
        out(a, b, c) = (4.0 * d2 - d1) / 3.0;
      }
  return out;
}

void add_oracle_checks(const EntryContext& ctx, std::vector<CheckResult>& out) {
  const CatalogEntry& entry = *ctx.entry;
  const Ambient& amb = entry.ambient;
  const ImmersionField& f = *entry.immersion;
  const FrameOptions& opt = ctx.opt;
  const int nprobe = 10;
  const double h = 1e-4;
  FinDiffConfig cfg;

  Sampler rng(mix_seed(ctx.run->seed + 1, hash_name(entry.id)));
  Box box = f.domain();
  std::vector<VectorD> probes;
  probes.reserve(nprobe);
  for (int s = 0; s < nprobe; ++s) probes.push_back(sample_point(box, rng, 5e-2));

  const int n = f.chart_dim();
  const int m = f.ambient_dim();

  auto frame_at = [&](const VectorD& uu) { return build_frame<double>(amb, f, opt, uu); };

  {
    Accum acc;
    for (const VectorD& u : probes) {
      FramePoint<double> fp = frame_at(u);
      for (int a = 0; a < n; ++a) {
        VectorD dir(static_cast<std::size_t>(n), 0.0);
        dir[static_cast<std::size_t>(a)] = 1.0;
        for (int c = 0; c < m; ++c) {
          double fd = fd_derivative(
              [&](const VectorD& uu) { return f.eval(uu)[static_cast<std::size_t>(c)]; }, u, dir,
              cfg);
          acc.add(fd - fp.jac(c, a));
        }
      }
    }
    out.push_back(measured(ctx, "oracle-immersion-derivative", nprobe, acc, 1e-5));
  }

  {
    Accum acc;
    for (const VectorD& u : probes) {
      InducedPoint<double> ip = build_induced<double>(amb, f, opt, u);
      for (int a = 0; a < n; ++a) {
        MatrixD dg_fd = fd_matrix_dir([&](const VectorD& uu) { return frame_at(uu).g; }, u, a, h);
        MatrixD dgt_fd =
            fd_matrix_dir([&](const VectorD& uu) { return frame_at(uu).gtilde; }, u, a, h);
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            acc.add(dg_fd(b, c) - ip.dg(a, b, c));
            acc.add(dgt_fd(b, c) - ip.dgtilde(a, b, c));
          }
      }
    }
    out.push_back(measured(ctx, "oracle-metric-derivative", nprobe, acc, 1e-5));
  }

  {
    Accum acc;
    for (const VectorD& u : probes) {
      InducedPoint<double> ip = build_induced<double>(amb, f, opt, u);
      const FramePoint<double>& fp = ip.frame;
      for (int i = 0; i < fp.r; ++i) {
        MatrixD recon_xi = dxi_ambient(ip, i);
        MatrixD recon_n = dn_ambient(ip, i);
        for (int a = 0; a < n; ++a) {
          MatrixD rows_fd = fd_matrix_dir(
              [&](const VectorD& uu) {
                FramePoint<double> fq = frame_at(uu);
                MatrixD rows(2, m);
                for (int c = 0; c < m; ++c) {
                  rows(0, c) = fq.radical_amb(i, c);
                  rows(1, c) = fq.n_amb(i, c);
                }
                return rows;
              },
              u, a, h);
          for (int c = 0; c < m; ++c) {
            double cov_xi = rows_fd(0, c);
            double cov_n = rows_fd(1, c);
            for (int dd = 0; dd < m; ++dd)
              for (int e = 0; e < m; ++e) {
                cov_xi += ip.gammabar(c, dd, e) * fp.jac(dd, a) * fp.radical_amb(i, e);
                cov_n += ip.gammabar(c, dd, e) * fp.jac(dd, a) * fp.n_amb(i, e);
              }
            acc.add(cov_xi - recon_xi(a, c));
            acc.add(cov_n - recon_n(a, c));
          }
        }
      }
    }
    out.push_back(measured(ctx, "oracle-frame-derivative", nprobe, acc, 1e-5));
  }

  {
    Accum acc;
    for (const VectorD& u : probes) {
      InducedPoint<double> ip = build_induced<double>(amb, f, opt, u);
      const FramePoint<double>& fp = ip.frame;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          VectorD da(static_cast<std::size_t>(n), 0.0);
          VectorD db(static_cast<std::size_t>(n), 0.0);
          da[static_cast<std::size_t>(a)] = 1.0;
          db[static_cast<std::size_t>(b)] = 1.0;
          VectorD v(static_cast<std::size_t>(m), 0.0);
          for (int c = 0; c < m; ++c) {
            double second = fd_second(
                [&](const VectorD& uu) { return f.eval(uu)[static_cast<std::size_t>(c)]; }, u, da,
                db, cfg);
            double acc_c = second;
            for (int dd = 0; dd < m; ++dd)
              for (int e = 0; e < m; ++e)
                acc_c += ip.gammabar(c, dd, e) * fp.jac(dd, a) * fp.jac(e, b);
            v[static_cast<std::size_t>(c)] = acc_c;
          }
          detail::FrameSplit<double> split = detail::split_ambient(fp, v);
          for (int c = 0; c < n; ++c)
            acc.add(split.tangent_chart[static_cast<std::size_t>(c)] - ip.gamma(c, a, b));
          for (int i = 0; i < fp.r; ++i)
            acc.add(split.lightlike[static_cast<std::size_t>(i)] - ip.hl(i, a, b));
          for (int al = 0; al < fp.k - fp.r; ++al)
            acc.add(split.st[static_cast<std::size_t>(al)] - ip.hs(al, a, b));
        }
      MatrixD gtinv = inverse(fp.gtilde);
      std::vector<MatrixD> dgt(static_cast<std::size_t>(n));
      for (int a = 0; a < n; ++a)
        dgt[static_cast<std::size_t>(a)] =
            fd_matrix_dir([&](const VectorD& uu) { return frame_at(uu).gtilde; }, u, a, h);
      for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            double v = 0.0;
            for (int d = 0; d < n; ++d)
              v += gtinv(c, d) * (dgt[static_cast<std::size_t>(a)](b, d) +
                                  dgt[static_cast<std::size_t>(b)](a, d) -
                                  dgt[static_cast<std::size_t>(d)](a, b));
            acc.add(0.5 * v - ip.gamma_tilde(c, a, b));
          }
    }
    out.push_back(measured(ctx, "oracle-connection", nprobe, acc, 1e-5));
  }

  {
    Accum acc;
    for (const VectorD& u : probes) {
      InducedPoint<J1> jets = build_induced<J1>(amb, f, opt, lift(u, 1));
      Tensor4<double> rind = curvature_from_jets(jets.gamma);
      Tensor4<double> rtilde = curvature_from_jets(jets.gamma_tilde);
      Tensor3<double> gam = values(jets.gamma);
      Tensor3<double> gamt = values(jets.gamma_tilde);

      std::vector<Tensor3<double>> dgam(static_cast<std::size_t>(n));
      std::vector<Tensor3<double>> dgamt(static_cast<std::size_t>(n));
      for (int a = 0; a < n; ++a) {
        dgam[static_cast<std::size_t>(a)] = fd_tensor3_dir(
            [&](const VectorD& uu) { return build_induced<double>(amb, f, opt, uu).gamma; }, u, a,
            h);
        dgamt[static_cast<std::size_t>(a)] = fd_tensor3_dir(
            [&](const VectorD& uu) {
              return build_induced<double>(amb, f, opt, uu).gamma_tilde;
            },
            u, a, h);
      }
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) {
              double fd_ind = dgam[static_cast<std::size_t>(a)](d, b, c) -
                              dgam[static_cast<std::size_t>(b)](d, a, c);
              double fd_til = dgamt[static_cast<std::size_t>(a)](d, b, c) -
                              dgamt[static_cast<std::size_t>(b)](d, a, c);
              for (int e = 0; e < n; ++e) {
                fd_ind += gam(d, a, e) * gam(e, b, c) - gam(d, b, e) * gam(e, a, c);
                fd_til += gamt(d, a, e) * gamt(e, b, c) - gamt(d, b, e) * gamt(e, a, c);
              }
              acc.add(fd_ind - rind(a, b, c, d));
              acc.add(fd_til - rtilde(a, b, c, d));
            }
    }
    out.push_back(measured(ctx, "oracle-curvature", nprobe, acc, 1e-5));
  }
}

// --------------------------------------------------------------------------
// runner
// --------------------------------------------------------------------------

void validate_options(const RunOptions& run) {
  if (!suite_known(run.suite)) throw ConfigError("unknown suite: " + run.suite);
  if (run.samples < 1) throw ConfigError("samples must be at least 1");
  if (run.sign_convention != 1 && run.sign_convention != -1)
    throw ConfigError("sign convention must be +1 or -1");
  if (run.rigging != "catalog" && run.rigging != "auto")
    throw ConfigError("rigging mode must be 'catalog' or 'auto'");
}

EntryContext build_context(const CatalogEntry& entry, const RunOptions& run) {
  EntryContext ctx;
  ctx.entry = &entry;
  ctx.run = &run;
  ctx.opt = run.rigging == "catalog" ? entry.options : FrameOptions{};
  ctx.opt.sign_eps = run.sign_convention;
  ctx.catalog_frame = run.rigging == "catalog" || !entry.has_frame_overrides();
  ctx.default_sign = run.sign_convention == +1;

  Sampler rng(mix_seed(run.seed, hash_name(entry.id)));
  Box box = entry.immersion->domain();
  ctx.samples.reserve(static_cast<std::size_t>(run.samples));
  for (int s = 0; s < run.samples; ++s) {
    SampleData sd;
    sd.u = sample_point(box, rng);
    sd.jets = build_induced<J1>(entry.ambient, *entry.immersion, ctx.opt, lift(sd.u, 1));
    sd.ip = value_point(sd.jets);
    ctx.max_domega = std::max(ctx.max_domega, max_abs(sd.ip.domega));

    double sample_fit = 0.0;
    for (const ConformalRiggingFit& fit : conformal_rigging_fit(sd.ip))
      sample_fit = std::max(sample_fit, fit.residual);
    ctx.max_conformal = std::max(ctx.max_conformal, sample_fit);
    ctx.samples.push_back(std::move(sd));
  }
  ctx.measured_closed = ctx.max_domega < kClosedGate;
  ctx.measured_conformal = ctx.max_conformal < kConformalGate;

  ctx.curv_count = std::min(run.samples, kCurvatureSampleCap);
  ctx.rind.reserve(static_cast<std::size_t>(ctx.curv_count));
  ctx.rtilde.reserve(static_cast<std::size_t>(ctx.curv_count));
  ctx.rbar.reserve(static_cast<std::size_t>(ctx.curv_count));
  for (int s = 0; s < ctx.curv_count; ++s) {
    const SampleData& sd = ctx.samples[static_cast<std::size_t>(s)];
    ctx.rind.push_back(curvature_from_jets(sd.jets.gamma));
    ctx.rtilde.push_back(curvature_from_jets(sd.jets.gamma_tilde));
    ctx.rbar.push_back(pullback_ambient_curvature(entry.ambient, sd.ip.frame));
  }
  return ctx;
}

}  // namespace

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all",        "frames",    "metric",
                                                 "connection", "curvature", "conformal"};
  return names;
}

bool suite_known(const std::string& suite) {
  const std::vector<std::string>& names = suite_names();
  return std::find(names.begin(), names.end(), suite) != names.end();
}

ConformalScreenFit conformal_screen_fit(const InducedPoint<double>& ip) {
  Tensor3<double> gan = gan_pairing(ip);
  Tensor3<double> gstar = gstar_pairing(ip);
  const int r = gan.dim0();
  const int n = gan.dim1();
  double saa = 0.0;
  double sab = 0.0;
  double sbb = 0.0;
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        double x = gstar(i, a, b);
        double y = gan(i, a, b);
        saa += x * x;
        sab += x * y;
        sbb += y * y;
      }
  ConformalScreenFit fit;
  if (saa < 1e-20) {
    fit.both_zero = sbb < 1e-20;
    fit.factor = 0.0;
    double dev = 0.0;
    for (int i = 0; i < r; ++i)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) dev = std::max(dev, std::abs(gan(i, a, b)));
    fit.residual = dev;
    return fit;
  }
  fit.factor = sab / saa;
  double dev = 0.0;
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        dev = std::max(dev, std::abs(gan(i, a, b) - fit.factor * gstar(i, a, b)));
  fit.residual = dev;
  return fit;
}

std::vector<ConformalRiggingFit> conformal_rigging_fit(const InducedPoint<double>& ip) {
  const FramePoint<double>& fp = ip.frame;
  const int n = fp.n;
  const int r = fp.r;
  Tensor3<double> gan = gan_pairing(ip);
  std::vector<ConformalRiggingFit> out;
  out.reserve(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    MatrixD smat(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        double v = -gan(i, a, b) - gan(i, b, a);
        for (int j = 0; j < r; ++j)
          v += ip.tau(i, j, a) * fp.omega(j, b) + ip.tau(i, j, b) * fp.omega(j, a);
        smat(a, b) = v;
      }
    double num = 0.0;
    double den = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        num += smat(a, b) * fp.g(a, b);
        den += fp.g(a, b) * fp.g(a, b);
      }
    ConformalRiggingFit fit;
    fit.lambda = den > 0.0 ? num / den : 0.0;
    double dev = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        dev = std::max(dev, std::abs(smat(a, b) - fit.lambda * fp.g(a, b)));
    fit.residual = dev;
    out.push_back(fit);
  }
  return out;
}

Tensor3<double> connection_jump(const InducedPoint<double>& ip) {
  const FramePoint<double>& fp = ip.frame;
  const int n = fp.n;
  const int r = fp.r;
  const double eps = static_cast<double>(fp.sign_eps);
  Tensor3<double> gan = gan_pairing(ip);
  Tensor3<double> jump(r, n, n);
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        double sym = -gan(i, a, b) - gan(i, b, a);
        for (int j = 0; j < r; ++j)
          sym += ip.tau(i, j, a) * fp.omega(j, b) + ip.tau(i, j, b) * fp.omega(j, a);
        jump(i, a, b) = eps * ip.hl(i, a, b) + 0.5 * sym;
      }
  return jump;
}

RadicalDisplayConstants radical_display_constants() { return {}; }

double radical_display_residual(const InducedPoint<double>& ip, const Tensor4<double>& rtilde,
                                const Tensor4<double>& rind, const RadicalDisplayConstants& k) {
  const FramePoint<double>& fp = ip.frame;
  const int n = fp.n;
  const int r = fp.r;
  Tensor3<double> gstar = gstar_pairing(ip);
  Tensor3<double> ganxi(r, r, n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int b = 0; b < n; ++b) {
        double v = 0.0;
        for (int ap = 0; ap < n; ++ap)
          for (int cp = 0; cp < n; ++cp)
            v += ip.an[static_cast<std::size_t>(i)](cp, ap) * fp.radical_chart(j, ap) *
                 fp.g(cp, b);
        ganxi(i, j, b) = v;
      }
  double out = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int j = 0; j < r; ++j) {
          double lhs = 0.0;
          for (int d = 0; d < n; ++d)
            for (int e = 0; e < n; ++e)
              lhs += rtilde(a, b, c, d) * fp.gtilde(d, e) * fp.radical_chart(j, e);
          double rhs = 0.0;
          for (int cp = 0; cp < n; ++cp)
            for (int d = 0; d < n; ++d)
              rhs += k.curvature * rind(a, b, cp, d) * fp.radical_chart(j, cp) * fp.g(d, c);
          for (int i = 0; i < r; ++i)
            rhs += k.shape * (ganxi(i, j, b) * gstar(i, a, c) - ganxi(i, j, a) * gstar(i, b, c));
          rhs += k.rotation *
                 (ip.tau(j, j, a) * gstar(j, b, c) - ip.tau(j, j, b) * gstar(j, a, c));
          out = std::max(out, std::abs(lhs - rhs));
        }
  return out;
}

double evaluate_quantity(const CatalogEntry& entry, const std::string& key) {
  if (entry.rejected)
    throw ConfigError("catalog entry '" + entry.id + "' is rejected and has no probe values");
  const Ambient& amb = entry.ambient;
  const ImmersionField& f = *entry.immersion;
  const FrameOptions& opt = entry.options;
  const VectorD& u = entry.probe;

  if (key == "r_ind_max") return max_abs(induced_curvature(amb, f, opt, u));
  if (key == "r_tilde_max") return max_abs(rigged_curvature(amb, f, opt, u));
  if (key == "r_tilde_0110") return rigged_curvature(amb, f, opt, u)(0, 1, 1, 0);

  InducedPoint<double> ip = build_induced<double>(amb, f, opt, u);
  const FramePoint<double>& fp = ip.frame;
  if (key == "rank_r") return static_cast<double>(fp.r);
  if (key == "A_N") return max_abs(ip.an);
  if (key == "h_l_max") return max_abs(ip.hl);
  if (key == "h_s_max") return max_abs(ip.hs);
  if (key == "a_w_max") return max_abs(ip.aw);
  if (key == "tau_max") return max_abs(ip.tau);
  if (key == "tau_s") return ip.tau(0, 0, 0);
  if (key == "tau_of_xi") {
    double out = 0.0;
    for (int i = 0; i < fp.r; ++i)
      for (int j = 0; j < fp.r; ++j)
        for (int l = 0; l < fp.r; ++l) {
          double v = 0.0;
          for (int a = 0; a < fp.n; ++a) v += ip.tau(i, j, a) * fp.radical_chart(l, a);
          out = std::max(out, std::abs(v));
        }
    return out;
  }
  if (key == "a_star_frobenius") {
    double sum = 0.0;
    for (const MatrixD& mtx : ip.astar)
      for (int c = 0; c < mtx.rows(); ++c)
        for (int a = 0; a < mtx.cols(); ++a) sum += mtx(c, a) * mtx(c, a);
    return std::sqrt(sum);
  }
  if (key == "gtilde_00") return fp.gtilde(0, 0);
  if (key == "gtilde_11") return fp.gtilde(1, 1);
  if (key == "gtilde_22") return fp.gtilde(2, 2);
  if (key == "gtilde_index") return static_cast<double>(signature_counts(fp.gtilde).negative);
  if (key == "domega_max") return max_abs(ip.domega);
  if (key == "conformal_screen_factor") return conformal_screen_fit(ip).factor;
  throw ConfigError("unknown expected-value key '" + key + "'");
}

EntryResult run_entry(const CatalogEntry& entry, const RunOptions& run) {
  validate_options(run);
  if (entry.rejected)
    throw ConfigError("catalog entry '" + entry.id + "' has an unsupported classification (" +
                      entry.rejection + ")");

  EntryContext ctx = build_context(entry, run);

  EntryResult result;
  result.entry_id = entry.id;
  result.title = entry.title;
  result.classification = class_name(ctx.samples.front().ip.frame.cls);

  const bool all = run.suite == "all";
  if (all || run.suite == "frames") add_frame_checks(ctx, result.checks);
  if (all || run.suite == "metric") add_metric_checks(ctx, result.checks);
  if (all || run.suite == "connection") add_connection_checks(ctx, result.checks);
  if (all || run.suite == "curvature") add_curvature_checks(ctx, result.checks);
  if (all || run.suite == "conformal") add_conformal_checks(ctx, result.checks);
  if (all) {
    add_expected_checks(ctx, result.checks);
    add_oracle_checks(ctx, result.checks);
  }
  return result;
}

std::vector<EntryResult> run_catalog_suite(const RunOptions& run) {
  validate_options(run);
  std::vector<const CatalogEntry*> todo;
  for (const CatalogEntry& entry : catalog())
    if (!entry.rejected) todo.push_back(&entry);
  std::vector<std::future<EntryResult>> futures;
  futures.reserve(todo.size());
  for (const CatalogEntry* entry : todo)
    futures.push_back(std::async(std::launch::async,
                                 [entry, run]() { return run_entry(*entry, run); }));
  std::vector<EntryResult> out;
  out.reserve(todo.size());
  for (std::future<EntryResult>& fut : futures) out.push_back(fut.get());
  return out;
}

}  // namespace nullrig
