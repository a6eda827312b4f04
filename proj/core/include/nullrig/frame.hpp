// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nullrig/ambient.hpp"
#include "nullrig/errors.hpp"
#include "nullrig/fields.hpp"
#include "nullrig/tensor.hpp"

namespace nullrig {

enum class NullClass { RLightlike, Coisotropic, Isotropic, TotallyNull };

inline std::string class_name(NullClass c) {
  switch (c) {
    case NullClass::RLightlike: return "r-lightlike";
    case NullClass::Coisotropic: return "coisotropic";
    case NullClass::Isotropic: return "isotropic";
    case NullClass::TotallyNull: return "totally-null";
  }
  return "?";
}

// n = submanifold dimension, k = codimension, r = nullity degree (1 <= r).
inline NullClass classify(int n, int k, int r) {
  if (r == n && r == k) return NullClass::TotallyNull;
  if (r == k && r < n) return NullClass::Coisotropic;
  if (r == n && r < k) return NullClass::Isotropic;
  return NullClass::RLightlike;
}

struct ScreenShift {
  int screen_index = 0;
  int radical_index = 0;
  AffineScalar shift;
};

struct FrameOptions {
  std::vector<AffineScalar> radical_scale;
  std::vector<ScreenShift> screen_shifts;
  int sign_eps = +1;
  double rank_tol = 1e-8;
};

template <class T>
struct FramePoint {
  int n = 0;
  int k = 0;
  int r = 0;
  int sign_eps = +1;
  NullClass cls = NullClass::Coisotropic;
  Vector<T> u;
  Vector<T> x;
  Matrix<T> jac;           // jac(c, j) = d phi^c / d u^j
  Matrix<T> gbar;          // ambient metric at x
  Matrix<T> g;             // pullback metric on the chart
  Matrix<T> radical_chart; // r x n, rows are chart components of xi_i
  Matrix<T> radical_amb;   // r x m
  Matrix<T> screen_chart;  // (n-r) x n
  Matrix<T> screen_amb;    // (n-r) x m
  std::vector<int> screen_sign;
  Matrix<T> st_amb;        // (k-r) x m, signed-orthonormal screen-transversal
  std::vector<int> st_sign;
  Matrix<T> n_amb;         // r x m transversal (rigging) fields
  Matrix<T> omega;         // omega(i, a) = omega_i(d/du^a)
  Matrix<T> p_chart;       // projection onto the screen in chart coordinates
  Matrix<T> gtilde;        // rigged metric on the chart
};

namespace detail {

template <class T>
Vector<T> row_of(const Matrix<T>& m, int i) {
  return m.row(i);
}

template <class T>
void set_row(Matrix<T>& m, int i, const Vector<T>& v) {
  for (int j = 0; j < m.cols(); ++j) m(i, j) = v[static_cast<std::size_t>(j)];
}

// Gauss-Jordan elimination with full pivoting; pivot choice reads only the
// scalar shadow so the reduction stays smooth in derivative-carrying
// scalars wherever the pivot pattern is locally constant.
template <class T>
struct Elimination {
  Matrix<T> mat;
  std::vector<int> pivot_rows;
  std::vector<int> pivot_cols;
  std::vector<int> free_cols;
};

template <class T>
Elimination<T> full_pivot_eliminate(Matrix<T> a, int rank_target, double tol) {
  const int rows = a.rows();
  const int cols = a.cols();
  Elimination<T> e;
  std::vector<bool> row_used(static_cast<std::size_t>(rows), false);
  std::vector<bool> col_used(static_cast<std::size_t>(cols), false);
  for (int step = 0; step < rank_target; ++step) {
    int pi = -1;
    int pj = -1;
    double best = 0.0;
    for (int i = 0; i < rows; ++i) {
      if (row_used[static_cast<std::size_t>(i)]) continue;
      for (int j = 0; j < cols; ++j) {
        if (col_used[static_cast<std::size_t>(j)]) continue;
        double cand = std::abs(scalar_value(a(i, j)));
        if (cand > best) {
          best = cand;
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0 || best < tol)
      throw RechartError("pivot pattern break: pivot below tolerance before reaching rank");
    row_used[static_cast<std::size_t>(pi)] = true;
    col_used[static_cast<std::size_t>(pj)] = true;
    e.pivot_rows.push_back(pi);
    e.pivot_cols.push_back(pj);
    for (int i = 0; i < rows; ++i) {
      if (i == pi) continue;
      T factor = a(i, pj) / a(pi, pj);
      for (int j = 0; j < cols; ++j) a(i, j) -= factor * a(pi, j);
      a(i, pj) = T(0.0);
    }
  }
  for (int j = 0; j < cols; ++j)
    if (!col_used[static_cast<std::size_t>(j)]) e.free_cols.push_back(j);
  e.mat = std::move(a);
  return e;
}

// Kernel basis of `a` as rows, one per free column, canonicalized so the
// first coordinate above tolerance equals one.
template <class T>
Matrix<T> kernel_basis(const Matrix<T>& a, int rank, double tol) {
  Elimination<T> e = full_pivot_eliminate(a, rank, tol);
  const int cols = a.cols();
  const int nul = static_cast<int>(e.free_cols.size());
  Matrix<T> kernel(nul, cols);
  for (int v = 0; v < nul; ++v) {
    int f = e.free_cols[static_cast<std::size_t>(v)];
    kernel(v, f) = T(1.0);
    for (int p = 0; p < rank; ++p) {
      int pi = e.pivot_rows[static_cast<std::size_t>(p)];
      int pj = e.pivot_cols[static_cast<std::size_t>(p)];
      kernel(v, pj) = T(-1.0) * e.mat(pi, f) / e.mat(pi, pj);
    }
    int lead = -1;
    for (int j = 0; j < cols; ++j) {
      if (std::abs(scalar_value(kernel(v, j))) > tol) {
        lead = j;
        break;
      }
    }
    if (lead < 0) throw RechartError("kernel vector vanished");
    T scale = kernel(v, lead);
    for (int j = 0; j < cols; ++j) kernel(v, j) /= scale;
  }
  return kernel;
}

// Signed Gram-Schmidt over `candidates` rows with respect to the bilinear
// form `form`, skipping candidates that collapse below tolerance (they lie
// in the span of null directions).  Falls back to pairwise combinations of
// the skipped candidates, which resolves hyperbolic-pair blocks.
template <class T>
bool signed_gram_schmidt(const Matrix<T>& form, const std::vector<Vector<T>>& candidates,
                         int needed, double tol, std::vector<Vector<T>>& out,
                         std::vector<int>& signs) {
  std::vector<Vector<T>> deferred;
  auto try_accept = [&](Vector<T> w) {
    using std::abs;
    using std::sqrt;
    for (std::size_t a = 0; a < out.size(); ++a) {
      T coeff = T(static_cast<double>(signs[a])) * bilinear(form, out[a], w);
      w = vsub(w, vscale(coeff, out[a]));
    }
    T nu = bilinear(form, w, w);
    double shadow = scalar_value(nu);
    if (std::abs(shadow) < tol) {
      deferred.push_back(std::move(w));
      return false;
    }
    int sgn = shadow > 0.0 ? +1 : -1;
    T inv_len = T(1.0) / sqrt(abs(nu));
    out.push_back(vscale(inv_len, w));
    signs.push_back(sgn);
    return true;
  };
  for (const Vector<T>& c : candidates) {
    if (static_cast<int>(out.size()) >= needed) break;
    try_accept(c);
  }
  if (static_cast<int>(out.size()) < needed) {
    std::vector<Vector<T>> pool = std::move(deferred);
    deferred.clear();
    for (std::size_t i = 0; i < pool.size() && static_cast<int>(out.size()) < needed; ++i) {
      for (std::size_t j = i + 1; j < pool.size() && static_cast<int>(out.size()) < needed; ++j) {
        try_accept(vadd(pool[i], pool[j]));
        if (static_cast<int>(out.size()) < needed) try_accept(vsub(pool[i], pool[j]));
      }
    }
  }
  return static_cast<int>(out.size()) >= needed;
}

inline void next_combination_init(std::vector<int>& idx, int r) {
  idx.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
}

inline bool next_combination(std::vector<int>& idx, int m) {
  int r = static_cast<int>(idx.size());
  for (int i = r - 1; i >= 0; --i) {
    if (idx[static_cast<std::size_t>(i)] < m - r + i) {
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < r; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Builds the pointwise null frame: pullback metric, radical, screen,
// screen-transversal, null transversal fields, rigging 1-forms, screen
// projection, and the rigged metric.  Every branch decision reads only
// the scalar shadow, so the construction is smooth on regions where the
// pivot/sign pattern is constant and can run on derivative-carrying
// scalars for higher-order differentiation.
template <class T>
FramePoint<T> build_frame(const Ambient& amb, const ImmersionField& f, const FrameOptions& opt,
                          const Vector<T>& u) {
  FramePoint<T> fp;
  const int n = f.chart_dim();
  const int m = f.ambient_dim();
  if (m != amb.dim) throw ConfigError("immersion target dimension does not match ambient");
  const int k = m - n;
  fp.n = n;
  fp.k = k;
  fp.sign_eps = opt.sign_eps;
  fp.u = u;

  Vector<Jet<T>> uj = lift_over<T>(u, 1);
  Vector<Jet<T>> xj = f.eval(uj);
  fp.x.assign(static_cast<std::size_t>(m), T(0.0));
  fp.jac = Matrix<T>(m, n);
  for (int c = 0; c < m; ++c) {
    fp.x[static_cast<std::size_t>(c)] = xj[static_cast<std::size_t>(c)].v;
    for (int j = 0; j < n; ++j) fp.jac(c, j) = xj[static_cast<std::size_t>(c)].gat(j);
  }

  MatrixD jac_shadow(m, n);
  for (int c = 0; c < m; ++c)
    for (int j = 0; j < n; ++j) jac_shadow(c, j) = scalar_value(fp.jac(c, j));
  if (matrix_rank(jac_shadow, opt.rank_tol) != n)
    throw ImmersionError("immersion Jacobian is rank-deficient at sampled point");

  fp.gbar = amb.metric->eval(fp.x);

  Matrix<T> gj = matmul(transpose(fp.jac), matmul(fp.gbar, fp.jac));
  fp.g = Matrix<T>(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) fp.g(i, j) = T(0.5) * (gj(i, j) + gj(j, i));

  MatrixD g_shadow(n, n);
  double g_scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      g_shadow(i, j) = scalar_value(fp.g(i, j));
      g_scale = std::max(g_scale, std::abs(g_shadow(i, j)));
    }
  const double tol = opt.rank_tol * std::max(g_scale, 1.0);
  const int g_rank = matrix_rank(g_shadow, opt.rank_tol);
  const int r = n - g_rank;
  if (r == 0) throw NotNullError("pullback metric is nondegenerate (not a null submanifold)");
  fp.r = r;
  fp.cls = classify(n, k, r);
  if (fp.cls == NullClass::Isotropic || fp.cls == NullClass::TotallyNull)
    throw UnsupportedError("unsupported classification: " + class_name(fp.cls));

  fp.radical_chart = detail::kernel_basis(fp.g, g_rank, tol);
  if (!opt.radical_scale.empty()) {
    if (static_cast<int>(opt.radical_scale.size()) != r)
      throw ConfigError("radical_scale count does not match nullity degree");
    for (int i = 0; i < r; ++i) {
      T psi = opt.radical_scale[static_cast<std::size_t>(i)].eval(u);
      if (std::abs(scalar_value(psi)) < tol)
        throw ConfigError("radical_scale vanishes on the sampled domain");
      for (int j = 0; j < n; ++j) fp.radical_chart(i, j) *= psi;
    }
  }
  fp.radical_amb = transpose(matmul(fp.jac, transpose(fp.radical_chart)));

  // Screen: complement of the radical spanned by coordinate directions in
  // the non-free columns of the kernel reduction.
  {
    std::vector<bool> is_free(static_cast<std::size_t>(n), false);
    auto stub = detail::full_pivot_eliminate(fp.g, g_rank, tol);
    for (int j : stub.free_cols) is_free[static_cast<std::size_t>(j)] = true;
    std::vector<Vector<T>> candidates;
    for (int j = 0; j < n; ++j) {
      if (is_free[static_cast<std::size_t>(j)]) continue;
      Vector<T> e(static_cast<std::size_t>(n), T(0.0));
      e[static_cast<std::size_t>(j)] = T(1.0);
      candidates.push_back(std::move(e));
    }
    std::vector<Vector<T>> screen;
    std::vector<int> signs;
    if (!detail::signed_gram_schmidt(fp.g, candidates, n - r, tol, screen, signs))
      throw ScreenSelectionError("could not complete a nondegenerate screen");
    fp.screen_chart = Matrix<T>(n - r, n);
    for (int a = 0; a < n - r; ++a) detail::set_row(fp.screen_chart, a, screen[static_cast<std::size_t>(a)]);
    fp.screen_sign = signs;
  }

  for (const ScreenShift& sh : opt.screen_shifts) {
    if (sh.screen_index < 0 || sh.screen_index >= n - r || sh.radical_index < 0 ||
        sh.radical_index >= r)
      throw ConfigError("screen shift indices out of range");
    T p = sh.shift.eval(u);
    for (int j = 0; j < n; ++j)
      fp.screen_chart(sh.screen_index, j) += p * fp.radical_chart(sh.radical_index, j);
  }
  fp.screen_amb = transpose(matmul(fp.jac, transpose(fp.screen_chart)));

  // Screen-transversal: signed-orthonormal complement of the radical
  // inside TM-perp = ker(J^t gbar).
  {
    Matrix<T> b = matmul(transpose(fp.jac), fp.gbar);
    Matrix<T> perp = detail::kernel_basis(b, n, tol);
    if (perp.rows() != k) throw RechartError("normal bundle has unexpected dimension");
    std::vector<Vector<T>> candidates;
    for (int l = 0; l < k; ++l) candidates.push_back(detail::row_of(perp, l));
    std::vector<Vector<T>> st;
    std::vector<int> signs;
    if (!detail::signed_gram_schmidt(fp.gbar, candidates, k - r, tol, st, signs))
      throw ScreenSelectionError("could not complete a nondegenerate screen-transversal");
    fp.st_amb = Matrix<T>(k - r, m);
    for (int a = 0; a < k - r; ++a) detail::set_row(fp.st_amb, a, st[static_cast<std::size_t>(a)]);
    fp.st_sign = signs;
  }

  // Null transversal fields: seed with the first ambient coordinate subset
  // pairing invertibly with the radical, project off screen and
  // screen-transversal parts, then null-correct.
  {
    std::vector<int> idx;
    detail::next_combination_init(idx, r);
    bool found = false;
    Matrix<T> gram(r, r);
    std::vector<int> chosen;
    do {
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          T acc(0.0);
          for (int c = 0; c < m; ++c)
            acc += fp.gbar(idx[static_cast<std::size_t>(i)], c) * fp.radical_amb(j, c);
          gram(i, j) = acc;
        }
      if (std::abs(scalar_value(det(gram))) > 1e-8) {
        chosen = idx;
        found = true;
        break;
      }
    } while (detail::next_combination(idx, m));
    if (!found) throw TransversalError("no ambient coordinate subset pairs invertibly with the radical");

    Matrix<T> ginv = inverse(gram);
    Matrix<T> w(r, m);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        w(i, chosen[static_cast<std::size_t>(j)]) += ginv(i, j);

    for (int i = 0; i < r; ++i) {
      Vector<T> wi = detail::row_of(w, i);
      for (int a = 0; a < n - r; ++a) {
        Vector<T> ea = detail::row_of(fp.screen_amb, a);
        T coeff = T(static_cast<double>(fp.screen_sign[static_cast<std::size_t>(a)])) *
                  bilinear(fp.gbar, wi, ea);
        wi = vsub(wi, vscale(coeff, ea));
      }
      for (int a = 0; a < k - r; ++a) {
        Vector<T> wa = detail::row_of(fp.st_amb, a);
        T coeff = T(static_cast<double>(fp.st_sign[static_cast<std::size_t>(a)])) *
                  bilinear(fp.gbar, wi, wa);
        wi = vsub(wi, vscale(coeff, wa));
      }
      detail::set_row(w, i, wi);
    }

    fp.n_amb = Matrix<T>(r, m);
    Matrix<T> wg(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        wg(i, j) = bilinear(fp.gbar, detail::row_of(w, i), detail::row_of(w, j));
    for (int i = 0; i < r; ++i) {
      Vector<T> ni = detail::row_of(w, i);
      for (int j = 0; j < r; ++j) {
        T coeff = T(0.5) * wg(i, j);
        ni = vsub(ni, vscale(coeff, detail::row_of(fp.radical_amb, j)));
      }
      detail::set_row(fp.n_amb, i, ni);
    }
  }

  fp.omega = Matrix<T>(r, n);
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < n; ++a) {
      T acc(0.0);
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) acc += fp.jac(c, a) * fp.gbar(c, d) * fp.n_amb(i, d);
      fp.omega(i, a) = acc;
    }

  fp.p_chart = Matrix<T>::identity(n);
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) fp.p_chart(a, b) -= fp.radical_chart(i, a) * fp.omega(i, b);

  fp.gtilde = fp.g;
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        fp.gtilde(a, b) += T(static_cast<double>(opt.sign_eps)) * fp.omega(i, a) * fp.omega(i, b);

  MatrixD gt_shadow(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) gt_shadow(a, b) = scalar_value(fp.gtilde(a, b));
  if (std::abs(det(gt_shadow)) <= 1e-10)
    throw DegeneracyError("rigged metric is degenerate: frame construction is inconsistent");

  return fp;
}

// Shrinks each interval by `margin` times its length on both ends before
// drawing, keeping samples away from chart-degenerate boundaries.
inline VectorD sample_point(const Box& box, Sampler& rng, double margin = 1e-2) {
  VectorD u;
  u.reserve(box.size());
  for (const Interval& iv : box) {
    double pad = margin * (iv.hi - iv.lo);
    u.push_back(rng.uniform(iv.lo + pad, iv.hi - pad));
  }
  return u;
}

}  // namespace nullrig
