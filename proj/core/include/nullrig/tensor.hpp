// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "nullrig/errors.hpp"
#include "nullrig/jet.hpp"

namespace nullrig {

template <class T>
using Vector = std::vector<T>;

using VectorD = Vector<double>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), T(0.0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1.0);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const T& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i * cols_ + j)];
  }

  Vector<T> row(int i) const {
    Vector<T> r(static_cast<std::size_t>(cols_), T(0.0));
    for (int j = 0; j < cols_; ++j) r[static_cast<std::size_t>(j)] = (*this)(i, j);
    return r;
  }

  Vector<T> col(int j) const {
    Vector<T> c(static_cast<std::size_t>(rows_), T(0.0));
    for (int i = 0; i < rows_; ++i) c[static_cast<std::size_t>(i)] = (*this)(i, j);
    return c;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using MatrixD = Matrix<double>;

template <class T>
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(int n0, int n1, int n2)
      : n0_(n0), n1_(n1), n2_(n2),
        data_(static_cast<std::size_t>(n0) * static_cast<std::size_t>(n1) *
                  static_cast<std::size_t>(n2),
              T(0.0)) {}

  int dim0() const { return n0_; }
  int dim1() const { return n1_; }
  int dim2() const { return n2_; }

  T& operator()(int a, int b, int c) {
    return data_[static_cast<std::size_t>((a * n1_ + b) * n2_ + c)];
  }
  const T& operator()(int a, int b, int c) const {
    return data_[static_cast<std::size_t>((a * n1_ + b) * n2_ + c)];
  }

 private:
  int n0_ = 0;
  int n1_ = 0;
  int n2_ = 0;
  std::vector<T> data_;
};

template <class T>
class Tensor4 {
 public:
  Tensor4() = default;
  Tensor4(int n0, int n1, int n2, int n3)
      : n0_(n0), n1_(n1), n2_(n2), n3_(n3),
        data_(static_cast<std::size_t>(n0) * static_cast<std::size_t>(n1) *
                  static_cast<std::size_t>(n2) * static_cast<std::size_t>(n3),
              T(0.0)) {}

  int dim0() const { return n0_; }
  int dim1() const { return n1_; }
  int dim2() const { return n2_; }
  int dim3() const { return n3_; }

  T& operator()(int a, int b, int c, int d) {
    return data_[static_cast<std::size_t>(((a * n1_ + b) * n2_ + c) * n3_ + d)];
  }
  const T& operator()(int a, int b, int c, int d) const {
    return data_[static_cast<std::size_t>(((a * n1_ + b) * n2_ + c) * n3_ + d)];
  }

 private:
  int n0_ = 0;
  int n1_ = 0;
  int n2_ = 0;
  int n3_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw EvaluationError("matmul shape mismatch");
  Matrix<T> r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

template <class T>
Vector<T> matvec(const Matrix<T>& a, const Vector<T>& x) {
  if (a.cols() != static_cast<int>(x.size())) throw EvaluationError("matvec shape mismatch");
  Vector<T> r(static_cast<std::size_t>(a.rows()), T(0.0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r[static_cast<std::size_t>(i)] += a(i, j) * x[static_cast<std::size_t>(j)];
  return r;
}

template <class T>
T dot(const Vector<T>& a, const Vector<T>& b) {
  if (a.size() != b.size()) throw EvaluationError("dot shape mismatch");
  T s(0.0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
T bilinear(const Matrix<T>& g, const Vector<T>& x, const Vector<T>& y) {
  return dot(x, matvec(g, y));
}

template <class T>
Vector<T> vadd(const Vector<T>& a, const Vector<T>& b) {
  if (a.size() != b.size()) throw EvaluationError("vadd shape mismatch");
  Vector<T> r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

template <class T>
Vector<T> vsub(const Vector<T>& a, const Vector<T>& b) {
  if (a.size() != b.size()) throw EvaluationError("vsub shape mismatch");
  Vector<T> r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

template <class T>
Vector<T> vscale(const T& s, const Vector<T>& a) {
  Vector<T> r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

inline double vnorm(const VectorD& a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

template <class T>
struct LUFactors {
  Matrix<T> lu;
  std::vector<int> perm;
  int sign = 1;
};

template <class T>
LUFactors<T> lu_decompose(Matrix<T> a) {
  if (a.rows() != a.cols()) throw EvaluationError("lu_decompose needs a square matrix");
  const int n = a.rows();
  LUFactors<T> f;
  f.perm.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) f.perm[static_cast<std::size_t>(i)] = i;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(scalar_value(a(k, k)));
    for (int i = k + 1; i < n; ++i) {
      double cand = std::abs(scalar_value(a(i, k)));
      if (cand > best) {
        best = cand;
        piv = i;
      }
    }
    if (best < 1e-300) throw DegeneracyError("singular matrix in lu_decompose");
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(f.perm[static_cast<std::size_t>(k)], f.perm[static_cast<std::size_t>(piv)]);
      f.sign = -f.sign;
    }
    for (int i = k + 1; i < n; ++i) {
      a(i, k) /= a(k, k);
      const T& lik = a(i, k);
      for (int j = k + 1; j < n; ++j) a(i, j) -= lik * a(k, j);
    }
  }
  f.lu = std::move(a);
  return f;
}

template <class T>
Vector<T> lu_solve(const LUFactors<T>& f, const Vector<T>& b) {
  const int n = f.lu.rows();
  if (static_cast<int>(b.size()) != n) throw EvaluationError("lu_solve shape mismatch");
  Vector<T> x(static_cast<std::size_t>(n), T(0.0));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(f.perm[static_cast<std::size_t>(i)])];
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j)
      x[static_cast<std::size_t>(i)] -= f.lu(i, j) * x[static_cast<std::size_t>(j)];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j)
      x[static_cast<std::size_t>(i)] -= f.lu(i, j) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] /= f.lu(i, i);
  }
  return x;
}

template <class T>
Vector<T> solve(const Matrix<T>& a, const Vector<T>& b) {
  return lu_solve(lu_decompose(a), b);
}

template <class T>
Matrix<T> solve_many(const Matrix<T>& a, const Matrix<T>& b) {
  LUFactors<T> f = lu_decompose(a);
  Matrix<T> x(b.rows(), b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    Vector<T> xj = lu_solve(f, b.col(j));
    for (int i = 0; i < b.rows(); ++i) x(i, j) = xj[static_cast<std::size_t>(i)];
  }
  return x;
}

template <class T>
T det(const Matrix<T>& a) {
  if (a.rows() == 0) return T(1.0);
  LUFactors<T> f;
  try {
    f = lu_decompose(a);
  } catch (const DegeneracyError&) {
    return T(0.0);
  }
  T d(static_cast<double>(f.sign));
  for (int i = 0; i < a.rows(); ++i) d *= f.lu(i, i);
  return d;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  return solve_many(a, Matrix<T>::identity(a.rows()));
}

struct EigenSym {
  std::vector<double> values;
  MatrixD vectors;
};

// Cyclic Jacobi rotations on a symmetric matrix; columns of `vectors`
// are the eigenvectors in the order of `values`.
inline EigenSym jacobi_eigen(MatrixD a, int max_sweeps = 64) {
  if (a.rows() != a.cols()) throw EvaluationError("jacobi_eigen needs a square matrix");
  const int n = a.rows();
  MatrixD v = MatrixD::identity(n);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a(k, p);
          double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a(p, k);
          double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v(k, p);
          double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  EigenSym e;
  e.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e.values[static_cast<std::size_t>(i)] = a(i, i);
  e.vectors = std::move(v);
  return e;
}

struct SignatureCounts {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

inline SignatureCounts signature_counts(const MatrixD& sym, double rel_tol = 1e-8) {
  EigenSym e = jacobi_eigen(sym);
  double scale = 0.0;
  for (double lam : e.values) scale = std::max(scale, std::abs(lam));
  double cut = rel_tol * std::max(scale, 1e-30);
  SignatureCounts c;
  for (double lam : e.values) {
    if (lam > cut)
      ++c.positive;
    else if (lam < -cut)
      ++c.negative;
    else
      ++c.zero;
  }
  return c;
}

inline std::vector<double> singular_values(const MatrixD& a) {
  const MatrixD at = transpose(a);
  const bool tall = a.rows() >= a.cols();
  MatrixD gram = tall ? matmul(at, a) : matmul(a, at);
  EigenSym e = jacobi_eigen(gram);
  std::vector<double> s;
  s.reserve(e.values.size());
  for (double lam : e.values) s.push_back(std::sqrt(std::max(lam, 0.0)));
  std::sort(s.begin(), s.end(), std::greater<double>());
  return s;
}

inline int matrix_rank(const MatrixD& a, double rel_tol = 1e-8) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  std::vector<double> s = singular_values(a);
  double smax = s.empty() ? 0.0 : s.front();
  if (smax <= 0.0) return 0;
  int r = 0;
  for (double x : s)
    if (x > rel_tol * smax) ++r;
  return r;
}

}  // namespace nullrig
