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

class AffineImmersion : public ImmersionFieldBase<AffineImmersion> {
 public:
  AffineImmersion(MatrixD a, VectorD b, Box domain)
      : a_(std::move(a)), b_(std::move(b)), domain_(std::move(domain)) {
    if (static_cast<int>(b_.size()) != a_.rows() ||
        static_cast<int>(domain_.size()) != a_.cols())
      throw ConfigError("affine immersion shape mismatch");
  }

  static AffineImmersion identity(int n, Box domain) {
    return AffineImmersion(MatrixD::identity(n), VectorD(static_cast<std::size_t>(n), 0.0),
                           std::move(domain));
  }

  int chart_dim() const override { return a_.cols(); }
  int ambient_dim() const override { return a_.rows(); }
  Box domain() const override { return domain_; }

  std::string describe() const override {
    std::ostringstream os;
    os << "affine immersion R^" << a_.cols() << " -> R^" << a_.rows();
    return os.str();
  }

  const MatrixD& linear() const { return a_; }
  const VectorD& offset() const { return b_; }

  template <class T>
  Vector<T> eval_t(const Vector<T>& u) const {
    Vector<T> x(static_cast<std::size_t>(a_.rows()), T(0.0));
    for (int i = 0; i < a_.rows(); ++i) {
      T acc(b_[static_cast<std::size_t>(i)]);
      for (int j = 0; j < a_.cols(); ++j) acc += T(a_(i, j)) * u[static_cast<std::size_t>(j)];
      x[static_cast<std::size_t>(i)] = acc;
    }
    return x;
  }

 private:
  MatrixD a_;
  VectorD b_;
  Box domain_;
};

// Null cone s -> s * (unit sphere point); spatial dimension 2 or 3.
class ConeImmersion : public ImmersionFieldBase<ConeImmersion> {
 public:
  explicit ConeImmersion(int spatial) : spatial_(spatial) {
    if (spatial_ != 2 && spatial_ != 3) throw ConfigError("cone immersion needs spatial 2 or 3");
  }

  int chart_dim() const override { return spatial_; }
  int ambient_dim() const override { return spatial_ + 1; }

  Box domain() const override {
    if (spatial_ == 2) return {{0.5, 2.0}, {0.3, 6.0}};
    return {{0.5, 2.0}, {0.4, 2.74}, {0.3, 6.0}};
  }

  std::string describe() const override {
    std::ostringstream os;
    os << "null cone over S^" << (spatial_ - 1);
    return os.str();
  }

  template <class T>
  Vector<T> eval_t(const Vector<T>& u) const {
    using std::cos;
    using std::sin;
    const T& s = u[0];
    if (spatial_ == 2) {
      const T& psi = u[1];
      return {s, s * cos(psi), s * sin(psi)};
    }
    const T& theta = u[1];
    const T& phi = u[2];
    return {s, s * sin(theta) * cos(phi), s * sin(theta) * sin(phi), s * cos(theta)};
  }

 private:
  int spatial_;
};

// Round sphere of the given radius in R^3, chart (theta, phi) with pole
// margins baked into the domain.
class SphereImmersion : public ImmersionFieldBase<SphereImmersion> {
 public:
  explicit SphereImmersion(double radius) : radius_(radius) {
    if (!(radius_ > 0.0)) throw ConfigError("sphere immersion needs positive radius");
  }

  int chart_dim() const override { return 2; }
  int ambient_dim() const override { return 3; }
  Box domain() const override { return {{0.4, 2.74}, {0.3, 6.0}}; }

  std::string describe() const override {
    std::ostringstream os;
    os << "sphere of radius " << radius_;
    return os.str();
  }

  template <class T>
  Vector<T> eval_t(const Vector<T>& u) const {
    using std::cos;
    using std::sin;
    const T& theta = u[0];
    const T& phi = u[1];
    return {T(radius_) * sin(theta) * cos(phi), T(radius_) * sin(theta) * sin(phi),
            T(radius_) * cos(theta)};
  }

 private:
  double radius_;
};

// Graph surface (u, v) -> (u, v, u, sinh v); null for ambient signature
// (-,-,+,+) away from v = 0.
class SinhGraphImmersion : public ImmersionFieldBase<SinhGraphImmersion> {
 public:
  int chart_dim() const override { return 2; }
  int ambient_dim() const override { return 4; }
  Box domain() const override { return {{-2.0, 2.0}, {0.3, 1.5}}; }

  std::string describe() const override { return "sinh graph surface"; }

  template <class T>
  Vector<T> eval_t(const Vector<T>& u) const {
    using std::sinh;
    return {u[0], u[1], u[0], sinh(u[1])};
  }
};

// Concatenates two immersions on disjoint chart and ambient blocks.
class ProductImmersion : public ImmersionFieldBase<ProductImmersion> {
 public:
  ProductImmersion(ImmersionPtr first, ImmersionPtr second)
      : first_(std::move(first)), second_(std::move(second)) {}

  int chart_dim() const override { return first_->chart_dim() + second_->chart_dim(); }
  int ambient_dim() const override { return first_->ambient_dim() + second_->ambient_dim(); }

  Box domain() const override {
    Box b = first_->domain();
    Box b2 = second_->domain();
    b.insert(b.end(), b2.begin(), b2.end());
    return b;
  }

  std::string describe() const override {
    return "product: [" + first_->describe() + "] x [" + second_->describe() + "]";
  }

  template <class T>
  Vector<T> eval_t(const Vector<T>& u) const {
    Vector<T> u1(u.begin(), u.begin() + first_->chart_dim());
    Vector<T> u2(u.begin() + first_->chart_dim(), u.end());
    Vector<T> x = first_->eval(u1);
    Vector<T> x2 = second_->eval(u2);
    x.insert(x.end(), x2.begin(), x2.end());
    return x;
  }

 private:
  ImmersionPtr first_;
  ImmersionPtr second_;
};

}  // namespace nullrig
