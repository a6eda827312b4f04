// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>

#include "nullrig/jet.hpp"
#include "nullrig/rng.hpp"
#include "nullrig/tensor.hpp"

namespace nullrig {

// Fields expose one evaluation per scalar level so that derived quantities
// can layer differentiation passes: plain values, one pass (J1), two (J2),
// and three (J3, reached when differentiating Christoffel symbols of a
// metric that itself involves immersion derivatives).
class MetricField {
 public:
  virtual ~MetricField() = default;
  virtual int dim() const = 0;
  virtual std::string describe() const = 0;
  virtual MatrixD eval(const VectorD& x) const = 0;
  virtual Matrix<J1> eval(const Vector<J1>& x) const = 0;
  virtual Matrix<J2> eval(const Vector<J2>& x) const = 0;
  virtual Matrix<J3> eval(const Vector<J3>& x) const = 0;
};

template <class Derived>
class MetricFieldBase : public MetricField {
 public:
  MatrixD eval(const VectorD& x) const final { return self().template eval_t<double>(x); }
  Matrix<J1> eval(const Vector<J1>& x) const final { return self().template eval_t<J1>(x); }
  Matrix<J2> eval(const Vector<J2>& x) const final { return self().template eval_t<J2>(x); }
  Matrix<J3> eval(const Vector<J3>& x) const final { return self().template eval_t<J3>(x); }

 private:
  const Derived& self() const { return static_cast<const Derived&>(*this); }
};

class ImmersionField {
 public:
  virtual ~ImmersionField() = default;
  virtual int chart_dim() const = 0;
  virtual int ambient_dim() const = 0;
  virtual Box domain() const = 0;
  virtual std::string describe() const = 0;
  virtual VectorD eval(const VectorD& u) const = 0;
  virtual Vector<J1> eval(const Vector<J1>& u) const = 0;
  virtual Vector<J2> eval(const Vector<J2>& u) const = 0;
  virtual Vector<J3> eval(const Vector<J3>& u) const = 0;
};

template <class Derived>
class ImmersionFieldBase : public ImmersionField {
 public:
  VectorD eval(const VectorD& u) const final { return self().template eval_t<double>(u); }
  Vector<J1> eval(const Vector<J1>& u) const final { return self().template eval_t<J1>(u); }
  Vector<J2> eval(const Vector<J2>& u) const final { return self().template eval_t<J2>(u); }
  Vector<J3> eval(const Vector<J3>& u) const final { return self().template eval_t<J3>(u); }

 private:
  const Derived& self() const { return static_cast<const Derived&>(*this); }
};

// Scalar field c0 + c.u on the chart, used for frame overrides that must
// stay evaluable on derivative-carrying scalars.
struct AffineScalar {
  double c0 = 0.0;
  VectorD c;

  template <class T>
  T eval(const Vector<T>& u) const {
    T acc(c0);
    for (std::size_t i = 0; i < c.size() && i < u.size(); ++i) acc += T(c[i]) * u[i];
    return acc;
  }

  bool is_constant_one() const {
    if (c0 != 1.0) return false;
    for (double x : c)
      if (x != 0.0) return false;
    return true;
  }
};

using MetricPtr = std::shared_ptr<const MetricField>;
using ImmersionPtr = std::shared_ptr<const ImmersionField>;

}  // namespace nullrig
