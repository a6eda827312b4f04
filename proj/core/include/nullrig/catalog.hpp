// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "nullrig/ambient.hpp"
#include "nullrig/frame.hpp"
#include "nullrig/immersion.hpp"

namespace nullrig {

// Provenance of a frozen expected value: "exact" values follow from
// closed-form algebra on the entry; "oracle" values were frozen from an
// independent derivative-oracle run and are re-derived by the suite.
enum class Provenance { Exact, Oracle };

inline std::string provenance_name(Provenance p) {
  return p == Provenance::Exact ? "exact" : "oracle";
}

struct ExpectedScalar {
  double value = 0.0;
  double tol = 1e-9;
  Provenance prov = Provenance::Exact;
};

// Ambient vector field extending one rigging field off the submanifold.
// Entries carry these both as analytic cross-checks for the constructed
// frames and as the data needed by the ambient conformal predicate.
struct RiggingExtension {
  enum class Kind { None, Constant, ConeRadial };

  Kind kind = Kind::None;
  VectorD constant;        // Kind::Constant
  int offset = 0;          // Kind::ConeRadial: block starts at this coordinate
  int spatial = 3;         // spatial dimension of the cone block
  double inverse_power = 0.0;  // field is scaled by rho^{-inverse_power}

  static RiggingExtension constant_field(VectorD v) {
    RiggingExtension e;
    e.kind = Kind::Constant;
    e.constant = std::move(v);
    return e;
  }

  static RiggingExtension cone_radial(int offset, int spatial, double inverse_power) {
    RiggingExtension e;
    e.kind = Kind::ConeRadial;
    e.offset = offset;
    e.spatial = spatial;
    e.inverse_power = inverse_power;
    return e;
  }

  // Evaluates the field at an ambient point; dim is the ambient dimension.
  template <class T>
  Vector<T> eval(const Vector<T>& x, int dim) const {
    using std::pow;
    using std::sqrt;
    Vector<T> out(static_cast<std::size_t>(dim), T(0.0));
    if (kind == Kind::Constant) {
      for (std::size_t i = 0; i < constant.size() && i < out.size(); ++i)
        out[i] = T(constant[i]);
      return out;
    }
    if (kind == Kind::ConeRadial) {
      T rho2(0.0);
      for (int i = 1; i <= spatial; ++i) {
        const T& xi = x[static_cast<std::size_t>(offset + i)];
        rho2 += xi * xi;
      }
      T rho = sqrt(rho2);
      T scale = T(0.5);
      if (inverse_power != 0.0) scale = scale * pow(rho, -inverse_power);
      out[static_cast<std::size_t>(offset)] = T(-1.0) * scale;
      for (int i = 1; i <= spatial; ++i)
        out[static_cast<std::size_t>(offset + i)] = scale * x[static_cast<std::size_t>(offset + i)] / rho;
      return out;
    }
    return out;
  }
};

// Expected behavior of the pointwise conformal-screen fit on an entry.
enum class ScreenFitKind {
  Factor,          // A_N = factor * A_star with both operators nonzero
  DegenerateZero,  // A_N and A_star both vanish identically
  None,            // no single factor fits
};

inline std::string screen_fit_name(ScreenFitKind k) {
  switch (k) {
    case ScreenFitKind::Factor: return "factor";
    case ScreenFitKind::DegenerateZero: return "degenerate-zero";
    case ScreenFitKind::None: return "none";
  }
  return "?";
}

struct CatalogEntry {
  std::string id;
  std::string title;
  Ambient ambient;
  ImmersionPtr immersion;
  FrameOptions options;

  NullClass expected_class = NullClass::Coisotropic;
  int expected_r = 1;
  bool rejected = false;      // construction must throw UnsupportedError
  std::string rejection;      // classification label for rejected entries

  bool omega_closed = true;       // rigging 1-forms closed under catalog options
  bool conformal_rigging = false; // tangent-direction conformal predicate holds
  ScreenFitKind screen_fit = ScreenFitKind::DegenerateZero;
  bool screen_factor_fixed = false;  // the fitted factor is constant over the entry
  double screen_factor = 0.0;        // ScreenFitKind::Factor with screen_factor_fixed only

  std::vector<RiggingExtension> extensions;  // one per rigging index, or empty

  VectorD probe;  // canonical chart point for frozen expected values
  std::map<std::string, ExpectedScalar> expected;

  bool has_frame_overrides() const {
    return !options.radical_scale.empty() || !options.screen_shifts.empty();
  }
};

// The worked example geometries.  Entries are immutable static data; the
// returned reference is valid for the program lifetime.
const std::vector<CatalogEntry>& catalog();

// Entry lookup by id; throws ConfigError for unknown ids.
const CatalogEntry& catalog_entry(const std::string& id);

std::vector<std::string> catalog_ids();

// Frozen expected values for one entry; throws ConfigError for unknown ids.
const std::map<std::string, ExpectedScalar>& expected_values(const std::string& id);

// Serializes an entry description in the key-value config format.
std::string entry_as_config(const CatalogEntry& entry);

}  // namespace nullrig
