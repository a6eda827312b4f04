// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#include "nullrig/catalog.hpp"

#include <cmath>
#include <memory>
#include <sstream>
#include <utility>

#include "nullrig/errors.hpp"

namespace nullrig {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

Ambient flat_ambient(VectorD diag) {
  Ambient amb;
  amb.dim = static_cast<int>(diag.size());
  amb.index = 0;
  for (double d : diag)
    if (d < 0.0) ++amb.index;
  amb.metric = std::make_shared<ConstantMetric>(ConstantMetric::diagonal(diag));
  return amb;
}

ImmersionPtr affine(MatrixD a, VectorD b, Box domain) {
  return std::make_shared<AffineImmersion>(std::move(a), std::move(b), std::move(domain));
}

ImmersionPtr null_hyperplane_immersion() {
  MatrixD a(4, 3);
  a(0, 0) = 1.0;
  a(1, 0) = 1.0;
  a(2, 1) = 1.0;
  a(3, 2) = 1.0;
  Box cube = {{-2.0, 2.0}, {-2.0, 2.0}, {-2.0, 2.0}};
  return affine(std::move(a), VectorD(4, 0.0), std::move(cube));
}

ImmersionPtr flat_r2_immersion() {
  MatrixD a(5, 3);
  a(0, 0) = 1.0;
  a(1, 1) = 1.0;
  a(2, 0) = 1.0;
  a(3, 1) = 1.0;
  a(4, 2) = 1.0;
  Box cube = {{-2.0, 2.0}, {-2.0, 2.0}, {-2.0, 2.0}};
  return affine(std::move(a), VectorD(5, 0.0), std::move(cube));
}

ImmersionPtr null_line_immersion() {
  MatrixD a(2, 1);
  a(0, 0) = 1.0;
  a(1, 0) = 1.0;
  return affine(std::move(a), VectorD(2, 0.0), {{-1.5, 1.5}});
}

ImmersionPtr totally_null_immersion() {
  MatrixD a(4, 2);
  a(0, 0) = 1.0;
  a(1, 1) = 1.0;
  a(2, 0) = 1.0;
  a(3, 1) = 1.0;
  Box square = {{-1.0, 1.0}, {-1.0, 1.0}};
  return affine(std::move(a), VectorD(4, 0.0), std::move(square));
}

ImmersionPtr isotropic_immersion() {
  MatrixD a(5, 2);
  a(0, 0) = 1.0;
  a(1, 1) = 1.0;
  a(3, 0) = 1.0;
  a(4, 1) = 1.0;
  Box square = {{-1.0, 1.0}, {-1.0, 1.0}};
  return affine(std::move(a), VectorD(5, 0.0), std::move(square));
}

ExpectedScalar exact(double value, double tol = 1e-12) {
  return {value, tol, Provenance::Exact};
}

ExpectedScalar oracle(double value, double tol = 1e-9) {
  return {value, tol, Provenance::Oracle};
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;

  {
    CatalogEntry e;
    e.id = "null-hyperplane";
    e.title = "Null hyperplane t = x in Minkowski 4-space";
    e.ambient = flat_ambient({-1.0, 1.0, 1.0, 1.0});
    e.immersion = null_hyperplane_immersion();
    e.expected_class = NullClass::Coisotropic;
    e.expected_r = 1;
    e.omega_closed = true;
    e.conformal_rigging = true;
    e.screen_fit = ScreenFitKind::DegenerateZero;
    e.extensions = {RiggingExtension::constant_field({-0.5, 0.5, 0.0, 0.0})};
    e.probe = {0.4, -1.1, 0.7};
    e.expected = {
        {"rank_r", exact(1.0)},
        {"A_N", exact(0.0)},
        {"h_l_max", exact(0.0)},
        {"tau_max", exact(0.0)},
        {"tau_of_xi", exact(0.0)},
        {"r_ind_max", exact(0.0, 1e-10)},
        {"r_tilde_max", exact(0.0, 1e-10)},
        {"gtilde_index", exact(0.0, 0.1)},
    };
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.id = "light-cone";
    e.title = "Future light cone in Minkowski 4-space";
    e.ambient = flat_ambient({-1.0, 1.0, 1.0, 1.0});
    e.immersion = std::make_shared<ConeImmersion>(3);
    e.expected_class = NullClass::Coisotropic;
    e.expected_r = 1;
    e.omega_closed = true;
    e.conformal_rigging = true;
    e.screen_fit = ScreenFitKind::Factor;
    e.screen_factor_fixed = true;
    e.screen_factor = 0.5;
    e.extensions = {RiggingExtension::cone_radial(0, 3, 0.0)};
    e.probe = {1.0, kHalfPi, 0.8};
    e.expected = {
        {"rank_r", exact(1.0)},
        {"gtilde_00", exact(1.0)},
        {"gtilde_11", oracle(1.0)},
        {"gtilde_22", oracle(1.0)},
        {"h_l_max", oracle(1.0)},
        {"a_star_frobenius", oracle(1.4142135623730951)},
        {"tau_max", oracle(0.0, 1e-10)},
        {"tau_of_xi", oracle(0.0, 1e-10)},
        {"r_tilde_max", oracle(0.0, 1e-8)},
        {"conformal_screen_factor", oracle(0.5)},
    };
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.id = "flat-coisotropic-r2";
    e.title = "Intersection of two null hyperplanes in flat R^5 of index 2";
    e.ambient = flat_ambient({-1.0, -1.0, 1.0, 1.0, 1.0});
    e.immersion = flat_r2_immersion();
    e.expected_class = NullClass::Coisotropic;
    e.expected_r = 2;
    e.omega_closed = true;
    e.conformal_rigging = true;
    e.screen_fit = ScreenFitKind::DegenerateZero;
    e.extensions = {RiggingExtension::constant_field({-0.5, 0.0, 0.5, 0.0, 0.0}),
                    RiggingExtension::constant_field({0.0, -0.5, 0.0, 0.5, 0.0})};
    e.probe = {0.2, 0.4, -0.9};
    e.expected = {
        {"rank_r", exact(2.0)},
        {"A_N", exact(0.0)},
        {"h_l_max", exact(0.0)},
        {"tau_max", exact(0.0)},
        {"r_ind_max", exact(0.0, 1e-10)},
        {"gtilde_index", exact(0.0, 0.1)},
    };
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.id = "cone-x-nullline";
    e.title = "Product of the light cone with a null line in flat R^6 of index 2";
    e.ambient = flat_ambient({-1.0, 1.0, 1.0, 1.0, -1.0, 1.0});
    e.immersion = std::make_shared<ProductImmersion>(std::make_shared<ConeImmersion>(3),
                                                     null_line_immersion());
    e.expected_class = NullClass::Coisotropic;
    e.expected_r = 2;
    e.omega_closed = true;
    e.conformal_rigging = true;
    e.screen_fit = ScreenFitKind::Factor;
    e.screen_factor_fixed = true;
    e.screen_factor = 0.5;
    e.extensions = {RiggingExtension::cone_radial(0, 3, 0.0),
                    RiggingExtension::constant_field({0.0, 0.0, 0.0, 0.0, -0.5, 0.5})};
    e.probe = {1.3, 1.1, 0.6, 0.5};
    e.expected = {
        {"rank_r", exact(2.0)},
        {"tau_max", oracle(0.0, 1e-10)},
        {"h_l_max", oracle(1.3)},
        {"r_tilde_max", oracle(0.0, 1e-8)},
        {"gtilde_index", exact(0.0, 0.1)},
    };
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.id = "r1-lightlike-surface";
    e.title = "Graph surface (u, v, u, sinh v) in flat R^4 of signature (-,-,+,+)";
    e.ambient = flat_ambient({-1.0, -1.0, 1.0, 1.0});
    e.immersion = std::make_shared<SinhGraphImmersion>();
    e.expected_class = NullClass::RLightlike;
    e.expected_r = 1;
    e.omega_closed = true;
    e.conformal_rigging = true;
    e.screen_fit = ScreenFitKind::DegenerateZero;
    e.extensions = {RiggingExtension::constant_field({-0.5, 0.0, 0.5, 0.0})};
    e.probe = {0.4, 1.0};
    const double sh = std::sinh(1.0);
    e.expected = {
        {"rank_r", exact(1.0)},
        {"A_N", exact(0.0, 1e-10)},
        {"h_l_max", oracle(0.0, 1e-10)},
        {"h_s_max", oracle(1.0)},
        {"a_w_max", oracle(1.0 / (sh * sh))},
        {"tau_max", exact(0.0)},
        {"gtilde_index", exact(0.0, 0.1)},
    };
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.id = "light-cone-rescaled";
    e.title = "Light cone with radical field rescaled by s";
    e.ambient = flat_ambient({-1.0, 1.0, 1.0, 1.0});
    e.immersion = std::make_shared<ConeImmersion>(3);
    e.options.radical_scale = {AffineScalar{0.0, {1.0, 0.0, 0.0}}};
    e.expected_class = NullClass::Coisotropic;
    e.expected_r = 1;
    e.omega_closed = true;
    e.conformal_rigging = false;
    e.screen_fit = ScreenFitKind::Factor;
    e.extensions = {RiggingExtension::cone_radial(0, 3, 1.0)};
    e.probe = {1.25, 0.9, 1.7};
    e.expected = {
        {"rank_r", exact(1.0)},
        {"tau_s", oracle(-0.8)},
        {"r_tilde_0110", oracle(-1.5625, 1e-7)},
        {"domega_max", oracle(0.0, 1e-10)},
        {"conformal_screen_factor", oracle(1.0 / (2.0 * 1.25 * 1.25))},
    };
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.id = "light-cone-nonclosed";
    e.title = "Light cone with a non-closed rigging (radical scaled by 1 + 0.3 theta)";
    e.ambient = flat_ambient({-1.0, 1.0, 1.0, 1.0});
    e.immersion = std::make_shared<ConeImmersion>(3);
    e.options.radical_scale = {AffineScalar{1.0, {0.0, 0.3, 0.0}}};
    e.expected_class = NullClass::Coisotropic;
    e.expected_r = 1;
    e.omega_closed = false;
    e.conformal_rigging = false;
    e.screen_fit = ScreenFitKind::Factor;
    e.probe = {1.1, 1.0, 2.6};
    e.expected = {
        {"rank_r", exact(1.0)},
        {"domega_max", oracle(0.3 / (1.3 * 1.3))},
        {"conformal_screen_factor", oracle(1.0 / (2.0 * 1.3 * 1.3))},
    };
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.id = "nullplane-x-sphere";
    e.title = "Product of a null hyperplane with a unit sphere in flat R^7 of index 1";
    e.ambient = flat_ambient({-1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0});
    e.immersion = std::make_shared<ProductImmersion>(null_hyperplane_immersion(),
                                                     std::make_shared<SphereImmersion>(1.0));
    e.expected_class = NullClass::RLightlike;
    e.expected_r = 1;
    e.omega_closed = true;
    e.conformal_rigging = true;
    e.screen_fit = ScreenFitKind::DegenerateZero;
    e.extensions = {RiggingExtension::constant_field({-0.5, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0})};
    e.probe = {0.3, -0.5, 0.8, 1.2, 2.0};
    e.expected = {
        {"rank_r", exact(1.0)},
        {"A_N", exact(0.0, 1e-10)},
        {"h_l_max", exact(0.0, 1e-10)},
        {"h_s_max", oracle(1.0)},
        {"r_ind_max", oracle(1.0, 1e-7)},
        {"r_tilde_max", oracle(1.0, 1e-7)},
        {"gtilde_index", exact(0.0, 0.1)},
    };
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.id = "cone-x-sphere";
    e.title = "Product of the light cone with a unit sphere in flat R^7 of index 1";
    e.ambient = flat_ambient({-1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0});
    e.immersion = std::make_shared<ProductImmersion>(std::make_shared<ConeImmersion>(3),
                                                     std::make_shared<SphereImmersion>(1.0));
    e.expected_class = NullClass::RLightlike;
    e.expected_r = 1;
    e.omega_closed = true;
    e.conformal_rigging = false;
    e.screen_fit = ScreenFitKind::Factor;
    e.screen_factor_fixed = true;
    e.screen_factor = 0.5;
    e.extensions = {RiggingExtension::cone_radial(0, 3, 0.0)};
    e.probe = {1.1, 0.9, 2.2, 1.3, 0.7};
    e.expected = {
        {"rank_r", exact(1.0)},
        {"tau_max", oracle(0.0, 1e-10)},
        {"h_l_max", oracle(1.1)},
        {"h_s_max", oracle(1.0)},
        {"conformal_screen_factor", oracle(0.5)},
    };
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.id = "light-cone-skew-screen";
    e.title = "Light cone with the first screen direction sheared along the radical";
    e.ambient = flat_ambient({-1.0, 1.0, 1.0, 1.0});
    e.immersion = std::make_shared<ConeImmersion>(3);
    e.options.screen_shifts = {ScreenShift{0, 0, AffineScalar{0.0, {0.0, 0.6, 0.0}}}};
    e.expected_class = NullClass::Coisotropic;
    e.expected_r = 1;
    e.omega_closed = false;
    e.conformal_rigging = false;
    e.screen_fit = ScreenFitKind::None;
    e.probe = {1.2, 1.2, 2.8};
    e.expected = {
        {"rank_r", exact(1.0)},
        {"domega_max", oracle(0.6 * 1.2)},
    };
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.id = "totally-null-plane";
    e.title = "Totally null plane in flat R^4 of index 2 (rejected)";
    e.ambient = flat_ambient({-1.0, -1.0, 1.0, 1.0});
    e.immersion = totally_null_immersion();
    e.expected_class = NullClass::TotallyNull;
    e.expected_r = 2;
    e.rejected = true;
    e.rejection = "totally-null";
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.id = "isotropic-plane";
    e.title = "Isotropic plane in flat R^5 of index 2 (rejected)";
    e.ambient = flat_ambient({-1.0, -1.0, 1.0, 1.0, 1.0});
    e.immersion = isotropic_immersion();
    e.expected_class = NullClass::Isotropic;
    e.expected_r = 2;
    e.rejected = true;
    e.rejection = "isotropic";
    entries.push_back(std::move(e));
  }

  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& id) {
  for (const CatalogEntry& e : catalog())
    if (e.id == id) return e;
  throw ConfigError("unknown catalog example: " + id);
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const CatalogEntry& e : catalog()) ids.push_back(e.id);
  return ids;
}

const std::map<std::string, ExpectedScalar>& expected_values(const std::string& id) {
  return catalog_entry(id).expected;
}

std::string entry_as_config(const CatalogEntry& entry) {
  std::ostringstream os;
  os.precision(17);
  os << "[example]\n";
  os << "id = " << entry.id << "\n";
  os << "title = " << entry.title << "\n";
  os << "classification = " << class_name(entry.expected_class) << "\n";
  os << "nullity = " << entry.expected_r << "\n";
  os << "rejected = " << (entry.rejected ? "true" : "false") << "\n";
  if (entry.rejected) {
    os << "rejection = " << entry.rejection << "\n";
    return os.str();
  }
  os << "chart_dim = " << entry.immersion->chart_dim() << "\n";
  os << "ambient_dim = " << entry.ambient.dim << "\n";
  os << "ambient_index = " << entry.ambient.index << "\n";
  os << "ambient = " << entry.ambient.metric->describe() << "\n";
  os << "immersion = " << entry.immersion->describe() << "\n";
  os << "omega_closed = " << (entry.omega_closed ? "true" : "false") << "\n";
  os << "conformal_rigging = " << (entry.conformal_rigging ? "true" : "false") << "\n";
  os << "conformal_screen = " << screen_fit_name(entry.screen_fit) << "\n";
  if (entry.screen_fit == ScreenFitKind::Factor && entry.screen_factor_fixed)
    os << "conformal_screen_factor = " << entry.screen_factor << "\n";
  os << "probe =";
  for (double p : entry.probe) os << " " << p;
  os << "\n";
  for (const auto& [key, ev] : entry.expected)
    os << "expected." << key << " = " << ev.value << " ; " << provenance_name(ev.prov)
       << ", tol " << ev.tol << "\n";
  return os.str();
}

}  // namespace nullrig
