// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nullrig/catalog.hpp"
#include "nullrig/config.hpp"
#include "nullrig/report.hpp"

namespace {

using namespace nullrig;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void print_vector(const std::string& label, const VectorD& v) {
  std::cout << "  " << label << " =";
  for (double x : v) std::cout << " " << num(x);
  std::cout << "\n";
}

void print_rows(const std::string& label, const MatrixD& m) {
  for (int i = 0; i < m.rows(); ++i) {
    std::cout << "  " << label << "[" << i << "] =";
    for (int j = 0; j < m.cols(); ++j) std::cout << " " << num(m(i, j));
    std::cout << "\n";
  }
}

int run_list() {
  std::size_t width = 0;
  for (const auto& id : catalog_ids()) width = std::max(width, id.size());
  for (const auto& e : catalog()) {
    std::cout << e.id << std::string(width + 2 - e.id.size(), ' ')
              << class_name(e.expected_class) << "  r=" << e.expected_r;
    if (e.rejected) std::cout << "  (rejected: " << e.rejection << ")";
    std::cout << "\n";
  }
  return 0;
}

int run_describe(const std::string& id) {
  const CatalogEntry& e = catalog_entry(id);
  std::cout << entry_as_config(e);
  if (e.rejected) return 0;

  FramePoint<double> fp = build_frame<double>(e.ambient, *e.immersion, e.options, e.probe);
  std::cout << "\nframe at the probe point\n";
  print_vector("u", fp.u);
  print_vector("x", fp.x);
  std::cout << "  classification = " << class_name(fp.cls) << " (r = " << fp.r << ")\n";
  std::cout << "  gtilde index = " << static_cast<int>(evaluate_quantity(e, "gtilde_index"))
            << "\n";
  print_rows("radical chart", fp.radical_chart);
  print_rows("rigging ambient", fp.n_amb);
  if (!fp.screen_sign.empty()) {
    std::cout << "  screen signs =";
    for (int s : fp.screen_sign) std::cout << (s > 0 ? " +1" : " -1");
    std::cout << "\n";
  }
  if (!fp.st_sign.empty()) {
    std::cout << "  screen-transversal signs =";
    for (int s : fp.st_sign) std::cout << (s > 0 ? " +1" : " -1");
    std::cout << "\n";
  }
  print_rows("gtilde", fp.gtilde);
  return 0;
}

int run_check(const RunConfig& cfg) {
  std::vector<EntryResult> results;
  if (cfg.example == "all")
    results = run_catalog_suite(cfg.run);
  else
    results = {run_entry(catalog_entry(cfg.example), cfg.run)};

  std::string body = render_report(cfg, results);
  std::cout << body;

  std::string path = cfg.report_path;
  if (path.empty()) {
    if (const char* dir = std::getenv("NULLRIG_REPORT_DIR"); dir != nullptr && *dir != '\0')
      path = std::string(dir) + "/nullrig-report." + (cfg.format == "text" ? "txt" : "json");
  }
  if (!path.empty()) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write report to '" + path + "'");
    out << body;
  }
  return overall_pass(results) ? 0 : 1;
}

int cli_main(int argc, char** argv) {
  CLI::App app{"residual checks for rigged null-submanifold geometry"};
  app.require_subcommand(1);

  CLI::App* list = app.add_subcommand("list", "print catalog ids and classifications");

  std::string describe_id;
  CLI::App* describe =
      app.add_subcommand("describe", "print one catalog entry and its frame at the probe point");
  describe->add_option("id", describe_id, "catalog entry id")->required();

  CLI::App* check = app.add_subcommand("check", "run identity suites and emit a report");
  std::string example = "all";
  std::string suite = "all";
  std::string rigging = "catalog";
  std::string format = "json";
  std::string report_path;
  std::string config_path;
  int samples = 50;
  std::uint64_t seed = 42;
  int sign = 1;
  std::vector<std::string> tolerance_overrides;
  bool no_timestamp = false;
  check->add_option("--example", example, "catalog id or \"all\"")->capture_default_str();
  check->add_option("--suite", suite, "all|frames|metric|connection|curvature|conformal")
      ->capture_default_str();
  check->add_option("--samples", samples, "sample points per entry")->capture_default_str();
  check->add_option("--seed", seed, "seed for the sample-point generator")
      ->capture_default_str();
  check->add_option("--tolerance", tolerance_overrides,
                    "override as check-id=value; the id \"all\" applies to every check");
  check->add_option("--sign-convention", sign, "sign of the rigged-metric omega terms, +1 or -1")
      ->capture_default_str();
  check->add_option("--rigging", rigging, "catalog|auto")->capture_default_str();
  check->add_option("--report", report_path,
                    "write the report here; NULLRIG_REPORT_DIR supplies a default directory");
  check->add_option("--format", format, "json|text")->capture_default_str();
  check->add_option("--config", config_path, "key-value config file; flags win over the file");
  check->add_flag("--no-timestamp", no_timestamp, "omit the timestamp for byte-stable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (list->parsed()) return run_list();
    if (describe->parsed()) return run_describe(describe_id);

    RunConfig cfg;
    if (!config_path.empty()) load_config_file(config_path, cfg);
    if (check->count("--example") > 0) cfg.example = example;
    if (check->count("--suite") > 0) cfg.run.suite = suite;
    if (check->count("--samples") > 0) cfg.run.samples = samples;
    if (check->count("--seed") > 0) cfg.run.seed = seed;
    if (check->count("--sign-convention") > 0) cfg.run.sign_convention = sign;
    if (check->count("--rigging") > 0) cfg.run.rigging = rigging;
    if (check->count("--report") > 0) cfg.report_path = report_path;
    if (check->count("--format") > 0) cfg.format = format;
    if (no_timestamp) cfg.with_timestamp = false;
    for (const std::string& t : tolerance_overrides) apply_tolerance_override(cfg, t);
    return run_check(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace

int main(int argc, char** argv) { return cli_main(argc, argv); }
