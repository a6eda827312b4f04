// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#include "nullrig/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>

#include "json.hpp"
#include "nullrig/errors.hpp"

namespace nullrig {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm utc{};
  gmtime_r(&t, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::string sci3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

ordered_json config_echo(const RunConfig& cfg) {
  ordered_json j;
  j["example"] = cfg.example;
  j["suite"] = cfg.run.suite;
  j["samples"] = cfg.run.samples;
  j["seed"] = cfg.run.seed;
  j["sign_convention"] = cfg.run.sign_convention;
  j["rigging"] = cfg.run.rigging;
  ordered_json tol = ordered_json::object();
  for (const auto& [id, value] : cfg.run.tolerances) tol[id] = value;
  j["tolerances"] = tol;
  j["format"] = cfg.format;
  return j;
}

ordered_json environment_block(const RunConfig& cfg) {
  const RadicalDisplayConstants k = radical_display_constants();
  ordered_json j;
  j["sign_convention"] = cfg.run.sign_convention;
  j["radical_display_constants"] = {
      {"curvature", k.curvature}, {"shape", k.shape}, {"rotation", k.rotation}};
  j["notes"] = ordered_json::array(
      {"the rotation constant in the radical curvature display was fixed once by direct "
       "comparison against ground-truth curvature on the catalog; no other sign was adjusted",
       "screen and screen-transversal frames come from the catalog construction; "
       "screen-dependent quantities are relative to that choice",
       "per-rigging-index correction terms are summed as whole terms"});
  return j;
}

}  // namespace

int report_schema_version() { return 1; }

bool overall_pass(const std::vector<EntryResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const EntryResult& er) { return er.passed(); });
}

std::string render_json_report(const RunConfig& cfg, const std::vector<EntryResult>& results) {
  ordered_json doc;
  doc["schema_version"] = report_schema_version();
  if (cfg.with_timestamp) doc["generated_at"] = iso_timestamp();
  doc["config"] = config_echo(cfg);
  doc["environment"] = environment_block(cfg);

  int total = 0;
  int failed = 0;
  int skipped = 0;
  ordered_json entries = ordered_json::array();
  for (const EntryResult& er : results) {
    ordered_json je;
    je["id"] = er.entry_id;
    je["title"] = er.title;
    je["classification"] = er.classification;
    je["status"] = er.passed() ? "pass" : "fail";
    ordered_json checks = ordered_json::array();
    for (const CheckResult& c : er.checks) {
      ++total;
      ordered_json jc;
      jc["id"] = c.id;
      jc["samples"] = c.samples;
      jc["max_residual"] = c.max_residual;
      jc["mean_residual"] = c.mean_residual;
      jc["tolerance"] = c.tolerance;
      jc["status"] = status_name(c.status);
      if (c.status == CheckStatus::Skipped) {
        ++skipped;
        jc["skip_reason"] = c.skip_reason;
      }
      if (c.status == CheckStatus::Fail) ++failed;
      if (!c.note.empty()) jc["note"] = c.note;
      checks.push_back(std::move(jc));
    }
    je["checks"] = std::move(checks);
    entries.push_back(std::move(je));
  }
  doc["entries"] = std::move(entries);
  doc["summary"] = {{"entries", results.size()},
                    {"checks", total},
                    {"failed", failed},
                    {"skipped", skipped}};
  doc["status"] = overall_pass(results) ? "pass" : "fail";
  return doc.dump(2) + "\n";
}

std::string render_text_report(const RunConfig& cfg, const std::vector<EntryResult>& results) {
  std::size_t id_width = 0;
  for (const EntryResult& er : results)
    for (const CheckResult& c : er.checks) id_width = std::max(id_width, c.id.size());

  std::ostringstream os;
  os << "nullrig check report\n";
  os << "example: " << cfg.example << "  suite: " << cfg.run.suite
     << "  samples: " << cfg.run.samples << "  seed: " << cfg.run.seed
     << "  sign: " << (cfg.run.sign_convention > 0 ? "+1" : "-1")
     << "  rigging: " << cfg.run.rigging << "\n";
  if (cfg.with_timestamp) os << "generated: " << iso_timestamp() << "\n";

  int failed = 0;
  int skipped = 0;
  int total = 0;
  for (const EntryResult& er : results) {
    os << "\n" << er.entry_id << "  (" << er.classification << ")  "
       << (er.passed() ? "pass" : "fail") << "\n";
    for (const CheckResult& c : er.checks) {
      ++total;
      if (c.status == CheckStatus::Fail) ++failed;
      if (c.status == CheckStatus::Skipped) ++skipped;
      os << "  " << status_name(c.status)
         << std::string(8 - std::string(status_name(c.status)).size(), ' ') << c.id
         << std::string(id_width + 2 - c.id.size(), ' ');
      os << "max " << sci3(c.max_residual) << "  mean " << sci3(c.mean_residual) << "  tol "
         << sci3(c.tolerance);
      if (!c.skip_reason.empty()) os << "  [" << c.skip_reason << "]";
      if (!c.note.empty()) os << "  " << c.note;
      os << "\n";
    }
  }
  os << "\noverall: " << (overall_pass(results) ? "pass" : "fail") << "  (" << total
     << " checks, " << failed << " failed, " << skipped << " skipped)\n";
  return os.str();
}

std::string render_report(const RunConfig& cfg, const std::vector<EntryResult>& results) {
  if (cfg.format == "json") return render_json_report(cfg, results);
  if (cfg.format == "text") return render_text_report(cfg, results);
  throw ConfigError("unknown report format '" + cfg.format + "' (expected json or text)");
}

}  // namespace nullrig
