// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "nullrig/checks.hpp"

namespace nullrig {

// Everything one `check` invocation needs: which entries to run, the
// per-entry run options, and how the result should be rendered. `example`
// is a catalog id or "all"; `report_path` is empty when no file output was
// requested; `with_timestamp` false makes repeated runs byte-identical.
struct RunConfig {
  std::string example = "all";
  RunOptions run;
  std::string report_path;
  std::string format = "json";
  bool with_timestamp = true;
};

// Version of the JSON report layout; bumped whenever a field changes
// meaning or moves.
int report_schema_version();

// A run passes when no check failed; skipped checks are listed but do not
// fail the run.
bool overall_pass(const std::vector<EntryResult>& results);

// The machine contract: a versioned JSON document with the config echo, the
// convention constants the suite was frozen under, and one record per check.
// The `generated_at` field is omitted when cfg.with_timestamp is false.
std::string render_json_report(const RunConfig& cfg, const std::vector<EntryResult>& results);

// Terminal rendering: one line per check with aligned columns; residuals in
// scientific notation with three significant digits.
std::string render_text_report(const RunConfig& cfg, const std::vector<EntryResult>& results);

// Dispatches on cfg.format ("json" or "text"); unknown formats are a
// ConfigError.
std::string render_report(const RunConfig& cfg, const std::vector<EntryResult>& results);

}  // namespace nullrig
