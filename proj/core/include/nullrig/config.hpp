// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "nullrig/report.hpp"

namespace nullrig {

// Applies a flat-section key-value config file to cfg, overwriting only the
// fields the file mentions. One section, [run], mirrors the CLI flags:
//
//   [run]
//   example = light-cone
//   suite = conformal
//   samples = 25
//   seed = 7
//   sign-convention = -1
//   rigging = auto
//   report = out.json
//   format = text
//   timestamp = false
//   tolerance.rigged-metric-jump = 1e-7
//
// `tolerance.<check-id>` keys set per-check overrides; the id "all" applies
// to every check. Lines starting with # or ; are comments. Unknown sections,
// unknown keys, malformed values, and non-positive tolerances all raise
// ConfigError.
void load_config_text(const std::string& text, RunConfig& cfg);
void load_config_file(const std::string& path, RunConfig& cfg);

// Parses an "id=value" tolerance override as passed on the command line and
// applies it to cfg; the value must parse as a positive number.
void apply_tolerance_override(RunConfig& cfg, const std::string& override_text);

}  // namespace nullrig
