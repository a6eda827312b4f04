// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#include "nullrig/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "nullrig/errors.hpp"

namespace nullrig {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

long long parse_int(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  long long out = 0;
  try {
    out = std::stoll(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "' needs an integer, got '" + value + "'");
  }
  if (pos != value.size())
    throw ConfigError("config key '" + key + "' needs an integer, got '" + value + "'");
  return out;
}

double parse_double(const std::string& key, const std::string& value) {
  char* end = nullptr;
  double out = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0')
    throw ConfigError("config key '" + key + "' needs a number, got '" + value + "'");
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw ConfigError("config key '" + key + "' needs true or false, got '" + value + "'");
}

void set_tolerance(RunConfig& cfg, const std::string& id, const std::string& key,
                   const std::string& value) {
  if (id.empty()) throw ConfigError("tolerance override is missing a check id");
  double tol = parse_double(key, value);
  if (!(tol > 0.0))
    throw ConfigError("tolerance override for '" + id + "' must be positive, got '" + value +
                      "'");
  cfg.run.tolerances[id] = tol;
}

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "example") {
    cfg.example = value;
  } else if (key == "suite") {
    cfg.run.suite = value;
  } else if (key == "samples") {
    cfg.run.samples = static_cast<int>(parse_int(key, value));
  } else if (key == "seed") {
    cfg.run.seed = static_cast<std::uint64_t>(parse_int(key, value));
  } else if (key == "sign-convention") {
    cfg.run.sign_convention = static_cast<int>(parse_int(key, value));
  } else if (key == "rigging") {
    cfg.run.rigging = value;
  } else if (key == "report") {
    cfg.report_path = value;
  } else if (key == "format") {
    cfg.format = value;
  } else if (key == "timestamp") {
    cfg.with_timestamp = parse_bool(key, value);
  } else if (key.rfind("tolerance.", 0) == 0) {
    set_tolerance(cfg, key.substr(10), key, value);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

}  // namespace

void load_config_text(const std::string& text, RunConfig& cfg) {
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s.front() == '[') {
      if (s.back() != ']')
        throw ConfigError("config line " + std::to_string(lineno) + ": unterminated section");
      section = trim(s.substr(1, s.size() - 2));
      if (section != "run")
        throw ConfigError("config line " + std::to_string(lineno) + ": unknown section '" +
                          section + "'");
      continue;
    }
    std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    if (section.empty())
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": key outside the [run] section");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key.empty())
      throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    apply_key(cfg, key, value);
  }
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  load_config_text(buf.str(), cfg);
}

void apply_tolerance_override(RunConfig& cfg, const std::string& override_text) {
  std::size_t eq = override_text.find('=');
  if (eq == std::string::npos)
    throw ConfigError("tolerance override '" + override_text + "' must look like check-id=value");
  std::string id = trim(override_text.substr(0, eq));
  std::string value = trim(override_text.substr(eq + 1));
  set_tolerance(cfg, id, "tolerance." + id, value);
}

}  // namespace nullrig
