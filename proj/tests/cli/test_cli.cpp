// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string binary_path() {
#ifdef NULLRIG_BIN_PATH
  return NULLRIG_BIN_PATH;
#else
  const char* env = std::getenv("NULLRIG_BIN");
  return env != nullptr ? env : "nullrig";
#endif
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "nullrig_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CmdResult run_cli(const std::string& args, const std::string& env = "") {
  const fs::path dir = scratch_dir();
  const fs::path out = dir / "stdout.txt";
  const fs::path err = dir / "stderr.txt";
  std::string cmd = env + (env.empty() ? "" : " ") + "\"" + binary_path() + "\" " + args +
                    " >\"" + out.string() + "\" 2>\"" + err.string() + "\"";
  int rc = std::system(cmd.c_str());
  CmdResult res;
  res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  res.out = slurp(out);
  res.err = slurp(err);
  return res;
}

}  // namespace

TEST_CASE("list prints every catalog entry with its classification") {
  CmdResult r = run_cli("list");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("light-cone") != std::string::npos);
  CHECK(r.out.find("coisotropic") != std::string::npos);
  CHECK(r.out.find("(rejected: totally-null)") != std::string::npos);
}

TEST_CASE("describe prints the entry and a frame") {
  CmdResult r = run_cli("describe light-cone");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[example]") != std::string::npos);
  CHECK(r.out.find("frame at the probe point") != std::string::npos);
  CHECK(r.out.find("classification = coisotropic") != std::string::npos);

  CmdResult rejected = run_cli("describe totally-null-plane");
  CHECK(rejected.exit_code == 0);
  CHECK(rejected.out.find("rejected = true") != std::string::npos);

  CmdResult unknown = run_cli("describe no-such-entry");
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.err.find("no-such-entry") != std::string::npos);
}

TEST_CASE("check exits 0 on a passing entry and 1 on a failing one") {
  CmdResult pass = run_cli("check --example null-hyperplane --suite all --samples 5");
  CHECK(pass.exit_code == 0);

  CmdResult fail = run_cli("check --example r1-lightlike-surface --suite metric --samples 3");
  CHECK(fail.exit_code == 1);
  json doc = json::parse(fail.out);
  CHECK(doc["status"] == "fail");
}

TEST_CASE("a rejected example is a configuration error") {
  CmdResult r = run_cli("check --example totally-null-plane");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("unsupported classification") != std::string::npos);
}

TEST_CASE("malformed flags exit 2 with usage on stderr") {
  CmdResult r = run_cli("check --bogus-flag");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);

  CmdResult none = run_cli("");
  CHECK(none.exit_code == 2);

  CmdResult badtol = run_cli("check --example light-cone --tolerance frame-duality=0");
  CHECK(badtol.exit_code == 2);
  CHECK(badtol.err.find("positive") != std::string::npos);
}

TEST_CASE("check writes a schema-versioned json report") {
  const fs::path out = scratch_dir() / "report.json";
  fs::remove(out);
  CmdResult r = run_cli("check --example all --suite frames --samples 3 --format json --report " +
                        out.string() + " --no-timestamp");
  CHECK(r.exit_code == 0);
  REQUIRE(fs::exists(out));
  json doc = json::parse(slurp(out));
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["entries"].size() == 10);
  CHECK(doc["status"] == "pass");
  CHECK_FALSE(doc.contains("generated_at"));
}

TEST_CASE("repeat runs are byte-identical with the timestamp suppressed") {
  const std::string args = "check --example light-cone --suite metric --samples 4 --seed 9 "
                           "--format json --no-timestamp";
  CmdResult a = run_cli(args);
  CmdResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  CmdResult stamped = run_cli("check --example light-cone --suite metric --samples 4");
  CHECK(json::parse(stamped.out).contains("generated_at"));
}

TEST_CASE("NULLRIG_REPORT_DIR supplies the default report location") {
  const fs::path dir = scratch_dir() / "reports";
  fs::create_directories(dir);
  fs::remove(dir / "nullrig-report.json");
  CmdResult r = run_cli("check --example light-cone --suite metric --samples 3 --no-timestamp",
                        "NULLRIG_REPORT_DIR=\"" + dir.string() + "\"");
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(dir / "nullrig-report.json"));
  CHECK(slurp(dir / "nullrig-report.json") == r.out);
}

TEST_CASE("flags win over the config file") {
  const fs::path cfg = scratch_dir() / "run.ini";
  {
    std::ofstream out(cfg);
    out << "[run]\n"
        << "example = light-cone\n"
        << "suite = frames\n"
        << "samples = 3\n"
        << "timestamp = false\n"
        << "tolerance.frame-duality = 1e-6\n";
  }
  CmdResult r = run_cli("check --config " + cfg.string() + " --suite metric");
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["config"]["example"] == "light-cone");
  CHECK(doc["config"]["suite"] == "metric");
  CHECK(doc["config"]["samples"] == 3);
  CHECK(doc["config"]["tolerances"]["frame-duality"] == 1e-6);
  CHECK_FALSE(doc.contains("generated_at"));

  CmdResult bad = run_cli("check --config /nonexistent/run.ini");
  CHECK(bad.exit_code == 2);
}
