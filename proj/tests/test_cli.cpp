// Copyright 2026 The psg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end checks of the installed command-line surface: exit codes,
// deterministic output, parseable CSV/JSON. PSG_BIN is injected by CMake.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(PSG_BIN) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (true) {
    const size_t n = fread(buf, 1, sizeof(buf), pipe);
    if (n == 0) break;
    out.append(buf, n);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

CliResult run_env(const std::string& env, const std::string& args) {
  const std::string cmd =
      env + " " + std::string(PSG_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (true) {
    const size_t n = fread(buf, 1, sizeof(buf), pipe);
    if (n == 0) break;
    out.append(buf, n);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    rows.push_back(line);
  }
  return rows;
}

TEST_CASE("wigner: deterministic CSV with the reference minimum") {
  const std::string args =
      "wigner --exp2s 2.36 --T 0.88 --detector threshold --grid -1:1:11";
  const CliResult first = run_cli(args);
  const CliResult second = run_cli(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);

  // Header comment records version and parameters; grid has 121 rows.
  CHECK(first.out.find("# psg ") == 0);
  CHECK(first.out.find("exp2s=2.36") != std::string::npos);
  const std::vector<std::string> rows = data_lines(first.out);
  REQUIRE(rows.size() == 122);  // column header + 11*11 points
  CHECK(rows[0] == "x,p,W");

  const auto at = first.out.find("# min W = ");
  REQUIRE(at != std::string::npos);
  const double min_w = std::stod(first.out.substr(at + 10));
  CHECK(min_w == doctest::Approx(-0.5232075274562843).epsilon(1e-9));
}

TEST_CASE("wigner: degenerate splitter and vacuum input exit codes") {
  const CliResult degenerate = run_cli("wigner --T 1.0", true);
  CHECK(degenerate.code == 2);
  CHECK(degenerate.out.find("transmittivity") != std::string::npos);

  CHECK(run_cli("wigner --exp2s 1.0 --detector threshold").code == 3);
  CHECK(run_cli("wigner --detector bogus").code == 2);

  const CliResult bad_grid = run_cli("wigner --grid 1:0:5", true);
  CHECK(bad_grid.code == 2);
  CHECK(bad_grid.out.find("--grid") != std::string::npos);
}

TEST_CASE("fidelity: sweep rows, optimization landmarks, thread independence") {
  const std::string args = "fidelity --detector ideal --T-range 0.8:0.99:3";
  const CliResult res = run_cli(args);
  CHECK(res.code == 0);
  const std::vector<std::string> rows = data_lines(res.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "exp2s,T,detector,alpha_star,fidelity_star");

  double exp2s = 0, t = 0, alpha = 0, fid = 0;
  char detector[16] = {0};
  REQUIRE(std::sscanf(rows[1].c_str(), "%lf,%lf,%15[^,],%lf,%lf", &exp2s, &t,
                      detector, &alpha, &fid) == 5);
  CHECK(exp2s == 2.36);
  CHECK(t == 0.8);
  CHECK(std::string(detector) == "ideal");
  CHECK(alpha == doctest::Approx(1.0194721621473763).epsilon(2e-5));
  CHECK(fid == doctest::Approx(0.9964375245515995).epsilon(1e-7));

  // Row-parallel sweeps must not depend on the thread budget.
  const CliResult serial = run_env("PSG_THREADS=1", args);
  const CliResult wide = run_env("PSG_THREADS=4", args);
  CHECK(serial.code == 0);
  CHECK(serial.out == res.out);
  CHECK(wide.out == res.out);
}

TEST_CASE("fidelity: fixed-amplitude mode reports the frozen overlap") {
  const CliResult res = run_cli(
      "fidelity --detector ideal --no-optimize-alpha --alpha 1.16 "
      "--T-range 0.88:0.9:2");
  CHECK(res.code == 0);
  const std::vector<std::string> rows = data_lines(res.out);
  REQUIRE(rows.size() == 3);
  double exp2s = 0, t = 0, alpha = 0, fid = 0;
  char detector[16] = {0};
  REQUIRE(std::sscanf(rows[1].c_str(), "%lf,%lf,%15[^,],%lf,%lf", &exp2s, &t,
                      detector, &alpha, &fid) == 5);
  CHECK(alpha == 1.16);
  CHECK(fid == doctest::Approx(0.990421578294773).epsilon(1e-9));
}

TEST_CASE("thresholds: JSON report for the pure reference state") {
  const CliResult res = run_cli("thresholds --exp2s 2.36 --T 0.88");
  CHECK(res.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(res.out);
  CHECK(doc.at("tool") == "psg");
  CHECK(std::abs(doc.at("T_min_single").at("formula").get<double>()) < 1e-12);
  CHECK(doc.at("T_min_single").at("bisection").get<double>() == 0.0);
  CHECK(doc.at("T_min_threshold").at("formula").get<double>() ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(doc.at("T_min_threshold").at("bisection").get<double>() ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  CHECK(doc.at("eta_min").at("exists").get<bool>());
  CHECK(doc.at("eta_min").at("formula").get<double>() ==
        doctest::Approx(0.5340909090909091).epsilon(1e-9));
  CHECK(doc.at("eta_min").at("bisection").get<double>() ==
        doctest::Approx(0.5340909090909091).epsilon(1e-6));

  // Determinism of the JSON document.
  CHECK(run_cli("thresholds --exp2s 2.36 --T 0.88").out == res.out);
}

TEST_CASE("thresholds: unsqueezed input and missing-threshold reporting") {
  CHECK(run_cli("thresholds --A 1.5 --B 2.0").code == 4);

  const CliResult noisy = run_cli("thresholds --A 0.7 --B 1.9 --T 0.9");
  CHECK(noisy.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(noisy.out);
  CHECK_FALSE(doc.at("eta_min").at("exists").get<bool>());
  CHECK(doc.at("eta_min").at("bisection").is_null());
  CHECK(doc.at("eta_min").at("formula").get<double>() > 1.0);

  // Conflicting state selections are flag errors.
  CHECK(run_cli("thresholds --exp2s 2.36 --A 0.5").code == 2);
  CHECK(run_cli("thresholds --A 0.5").code == 2);
  CHECK(run_cli("thresholds").code == 2);
}

TEST_CASE("verify: full run passes, prints the discrepancy record, writes JSON") {
  const std::string json_path = "psg_cli_verify_report.json";
  const CliResult res = run_cli("verify --dim 40 --json " + json_path);
  CHECK(res.code == 0);
  CHECK(res.out.find("PASS engine.moment_integrals") != std::string::npos);
  CHECK(res.out.find("INFO discrepancy.lossy_origin_shift_formula") !=
        std::string::npos);
  CHECK(res.out.find("verification summary:") != std::string::npos);
  CHECK(res.out.find(" 0 failed") != std::string::npos);

  std::ifstream in(json_path);
  REQUIRE(in.good());
  const nlohmann::json doc = nlohmann::json::parse(in);
  CHECK(doc.at("passed").get<bool>());
  CHECK(doc.at("dim").get<int>() == 40);
  CHECK(doc.at("checks").size() > 10);
  std::remove(json_path.c_str());
}

TEST_CASE("top-level flag errors exit with the parse-failure code") {
  CHECK(run_cli("").code == 2);            // missing subcommand
  CHECK(run_cli("nonsense").code == 2);    // unknown subcommand
  CHECK(run_cli("verify --dim 4").code == 2);  // below the supported range
}

}  // namespace
