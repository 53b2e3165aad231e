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

// psg: phase-space calculus for photon-subtracted Gaussian states.
//
// Subcommands:
//   wigner      Wigner surface of a conditioned (lossy, impure) state -> CSV
//   fidelity    cat-state fidelity sweep over transmittivity -> CSV
//   thresholds  negativity boundaries (transmittivity, efficiency) -> JSON
//   verify      analytic-vs-oracle cross-check suite -> text (+ JSON)
//
// Exit codes: 0 success; 1 verification failure or internal error; 2 invalid
// flags or state parameters; 3 zero-probability herald; 4 not-squeezed input.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "psg/cat.hpp"
#include "psg/conditioning.hpp"
#include "psg/gaussian.hpp"
#include "psg/imperfections.hpp"
#include "psg/parallel.hpp"
#include "psg/quasiprob.hpp"
#include "psg/verify.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

psg::Detector parse_detector(const std::string& name) {
  return name == "ideal" ? psg::Detector::SinglePhoton : psg::Detector::Threshold;
}

psg::LossConvention parse_convention(const std::string& name) {
  return name == "rescaled" ? psg::LossConvention::Rescaled
                            : psg::LossConvention::Physical;
}

struct Range {
  double lo;
  double hi;
  int n;
};

Range parse_range(const std::string& text, const char* flag) {
  Range r;
  char tail;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &r.lo, &r.hi, &r.n, &tail) != 3 ||
      r.n < 2 || !(r.hi > r.lo)) {
    throw CLI::ValidationError(std::string(flag) +
                               ": expected lo:hi:n with hi > lo and n >= 2, got '" +
                               text + "'");
  }
  return r;
}

// Writes to the file when a path is given, else to stdout.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw psg::Error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct WignerArgs {
  double exp2s = 2.36;
  double transmittivity = 0.88;
  std::string detector = "threshold";
  double eta = 1.0;
  double xi = 1.0;
  std::string convention = "physical";
  std::string grid = "-2.5:2.5:101";
  std::string out;
};

int run_wigner(const WignerArgs& args) {
  const Range g = parse_range(args.grid, "--grid");
  const psg::GaussianDiagState state =
      psg::from_squeezing(0.5 * std::log(args.exp2s));
  psg::WignerScenario scenario{state,    args.transmittivity,
                               parse_detector(args.detector),
                               args.eta, args.xi,
                               parse_convention(args.convention)};
  const psg::WignerGridSpec grid{g.lo, g.hi, g.n};
  const psg::WignerSurface surface = psg::wigner_surface(scenario, grid);

  OutputTarget target(args.out);
  std::ostream& os = target.stream();
  os << "# psg " << kVersion << " wigner exp2s=" << fmt(args.exp2s)
     << " T=" << fmt(args.transmittivity) << " detector=" << args.detector
     << " eta=" << fmt(args.eta) << " xi=" << fmt(args.xi)
     << " convention=" << args.convention << " grid=" << args.grid << "\n";
  os << "x,p,W\n";
  for (int ix = 0; ix < grid.n; ++ix) {
    for (int ip = 0; ip < grid.n; ++ip) {
      os << fmt(grid.coord(ix)) << ',' << fmt(grid.coord(ip)) << ','
         << fmt(surface.value(ix, ip)) << "\n";
    }
  }
  std::cout << "# min W = " << fmt(surface.min_value)
            << " at x = " << fmt(surface.min_x) << " p = " << fmt(surface.min_p)
            << "\n";
  return 0;
}

struct FidelityArgs {
  double exp2s = 2.36;
  std::string detector = "ideal";
  std::string t_range = "0.8:0.999:25";
  bool optimize = true;
  double alpha = 1.16;
  double alpha_max = 3.0;
  std::string out;
};

int run_fidelity(const FidelityArgs& args) {
  const Range g = parse_range(args.t_range, "--T-range");
  const psg::GaussianDiagState state =
      psg::from_squeezing(0.5 * std::log(args.exp2s));
  const psg::Detector detector = parse_detector(args.detector);

  struct Row {
    double transmittivity;
    double alpha_star;
    double fidelity_star;
  };
  std::vector<Row> rows(g.n);
  psg::parallel_for(rows.size(), [&](std::size_t i) {
    const double T = g.lo + (g.hi - g.lo) * static_cast<double>(i) / (g.n - 1);
    const psg::TwoModeCorrelation corr = psg::beamsplit_with_vacuum(state, T);
    const psg::QuadGaussSum chi =
        detector == psg::Detector::SinglePhoton
            ? psg::subtract_single_photon(corr).char_fn
            : psg::subtract_threshold(corr).char_fn;
    if (args.optimize) {
      const psg::AlphaFit fit = psg::optimize_alpha(chi, args.alpha_max);
      rows[i] = {T, fit.alpha_star, fit.fidelity_star};
    } else {
      const double f =
          psg::overlap_fidelity(psg::cat_char_fn(psg::CatSpec(args.alpha)), chi);
      rows[i] = {T, args.alpha, f};
    }
  });

  OutputTarget target(args.out);
  std::ostream& os = target.stream();
  os << "# psg " << kVersion << " fidelity exp2s=" << fmt(args.exp2s)
     << " detector=" << args.detector << " T-range=" << args.t_range
     << " optimize-alpha=" << (args.optimize ? 1 : 0)
     << " alpha=" << fmt(args.alpha) << " alpha-max=" << fmt(args.alpha_max)
     << "\n";
  os << "exp2s,T,detector,alpha_star,fidelity_star\n";
  for (const Row& row : rows) {
    os << fmt(args.exp2s) << ',' << fmt(row.transmittivity) << ','
       << args.detector << ',' << fmt(row.alpha_star) << ','
       << fmt(row.fidelity_star) << "\n";
  }
  return 0;
}

struct ThresholdsArgs {
  std::optional<double> width_r;
  std::optional<double> width_i;
  std::optional<double> exp2s;
  std::optional<double> transmittivity;
};

// Locates the sign change of the Wigner origin in T by bisection; the state
// is negative above the returned value. Returns 0 when negative everywhere,
// nullopt when negative nowhere in (0, 1).
std::optional<double> bisect_T(const psg::GaussianDiagState& state, bool single) {
  const auto origin = [&](double T) {
    const psg::TwoModeCorrelation v = psg::beamsplit_with_vacuum(state, T);
    return single ? psg::wigner_origin_single(v) : psg::wigner_origin_threshold(v);
  };
  double lo = 1e-6;
  double hi = 1.0 - 1e-6;
  if (origin(lo) < 0.0) return 0.0;
  if (origin(hi) >= 0.0) return std::nullopt;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (origin(mid) < 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

int run_thresholds(const ThresholdsArgs& args) {
  if (args.exp2s.has_value() == (args.width_r.has_value() || args.width_i.has_value())) {
    throw CLI::ValidationError(
        "state selection: give either --exp2s or both --A and --B");
  }
  if (!args.exp2s && !(args.width_r && args.width_i)) {
    throw CLI::ValidationError("state selection: --A and --B must come together");
  }
  const psg::GaussianDiagState state =
      args.exp2s ? psg::from_squeezing(0.5 * std::log(*args.exp2s))
                 : psg::GaussianDiagState(*args.width_r, *args.width_i);

  nlohmann::json doc;
  doc["tool"] = "psg";
  doc["version"] = kVersion;
  doc["state"] = {{"width_r", state.width_r()}, {"width_i", state.width_i()}};

  const auto report = [&](const char* key, bool single) {
    nlohmann::json entry;
    entry["formula"] = single ? psg::negativity_T_threshold_single(state)
                              : psg::negativity_T_threshold_any(state);
    if (const std::optional<double> b = bisect_T(state, single)) {
      entry["bisection"] = *b;
    } else {
      entry["bisection"] = nullptr;
    }
    doc[key] = entry;
  };
  report("T_min_single", true);
  report("T_min_threshold", false);

  if (args.transmittivity) {
    nlohmann::json entry;
    entry["transmittivity"] = *args.transmittivity;
    entry["formula"] =
        psg::efficiency_threshold_closed_form(state, *args.transmittivity);
    try {
      entry["bisection"] = psg::efficiency_threshold(state, *args.transmittivity);
      entry["exists"] = true;
    } catch (const psg::NoThresholdBelowOne&) {
      entry["bisection"] = nullptr;
      entry["exists"] = false;
    }
    doc["eta_min"] = entry;
  }

  std::cout << doc.dump(2) << "\n";
  return 0;
}

struct VerifyArgs {
  int dim = 40;
  std::string json_out;
};

int run_verify(const VerifyArgs& args) {
  const psg::VerifyReport report = psg::run_verification({args.dim});

  int passed = 0;
  int failed = 0;
  int info = 0;
  for (const psg::CheckResult& check : report.checks) {
    const char* tag = "INFO";
    if (check.status == psg::CheckStatus::Pass) {
      tag = "PASS";
      ++passed;
    } else if (check.status == psg::CheckStatus::Fail) {
      tag = "FAIL";
      ++failed;
    } else {
      ++info;
    }
    std::cout << tag << ' ' << check.name << ": " << check.detail << "\n";
  }
  std::cout << "verification summary: " << passed << " passed, " << failed
            << " failed, " << info << " informational (dim " << report.dim
            << ")\n";

  if (!args.json_out.empty()) {
    nlohmann::json doc;
    doc["tool"] = "psg";
    doc["version"] = kVersion;
    doc["dim"] = report.dim;
    doc["passed"] = report.all_hard_passed();
    nlohmann::json checks = nlohmann::json::array();
    for (const psg::CheckResult& check : report.checks) {
      nlohmann::json entry;
      entry["name"] = check.name;
      entry["status"] = check.status == psg::CheckStatus::Pass   ? "pass"
                        : check.status == psg::CheckStatus::Fail ? "fail"
                                                                 : "info";
      entry["detail"] = check.detail;
      nlohmann::json values;
      for (const psg::CheckValue& v : check.values) values[v.name] = v.value;
      entry["values"] = values;
      checks.push_back(entry);
    }
    doc["checks"] = checks;
    std::ofstream out(args.json_out);
    if (!out) throw psg::Error("cannot open output file '" + args.json_out + "'");
    out << doc.dump(2) << "\n";
  }
  return report.all_hard_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phase-space calculus for photon-subtracted Gaussian states"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("psg ") + kVersion);

  WignerArgs wigner;
  CLI::App* wigner_cmd =
      app.add_subcommand("wigner", "Wigner surface of a conditioned state");
  wigner_cmd->add_option("--exp2s", wigner.exp2s,
                         "squeezing strength exp(2s) of the input state");
  wigner_cmd->add_option("--T", wigner.transmittivity,
                         "beam-splitter transmittivity");
  wigner_cmd->add_option("--detector", wigner.detector, "herald detector")
      ->check(CLI::IsMember({"ideal", "threshold"}));
  wigner_cmd->add_option("--eta", wigner.eta, "homodyne efficiency in (0, 1]");
  wigner_cmd->add_option("--xi", wigner.xi, "modal purity in [0, 1]");
  wigner_cmd->add_option("--convention", wigner.convention, "loss convention")
      ->check(CLI::IsMember({"physical", "rescaled"}));
  wigner_cmd->add_option("--grid", wigner.grid, "evaluation grid lo:hi:n");
  wigner_cmd->add_option("--out", wigner.out, "CSV output path (default stdout)");

  FidelityArgs fidelity;
  CLI::App* fidelity_cmd =
      app.add_subcommand("fidelity", "cat-state fidelity sweep over T");
  fidelity_cmd->add_option("--exp2s", fidelity.exp2s,
                           "squeezing strength exp(2s) of the input state");
  fidelity_cmd->add_option("--detector", fidelity.detector, "herald detector")
      ->check(CLI::IsMember({"ideal", "threshold"}));
  fidelity_cmd->add_option("--T-range", fidelity.t_range,
                           "transmittivity sweep lo:hi:n");
  fidelity_cmd->add_flag("--optimize-alpha,!--no-optimize-alpha",
                         fidelity.optimize,
                         "maximize fidelity over the cat amplitude (default on)");
  fidelity_cmd->add_option("--alpha", fidelity.alpha,
                           "fixed cat amplitude when not optimizing");
  fidelity_cmd->add_option("--alpha-max", fidelity.alpha_max,
                           "upper bound of the amplitude search");
  fidelity_cmd->add_option("--out", fidelity.out, "CSV output path (default stdout)");

  ThresholdsArgs thresholds;
  CLI::App* thresholds_cmd =
      app.add_subcommand("thresholds", "negativity boundaries as JSON");
  thresholds_cmd->add_option("--A", thresholds.width_r,
                             "characteristic width of the squeezed quadrature");
  thresholds_cmd->add_option("--B", thresholds.width_i,
                             "characteristic width of the conjugate quadrature");
  thresholds_cmd->add_option("--exp2s", thresholds.exp2s,
                             "pure-state squeezing strength exp(2s)");
  thresholds_cmd->add_option("--T", thresholds.transmittivity,
                             "transmittivity for the efficiency threshold");

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the analytic-vs-oracle check suite");
  verify_cmd->add_option("--dim", verify.dim, "Fock truncation dimension")
      ->check(CLI::Range(16, 200));
  verify_cmd->add_option("--json", verify.json_out, "also write a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*wigner_cmd) return run_wigner(wigner);
    if (*fidelity_cmd) return run_fidelity(fidelity);
    if (*thresholds_cmd) return run_thresholds(thresholds);
    if (*verify_cmd) return run_verify(verify);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const psg::ZeroProbabilityHerald& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const psg::NotSqueezedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const psg::DegenerateSplitter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const psg::InvalidState& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const psg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
