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

// Release gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "psg/cat.hpp"
#include "psg/conditioning.hpp"
#include "psg/fock.hpp"
#include "psg/gaussian.hpp"
#include "psg/imperfections.hpp"
#include "psg/quasiprob.hpp"
#include "psg/verify.hpp"
#include "quadrature.hpp"

namespace {

using namespace psg;

int g_failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("%s %2d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), pattern, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

GaussianDiagState reference_state() { return {1.0 / 2.36, 2.36}; }

// Sign-change location of the threshold-herald Wigner origin over T.
double bisect_negativity_T(const GaussianDiagState& state) {
  const auto origin = [&](double T) {
    return wigner_origin_threshold(beamsplit_with_vacuum(state, T));
  };
  double lo = 1e-6;
  double hi = 1.0 - 1e-6;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (origin(mid) < 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

// Criterion 1: the headline origin negativity, analytic and brute force.
void criterion_origin_anchor() {
  const auto start = std::chrono::steady_clock::now();
  const TwoModeCorrelation corr = beamsplit_with_vacuum(reference_state(), 0.88);
  const double analytic = wigner_origin_threshold(corr);

  const double s = 0.5 * std::log(2.36);
  const fock::FockDensityMatrix rho = fock::squeezed_thermal_rho(s, 0.0, 40);
  const fock::BeamSplitterColumns bs(0.88, 40);
  const auto [cond, prob] =
      fock::split_and_condition(rho, bs, fock::HeraldOutcome::AtLeastOne);
  const double oracle = fock::wigner_parity(cond, 0.0, 0.0);
  const double secs = seconds_since(start);

  const bool pass = std::abs(analytic + 0.52) <= 0.01 &&
                    std::abs(oracle + 0.52) <= 0.01 &&
                    std::abs(analytic - oracle) <= 1e-4 && secs < 5.0;
  report(1, pass,
         fmt("threshold herald at exp2s=2.36, T=0.88: W(0,0) analytic %.6f, "
             "Fock oracle %.6f, %.2f s",
             analytic, oracle, secs));
}

// Criterion 2: the universal 1/3 negativity bound for pure inputs.
void criterion_third_boundary() {
  std::mt19937 rng(20260814u);
  std::uniform_real_distribution<double> squeeze(0.08, 0.65);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const double t_star = bisect_negativity_T(from_squeezing(squeeze(rng)));
    worst = std::max(worst, std::abs(t_star - 1.0 / 3.0));
  }
  report(2, worst <= 1e-6,
         fmt("bisection on sign(W(0)) for 10 pure inputs: max |T* - 1/3| = %.2e",
             worst));
}

// Criterion 3: minimal homodyne efficiency, bisection vs closed form.
void criterion_efficiency_boundary() {
  const double eta = efficiency_threshold(reference_state(), 0.88);
  bool pass = std::abs(eta - 0.534) <= 0.002;

  std::mt19937 rng(20260815u);
  std::uniform_real_distribution<double> trans(0.34, 0.995);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const double T = trans(rng);
    const double bisected = efficiency_threshold(reference_state(), T);
    const double closed = (1.0 + T) / (4.0 * T);
    worst = std::max(worst, std::abs(bisected - closed));
  }
  pass = pass && worst <= 1e-6;
  report(3, pass,
         fmt("eta* at T=0.88 is %.4f; closed form (1+T)/(4T) matched to %.2e "
             "over 20 settings",
             eta, worst));
}

// Criterion 4: the one-photon bound degenerates to zero for pure inputs.
void criterion_pure_degeneracy() {
  std::mt19937 rng(20260816u);
  std::uniform_real_distribution<double> squeeze(0.05, 0.8);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    worst = std::max(
        worst, std::abs(negativity_T_threshold_single(from_squeezing(squeeze(rng)))));
  }
  bool negative_everywhere = true;
  for (double s : {0.2, 0.5 * std::log(2.36), 0.6}) {
    for (double T : {0.1, 0.5, 0.9}) {
      negative_everywhere =
          negative_everywhere &&
          wigner_origin_single(beamsplit_with_vacuum(from_squeezing(s), T)) < 0.0;
    }
  }
  report(4, worst <= 1e-13 && negative_everywhere,
         fmt("pure-input bound max |T*| = %.2e; one-photon W(0) < 0 at "
             "T in {0.1, 0.5, 0.9}",
             worst));
}

// Criterion 5: ideal-detector fidelity landmarks.
void criterion_ideal_fidelity() {
  const double refs[3][2] = {{0.8, 1.02}, {0.9, 1.09}, {0.99, 1.16}};
  bool pass = true;
  double min_fid = 1.0;
  for (const auto& ref : refs) {
    const QuadGaussSum rho =
        subtract_single_photon(beamsplit_with_vacuum(reference_state(), ref[0]))
            .char_fn;
    const AlphaFit fit = optimize_alpha(rho);
    pass = pass && fit.fidelity_star > 0.99 &&
           std::abs(fit.alpha_star - ref[1]) <= 0.03;
    min_fid = std::min(min_fid, fit.fidelity_star);
  }
  report(5, pass,
         fmt("ideal detector at T in {0.8, 0.9, 0.99}: best amplitudes within "
             "0.03 of 1.02/1.09/1.16, min fidelity %.4f",
             min_fid));
}

// Criterion 6: threshold-detector fidelity crosses 0.9 near T = 0.87.
void criterion_threshold_crossing() {
  const auto fit_at = [&](double T) {
    return optimize_alpha(
               subtract_threshold(beamsplit_with_vacuum(reference_state(), T))
                   .char_fn)
        .fidelity_star;
  };
  double lo = 0.8;
  double hi = 0.95;
  for (int iter = 0; iter < 40; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (fit_at(mid) > 0.9 ? hi : lo) = mid;
  }
  const double crossing = 0.5 * (lo + hi);
  report(6, std::abs(crossing - 0.87) <= 0.02,
         fmt("threshold-detector fidelity crosses 0.9 at T = %.4f", crossing));
}

// Criterion 7: photon subtraction cannot create nonclassicality.
void criterion_classicality() {
  std::mt19937 rng(20260817u);
  std::uniform_real_distribution<double> wide(1.05, 3.0);
  std::uniform_real_distribution<double> narrow(0.3, 0.95);
  std::uniform_real_distribution<double> excess(0.0, 1.5);
  std::uniform_real_distribution<double> trans(0.1, 0.9);

  int classical_violations = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const GaussianDiagState state(wide(rng), wide(rng));
    const ClassicalityVerdict v = classify(
        subtract_single_photon(beamsplit_with_vacuum(state, trans(rng))).char_fn);
    if (v.verdict != Verdict::Classical) ++classical_violations;
  }

  int squeezed_violations = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const double a = narrow(rng);
    const GaussianDiagState state(a, (1.0 + excess(rng)) / a);
    const ClassicalityVerdict v = classify(
        subtract_single_photon(beamsplit_with_vacuum(state, trans(rng))).char_fn);
    if (v.verdict == Verdict::Classical) ++squeezed_violations;
  }

  report(7, classical_violations == 0 && squeezed_violations == 0,
         fmt("50 classical inputs misjudged %g times; 50 squeezed inputs "
             "misjudged %g times",
             classical_violations, squeezed_violations));
}

// Criterion 8: the full analytic-vs-oracle suite.
void criterion_oracle_suite(const VerifyReport& report_data, double secs,
                            bool verify_ran) {
  if (!verify_ran) {
    report(8, false, "verification run threw before completing");
    return;
  }
  const char* required[] = {
      "conditioning.single_char", "conditioning.threshold_char",
      "gaussian.two_mode_char",   "quasiprob.wigner_grid",
      "conditioning.herald_probs", "cat.fidelity_oracle",
  };
  bool pass = report_data.all_hard_passed() && secs < 60.0;
  for (const char* name : required) {
    const CheckResult* check = report_data.find(name);
    pass = pass && check != nullptr && check->status == CheckStatus::Pass;
  }
  report(8, pass,
         fmt("oracle equivalence over the 10-point grid at dim 40: all hard "
             "checks pass in %.1f s",
             secs));
}

// Criterion 9: the documented-discrepancy record, sign assertions only.
void criterion_discrepancy_record(const VerifyReport& report_data,
                                  bool verify_ran) {
  if (!verify_ran) {
    report(9, false, "verification run threw before completing");
    return;
  }
  bool pass = true;
  const auto info_entry = [&](const char* name) -> const CheckResult* {
    const CheckResult* check = report_data.find(name);
    if (check == nullptr || check->status != CheckStatus::Info) pass = false;
    return check;
  };

  if (const CheckResult* shift = info_entry("discrepancy.lossy_origin_shift_formula")) {
    pass = pass && shift->value("shift_formula_bracket") > 0.0 &&
           shift->value("exact_origin") < 0.0;
  }
  if (const CheckResult* lossy = info_entry("discrepancy.lossy_origin_conventions")) {
    pass = pass && lossy->value("physical") < 0.0 && lossy->value("rescaled") < 0.0;
  }
  if (const CheckResult* modal = info_entry("discrepancy.modal_purity_origin")) {
    pass = pass && modal->value("physical") > 0.0 && modal->value("rescaled") > 0.0;
  }
  if (const CheckResult* improve = info_entry("discrepancy.improvement_claims")) {
    pass = pass && improve->value("better_eta") < 0.0 &&
           improve->value("better_xi") < 0.0;
  }
  report(9, pass,
         "discrepancy probes are informational with the asserted signs "
         "(positive printed bracket vs negative exact origin; negative lossy "
         "origins; positive impure-herald origin; negative improved-setting "
         "origins)");
}

// Criterion 10: cross-cutting invariants.
void criterion_invariants() {
  bool pass = true;
  double worst_norm = 0.0;
  double worst_even = 0.0;

  const std::vector<VerifyParams>& grid = verification_grid();
  for (std::size_t i = 0; i < 5; ++i) {
    const TwoModeCorrelation corr = beamsplit_with_vacuum(
        from_squeezed_thermal(grid[i].s, grid[i].nbar), grid[i].transmittivity);
    for (const QuadGaussSum& chi : {subtract_single_photon(corr).char_fn,
                                    subtract_threshold(corr).char_fn}) {
      worst_norm = std::max(worst_norm,
                            std::abs(chi.origin_value() - complexd(1.0, 0.0)));
      for (double zr : {-1.3, 0.4, 0.9}) {
        for (double zi : {-0.7, 0.6}) {
          const complexd v = chi.eval(zr, zi);
          worst_even = std::max(worst_even, std::abs(v.imag()));
          worst_even = std::max(worst_even, std::abs(v - chi.eval(-zr, -zi)));
        }
      }
    }
  }
  pass = pass && worst_norm <= 1e-12 && worst_even <= 1e-12;

  // Wigner normalization, numeric quadrature against 1.
  const TwoModeCorrelation ref = beamsplit_with_vacuum(reference_state(), 0.88);
  double worst_wigner = 0.0;
  for (const QuadGaussSum& chi :
       {subtract_single_photon(ref).char_fn, subtract_threshold(ref).char_fn}) {
    const double total = testing::integrate_field_numeric(
        [&](double x, double p) { return wigner_eval(chi, x, p); }, 6.5, 1e-12);
    worst_wigner = std::max(worst_wigner, std::abs(total - 1.0));
  }
  pass = pass && worst_wigner <= 1e-10;

  // Loss composition and mixture linearity.
  const QuadGaussSum click = subtract_threshold(ref).char_fn;
  const QuadGaussSum quiet = trace_out_mode2(ref);
  const QuadGaussSum composed = apply_loss(apply_loss(click, 0.8), 0.9);
  const QuadGaussSum direct = apply_loss(click, 0.72);
  const QuadGaussSum blend = modal_mixture(click, quiet, 0.7);
  double worst_loss = 0.0;
  double worst_mix = 0.0;
  for (double zr : {-1.0, 0.3, 1.2}) {
    for (double zi : {-0.8, 0.5}) {
      worst_loss = std::max(
          worst_loss, std::abs(composed.eval(zr, zi) - direct.eval(zr, zi)));
      worst_mix = std::max(worst_mix,
                           std::abs(blend.eval(zr, zi) - 0.7 * click.eval(zr, zi) -
                                    0.3 * quiet.eval(zr, zi)));
    }
  }
  pass = pass && worst_loss <= 1e-12 && worst_mix <= 1e-14;

  // Probability inclusion and purity bounds.
  std::mt19937 rng(20260818u);
  std::uniform_real_distribution<double> squeeze(0.05, 0.7);
  std::uniform_real_distribution<double> noise(0.0, 0.4);
  std::uniform_real_distribution<double> trans(0.1, 0.95);
  for (int trial = 0; trial < 20; ++trial) {
    const TwoModeCorrelation corr = beamsplit_with_vacuum(
        from_squeezed_thermal(squeeze(rng), noise(rng)), trans(rng));
    pass = pass && herald_prob_single(corr) <=
                       herald_prob_threshold(corr) + 1e-14;
    const QuadGaussSum chi = subtract_threshold(corr).char_fn;
    const double p = purity(chi);
    const double lossy_p = purity(apply_loss(chi, 0.85));
    pass = pass && p > 0.0 && p <= 1.0 + 1e-10 && lossy_p > 0.0 &&
           lossy_p <= 1.0 + 1e-10;
  }

  report(10, pass,
         fmt("normalization drift %.1e, evenness drift %.1e, |integral(W) - 1| "
             "<= %.1e; loss composition, mixture linearity, probability "
             "inclusion, purity bounds all hold",
             worst_norm, worst_even, worst_wigner));
}

}  // namespace

int main() {
  const auto guarded = [](int id, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      report(id, false, std::string("unexpected exception: ") + e.what());
    }
  };

  guarded(1, criterion_origin_anchor);
  guarded(2, criterion_third_boundary);
  guarded(3, criterion_efficiency_boundary);
  guarded(4, criterion_pure_degeneracy);
  guarded(5, criterion_ideal_fidelity);
  guarded(6, criterion_threshold_crossing);
  guarded(7, criterion_classicality);

  VerifyReport verify_report;
  double verify_secs = 0.0;
  bool verify_ran = false;
  try {
    const auto start = std::chrono::steady_clock::now();
    verify_report = run_verification({40});
    verify_secs = seconds_since(start);
    verify_ran = true;
  } catch (const std::exception& e) {
    std::printf("    (verification suite threw: %s)\n", e.what());
  }
  guarded(8, [&] { criterion_oracle_suite(verify_report, verify_secs, verify_ran); });
  guarded(9, [&] { criterion_discrepancy_record(verify_report, verify_ran); });
  guarded(10, criterion_invariants);

  std::printf("%d of 10 criteria passed\n", 10 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
