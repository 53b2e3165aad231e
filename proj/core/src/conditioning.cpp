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

#include "psg/conditioning.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace psg {

namespace {

// Projecting the tap mode on |0><0| or |1><1| multiplies the two-mode
// characteristic function by the tap-mode kernel and integrates the tap
// argument out. Completing the square in the tap argument leaves a Gaussian
// in the kept argument with rates
//
//   a = n1 - c1^2/(m1+1),   b = n2 - c2^2/(m2+1),
//
// which appear in every conditioned state below.
struct ReducedRates {
  double a;
  double b;
};

ReducedRates reduced_rates(const TwoModeCorrelation& v) {
  return {v.kept_r - v.cross_r * v.cross_r / (v.tap_r + 1.0),
          v.kept_i - v.cross_i * v.cross_i / (v.tap_i + 1.0)};
}

void require_nonvacuum_tap(const TwoModeCorrelation& v, const char* what) {
  if (v.tap_r * v.tap_i - 1.0 <= kEpsTol) {
    throw ZeroProbabilityHerald(std::string(what) +
                                ": tap mode carries no photons (vacuum input), "
                                "herald probability is zero");
  }
}

}  // namespace

double herald_prob_single(const TwoModeCorrelation& v) {
  // P(1) = (1/pi) * Integral[(1 - xr^2 - xi^2) *
  //                          exp(-(m1+1)*xr^2/2 - (m2+1)*xi^2/2)]
  GaussTerm t;
  t.poly = PhasePoly::one();
  t.poly.at(2, 0) = -1.0;
  t.poly.at(0, 2) = -1.0;
  t.decay_r = v.tap_r + 1.0;
  t.decay_i = v.tap_i + 1.0;
  return integrate_full_plane(QuadGaussSum({t})).real() / std::numbers::pi;
}

double herald_prob_single_formula(const TwoModeCorrelation& v) {
  const double p1 = v.tap_r + 1.0;
  const double p2 = v.tap_i + 1.0;
  return 2.0 * (v.tap_r * v.tap_i - 1.0) / std::pow(p1 * p2, 1.5);
}

double no_click_prob(const TwoModeCorrelation& v) {
  // P(0) = (1/pi) * Integral[exp(-(m1+1)*xr^2/2 - (m2+1)*xi^2/2)]
  const QuadGaussSum g = QuadGaussSum::gaussian(v.tap_r + 1.0, v.tap_i + 1.0);
  return integrate_full_plane(g).real() / std::numbers::pi;
}

double herald_prob_threshold(const TwoModeCorrelation& v) {
  return 1.0 - no_click_prob(v);
}

double herald_prob_threshold_formula(const TwoModeCorrelation& v) {
  return 1.0 - 2.0 / std::sqrt((v.tap_r + 1.0) * (v.tap_i + 1.0));
}

ConditionedState subtract_single_photon(const TwoModeCorrelation& v) {
  require_nonvacuum_tap(v, "single-photon herald");
  const ReducedRates r = reduced_rates(v);
  const double p1 = v.tap_r + 1.0;
  const double p2 = v.tap_i + 1.0;
  const double det = v.tap_r * v.tap_i - 1.0;

  GaussTerm constant;
  constant.decay_r = r.a;
  constant.decay_i = r.b;

  GaussTerm quadratic;
  quadratic.decay_r = r.a;
  quadratic.decay_i = r.b;
  quadratic.poly = PhasePoly();
  quadratic.poly.at(2, 0) = -v.cross_r * v.cross_r * p2 / (p1 * det);
  quadratic.poly.at(0, 2) = -v.cross_i * v.cross_i * p1 / (p2 * det);

  ConditionedState out;
  out.char_fn = QuadGaussSum({constant, quadratic});
  out.success_prob = herald_prob_single(v);
  out.detector = Detector::SinglePhoton;
  return out;
}

ConditionedState subtract_threshold(const TwoModeCorrelation& v) {
  const double root = std::sqrt((v.tap_r + 1.0) * (v.tap_i + 1.0));
  if (root <= 2.0 + kEpsTol) {
    throw ZeroProbabilityHerald(
        "threshold herald: tap mode carries no photons (vacuum input), "
        "click probability is zero");
  }
  const ReducedRates r = reduced_rates(v);
  const double norm = root / (root - 2.0);

  GaussTerm traced;
  traced.coeff = norm;
  traced.decay_r = v.kept_r;
  traced.decay_i = v.kept_i;

  GaussTerm no_click;
  no_click.coeff = -norm * 2.0 / root;
  no_click.decay_r = r.a;
  no_click.decay_i = r.b;

  ConditionedState out;
  out.char_fn = QuadGaussSum({traced, no_click});
  out.success_prob = herald_prob_threshold(v);
  out.detector = Detector::Threshold;
  return out;
}

QuadGaussSum trace_out_mode2(const TwoModeCorrelation& v) {
  return QuadGaussSum::gaussian(v.kept_r, v.kept_i);
}

QuadGaussSum no_click_char(const TwoModeCorrelation& v) {
  const ReducedRates r = reduced_rates(v);
  return QuadGaussSum::gaussian(r.a, r.b);
}

}  // namespace psg
