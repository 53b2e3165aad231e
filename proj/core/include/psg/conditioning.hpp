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

#ifndef PSG_CONDITIONING_HPP
#define PSG_CONDITIONING_HPP

#include "psg/gaussian.hpp"
#include "psg/quad_gauss_sum.hpp"

namespace psg {

enum class Detector { SinglePhoton, Threshold, None };

/// A mode-1 state conditioned on a detector outcome in mode 2.
struct ConditionedState {
  QuadGaussSum char_fn;  // normalized: char_fn(0) = 1
  double success_prob;   // probability of the heralding outcome, in (0, 1)
  Detector detector;
};

/// Conditions mode 1 on an ideal one-photon detection in mode 2. The result
/// is a two-term sum (constant term plus quadratic-polynomial term) sharing
/// one Gaussian envelope. Throws ZeroProbabilityHerald for vacuum input.
ConditionedState subtract_single_photon(const TwoModeCorrelation& corr);

/// Conditions mode 1 on a threshold-detector click (>= 1 photon) in mode 2.
/// The result is a difference of two Gaussian terms. Throws
/// ZeroProbabilityHerald for vacuum input.
ConditionedState subtract_threshold(const TwoModeCorrelation& corr);

/// Unconditional mode-1 state (mode 2 discarded): a single Gaussian with the
/// kept-mode decay rates. This is the "no subtraction happened" component of
/// the modal-purity mixture.
QuadGaussSum trace_out_mode2(const TwoModeCorrelation& corr);

/// Normalized mode-1 state conditioned on NO click (vacuum outcome in mode 2);
/// a pure Gaussian. Together with the click branch it reassembles the traced
/// state: p_click*C_click + p_no_click*C_no_click = C_traced.
QuadGaussSum no_click_char(const TwoModeCorrelation& corr);

/// Probability of the one-photon outcome, computed from first principles as a
/// Gaussian-moment integral over the tap mode.
double herald_prob_single(const TwoModeCorrelation& corr);

/// The same probability from the closed-form normalization constant,
/// 2*(m1*m2 - 1) / ((m1+1)*(m2+1))^{3/2}. Kept as an independent route; the
/// verification report records both values.
double herald_prob_single_formula(const TwoModeCorrelation& corr);

/// Probability of a threshold-detector click, via the same integral engine.
double herald_prob_threshold(const TwoModeCorrelation& corr);

/// Closed form 1 - 2/sqrt((m1+1)*(m2+1)).
double herald_prob_threshold_formula(const TwoModeCorrelation& corr);

/// Probability of the no-click outcome, 2/sqrt((m1+1)*(m2+1)).
double no_click_prob(const TwoModeCorrelation& corr);

}  // namespace psg

#endif  // PSG_CONDITIONING_HPP
