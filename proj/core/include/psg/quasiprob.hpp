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

#ifndef PSG_QUASIPROB_HPP
#define PSG_QUASIPROB_HPP

#include <optional>

#include "psg/conditioning.hpp"
#include "psg/gaussian.hpp"
#include "psg/quad_gauss_sum.hpp"

namespace psg {

enum class Verdict { Classical, NonclassicalNoP, WignerNegative };

struct ClassicalityVerdict {
  bool p_exists;
  std::optional<bool> p_positive;  // defined only when p_exists
  bool wigner_negative;
  Verdict verdict;
};

/// W(x, p) = (1/pi^2) * Integral[char(z) * exp(2i*(p*zr - x*zi))].
/// Convention anchor: vacuum gives W(0, 0) = 2/pi. The result's imaginary
/// part must vanish (<= 1e-10); a larger residue means the input was not a
/// valid (Hermitian-state) characteristic function.
double wigner_eval(const QuadGaussSum& char_fn, double x, double p);

/// W(0, 0) of the single-photon-conditioned state.
double wigner_origin_single(const TwoModeCorrelation& corr);

/// W(0, 0) of the threshold-conditioned state.
double wigner_origin_threshold(const TwoModeCorrelation& corr);

/// Minimal transmittivity for Wigner negativity under the single-photon
/// herald: W1(0) < 0 iff T exceeds (A*B - 1)/((1 - A)*(B - 1)).
/// Requires A < 1 < B; throws NotSqueezedInput otherwise.
double negativity_T_threshold_single(const GaussianDiagState& state);

/// Minimal transmittivity for Wigner negativity under the threshold herald:
/// W_a(0) < 0 iff T exceeds (4 - (A+1)*(B+1))/(3*(A-1)*(B-1)); equals 1/3
/// for every pure squeezed input. Requires A < 1 < B.
double negativity_T_threshold_any(const GaussianDiagState& state);

/// Characteristic function of the P representation: every term's decay rates
/// shift down by 1. Non-positive shifted rates encode non-integrability,
/// detected at classification time.
QuadGaussSum p_char(const QuadGaussSum& char_fn);

/// Classifies a state: does a well-behaved P function exist (strict per-term
/// decay positivity), is it positive (dense-grid minimum), and is the Wigner
/// function negative at the origin (the minimum for the phase-symmetric
/// states constructed here)?
ClassicalityVerdict classify(const QuadGaussSum& char_fn);

/// Tr[rho^2] = (1/pi) * Integral[char(z) * conj(char(-z))].
double purity(const QuadGaussSum& char_fn);

}  // namespace psg

#endif  // PSG_QUASIPROB_HPP
