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

#include "psg/quasiprob.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace psg {

namespace {

constexpr double kImagResidueTol = 1e-10;

double fourier_point(const QuadGaussSum& char_fn, double x, double p) {
  const complexd val =
      integrate_full_plane(char_fn.modulated(2.0 * p, -2.0 * x)) /
      (std::numbers::pi * std::numbers::pi);
  if (std::abs(val.imag()) > kImagResidueTol) {
    throw InvalidState(
        "Fourier transform has imaginary residue " + std::to_string(val.imag()) +
        "; input is not a Hermitian-state characteristic function");
  }
  return val.real();
}

}  // namespace

double wigner_eval(const QuadGaussSum& char_fn, double x, double p) {
  return fourier_point(char_fn, x, p);
}

double wigner_origin_single(const TwoModeCorrelation& corr) {
  return wigner_eval(subtract_single_photon(corr).char_fn, 0.0, 0.0);
}

double wigner_origin_threshold(const TwoModeCorrelation& corr) {
  return wigner_eval(subtract_threshold(corr).char_fn, 0.0, 0.0);
}

namespace {

void require_squeezed_branch(const GaussianDiagState& state, const char* what) {
  if (!(state.width_r() < 1.0) || !(state.width_i() > 1.0)) {
    throw NotSqueezedInput(std::string(what) +
                           " requires width_r < 1 < width_i, got width_r=" +
                           std::to_string(state.width_r()) +
                           " width_i=" + std::to_string(state.width_i()));
  }
}

}  // namespace

double negativity_T_threshold_single(const GaussianDiagState& state) {
  require_squeezed_branch(state, "single-photon negativity threshold");
  const double a = state.width_r();
  const double b = state.width_i();
  return (a * b - 1.0) / ((1.0 - a) * (b - 1.0));
}

double negativity_T_threshold_any(const GaussianDiagState& state) {
  require_squeezed_branch(state, "threshold-detector negativity threshold");
  const double a = state.width_r();
  const double b = state.width_i();
  return (4.0 - (a + 1.0) * (b + 1.0)) / (3.0 * (a - 1.0) * (b - 1.0));
}

QuadGaussSum p_char(const QuadGaussSum& char_fn) {
  return char_fn.with_extra_decay(-1.0, -1.0);
}

ClassicalityVerdict classify(const QuadGaussSum& char_fn) {
  const QuadGaussSum p = p_char(char_fn);

  bool exists = true;
  for (const GaussTerm& t : p.terms()) {
    if (t.decay_r <= kEpsTol || t.decay_i <= kEpsTol) {
      exists = false;
      break;
    }
  }

  ClassicalityVerdict out;
  out.p_exists = exists;
  out.wigner_negative = wigner_eval(char_fn, 0.0, 0.0) < 0.0;

  if (exists) {
    // The P function shares the Fourier convention with the Wigner function,
    // so its values come from the same transform applied to the shifted sum.
    // Positivity is decided on a dense grid; for every state this library
    // builds, a well-defined P is positive, so this is a guard.
    constexpr int kGrid = 201;
    constexpr double kExtent = 4.0;
    double min_val = 0.0;
    for (int ix = 0; ix < kGrid; ++ix) {
      const double x = -kExtent + 2.0 * kExtent * ix / (kGrid - 1);
      for (int ip = 0; ip < kGrid; ++ip) {
        const double pp = -kExtent + 2.0 * kExtent * ip / (kGrid - 1);
        min_val = std::min(min_val, fourier_point(p, x, pp));
      }
    }
    out.p_positive = min_val >= -1e-9;
  } else {
    out.p_positive.reset();
  }

  if (out.wigner_negative) {
    out.verdict = Verdict::WignerNegative;
  } else if (exists && out.p_positive.value()) {
    out.verdict = Verdict::Classical;
  } else {
    out.verdict = Verdict::NonclassicalNoP;
  }
  return out;
}

double purity(const QuadGaussSum& char_fn) {
  const complexd val =
      integrate_full_plane(char_fn * char_fn.conj_negated_argument()) /
      std::numbers::pi;
  if (std::abs(val.imag()) > kImagResidueTol) {
    throw InvalidState("purity has imaginary residue; input is not a state");
  }
  return val.real();
}

}  // namespace psg
