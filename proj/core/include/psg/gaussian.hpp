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

#ifndef PSG_GAUSSIAN_HPP
#define PSG_GAUSSIAN_HPP

#include "psg/errors.hpp"
#include "psg/quad_gauss_sum.hpp"

namespace psg {

/// A single-mode Gaussian state, zero-mean and diagonal in the quadrature
/// basis, parameterized by its two characteristic-function decay rates:
///
///   C(z) = exp(-width_r*zr^2/2 - width_i*zi^2/2)
///
/// Vacuum is (1, 1); squeezing pushes one width below 1 and the other above;
/// thermal noise scales both up. Validity: both widths positive and
/// width_r*width_i >= 1 (uncertainty bound, within kEpsTol).
class GaussianDiagState {
 public:
  GaussianDiagState(double width_r, double width_i);

  double width_r() const { return width_r_; }
  double width_i() const { return width_i_; }

  /// True if either quadrature is squeezed below the vacuum width.
  bool is_squeezed() const { return width_r_ < 1.0 || width_i_ < 1.0; }

  /// Tr[rho^2] = 1 / sqrt(width_r * width_i).
  double purity() const;

 private:
  double width_r_;
  double width_i_;
};

/// Pure squeezed vacuum: widths (exp(-2s), exp(2s)).
GaussianDiagState from_squeezing(double s);

/// Squeezed thermal state: widths ((2*nbar+1)*exp(-2s), (2*nbar+1)*exp(2s)).
GaussianDiagState from_squeezed_thermal(double s, double nbar);

/// Characteristic function of the state as a one-term sum.
QuadGaussSum char_fn(const GaussianDiagState& state);

/// Second moments of the two-mode Gaussian state obtained by splitting a
/// single-mode input against vacuum on a beam splitter of transmittivity T.
///
/// kept_* are the transmitted mode's decay rates, tap_* the reflected
/// (detector) mode's, cross_* the inter-mode correlations; the two-mode
/// characteristic function is
///
///   exp(-kept_r*zr^2/2 - tap_r*xr^2/2 - cross_r*zr*xr - ...)      (same for i)
///
/// with (z, x) the kept/tap mode arguments.
struct TwoModeCorrelation {
  double kept_r;
  double kept_i;
  double cross_r;
  double cross_i;
  double tap_r;
  double tap_i;
  double transmittivity;
};

/// Splits `state` against vacuum. Throws DegenerateSplitter unless
/// transmittivity lies strictly inside (0, 1).
TwoModeCorrelation beamsplit_with_vacuum(const GaussianDiagState& state,
                                         double transmittivity);

/// Two-mode characteristic value for a split state at (z, x); used by the
/// oracle cross-checks.
complexd two_mode_char(const TwoModeCorrelation& corr, double zr, double zi,
                       double xr, double xi);

}  // namespace psg

#endif  // PSG_GAUSSIAN_HPP
