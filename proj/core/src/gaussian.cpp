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

#include "psg/gaussian.hpp"

#include <cmath>
#include <string>

namespace psg {

GaussianDiagState::GaussianDiagState(double width_r, double width_i)
    : width_r_(width_r), width_i_(width_i) {
  if (!(width_r > 0.0) || !(width_i > 0.0)) {
    throw InvalidState("quadrature width must be positive, got width_r=" +
                       std::to_string(width_r) + " width_i=" + std::to_string(width_i));
  }
  if (width_r * width_i < 1.0 - kEpsTol) {
    throw InvalidState("widths violate the uncertainty bound width_r*width_i >= 1: " +
                       std::to_string(width_r) + " * " + std::to_string(width_i));
  }
}

double GaussianDiagState::purity() const {
  return 1.0 / std::sqrt(width_r_ * width_i_);
}

GaussianDiagState from_squeezing(double s) {
  return GaussianDiagState(std::exp(-2.0 * s), std::exp(2.0 * s));
}

GaussianDiagState from_squeezed_thermal(double s, double nbar) {
  if (nbar < 0.0) {
    throw InvalidState("thermal occupancy nbar must be non-negative, got " +
                       std::to_string(nbar));
  }
  const double scale = 2.0 * nbar + 1.0;
  return GaussianDiagState(scale * std::exp(-2.0 * s), scale * std::exp(2.0 * s));
}

QuadGaussSum char_fn(const GaussianDiagState& state) {
  return QuadGaussSum::gaussian(state.width_r(), state.width_i());
}

TwoModeCorrelation beamsplit_with_vacuum(const GaussianDiagState& state,
                                         double transmittivity) {
  if (!(transmittivity > 0.0) || !(transmittivity < 1.0)) {
    throw DegenerateSplitter("transmittivity T=" + std::to_string(transmittivity) +
                             " outside the open interval (0, 1)");
  }
  const double T = transmittivity;
  const double R = 1.0 - T;
  const double A = state.width_r();
  const double B = state.width_i();
  TwoModeCorrelation corr;
  corr.kept_r = T * A + R;
  corr.kept_i = T * B + R;
  corr.cross_r = std::sqrt(T * R) * (A - 1.0);
  corr.cross_i = std::sqrt(T * R) * (B - 1.0);
  corr.tap_r = R * A + T;
  corr.tap_i = R * B + T;
  corr.transmittivity = T;
  return corr;
}

complexd two_mode_char(const TwoModeCorrelation& corr, double zr, double zi,
                       double xr, double xi) {
  const double expo = -0.5 * corr.kept_r * zr * zr - 0.5 * corr.kept_i * zi * zi -
                      0.5 * corr.tap_r * xr * xr - 0.5 * corr.tap_i * xi * xi -
                      corr.cross_r * zr * xr - corr.cross_i * zi * xi;
  return std::exp(expo);
}

}  // namespace psg
