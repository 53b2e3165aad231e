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

#ifndef PSG_IMPERFECTIONS_HPP
#define PSG_IMPERFECTIONS_HPP

#include <vector>

#include "psg/conditioning.hpp"
#include "psg/gaussian.hpp"
#include "psg/quad_gauss_sum.hpp"

namespace psg {

/// Physical: detection efficiency modeled as a beam splitter in front of a
/// perfect detector — argument scaled by sqrt(eta), vacuum noise mixed in.
/// Rescaled: efficiency-corrected tomography — pure Gaussian smoothing by
/// exp(-((1-eta)/(2*eta))*|z|^2) with no argument scaling.
enum class LossConvention { Physical, Rescaled };

/// Applies detection loss of efficiency eta in (0, 1]; eta = 1 is the
/// identity in both conventions. Physical losses compose:
/// apply_loss(eta1) of apply_loss(eta2) equals apply_loss(eta1*eta2).
QuadGaussSum apply_loss(const QuadGaussSum& char_fn, double eta,
                        LossConvention convention = LossConvention::Physical);

/// Minimal homodyne efficiency for which the threshold-conditioned state
/// keeps a negative Wigner origin, by bisection (to 1e-9) on the exact
/// Physical-loss pipeline. For pure inputs this equals (1+T)/(4T). Requires
/// width_r < 1 < width_i; throws NoThresholdBelowOne when even a perfect
/// detector sees no negativity (T at or below the transmittivity bound).
double efficiency_threshold(const GaussianDiagState& state, double transmittivity);

/// Closed form of the same boundary. The click/no-click discriminants are
/// quadratic in eta but their weighted difference is linear, leaving
///
///   eta* = (p1*p2 - 4) / (4*T*R*(1-A)*(B-1)),  p_i = tap_i + 1,
///
/// which reduces to (1+T)/(4T) for pure inputs. May exceed 1 (no threshold).
double efficiency_threshold_closed_form(const GaussianDiagState& state,
                                        double transmittivity);

/// Convex mixture xi*subtracted + (1-xi)*squeezed of characteristic
/// functions; models heralds that fire on dark counts with modal purity xi.
QuadGaussSum modal_mixture(const QuadGaussSum& sub_char,
                           const QuadGaussSum& sq_char, double xi);

/// Full imperfect-subtraction chain for one observation scenario.
struct WignerScenario {
  GaussianDiagState state;
  double transmittivity;
  Detector detector = Detector::Threshold;
  double eta = 1.0;
  double xi = 1.0;
  LossConvention convention = LossConvention::Physical;
};

/// Characteristic function after beam splitting, conditioning, detector loss
/// on both mixture components, and modal-purity mixing.
QuadGaussSum scenario_char(const WignerScenario& scenario);

struct WignerGridSpec {
  double lo = -2.5;
  double hi = 2.5;
  int n = 101;

  double coord(int i) const { return lo + (hi - lo) * i / (n - 1); }
};

/// Wigner values over an n-by-n (x, p) grid, row-major with x as the slow
/// index, plus the grid minimum and its location.
struct WignerSurface {
  WignerGridSpec grid;
  std::vector<double> values;
  double min_value;
  double min_x;
  double min_p;

  double value(int ix, int ip) const { return values[ix * grid.n + ip]; }
};

/// Evaluates scenario_char over the grid (points are independent; evaluation
/// parallelizes across them deterministically).
WignerSurface wigner_surface(const WignerScenario& scenario,
                             const WignerGridSpec& grid);

}  // namespace psg

#endif  // PSG_IMPERFECTIONS_HPP
