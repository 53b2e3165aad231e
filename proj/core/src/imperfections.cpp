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

#include "psg/imperfections.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "psg/parallel.hpp"
#include "psg/quasiprob.hpp"

namespace psg {

QuadGaussSum apply_loss(const QuadGaussSum& char_fn, double eta,
                        LossConvention convention) {
  if (!(eta > 0.0) || eta > 1.0) {
    throw InvalidState("efficiency eta must lie in (0, 1], got " +
                       std::to_string(eta));
  }
  if (eta == 1.0) return char_fn;
  switch (convention) {
    case LossConvention::Physical:
      return char_fn.scaled_argument(std::sqrt(eta))
          .with_extra_decay(1.0 - eta, 1.0 - eta);
    case LossConvention::Rescaled: {
      const double extra = (1.0 - eta) / eta;
      return char_fn.with_extra_decay(extra, extra);
    }
  }
  throw Error("unknown loss convention");
}

double efficiency_threshold_closed_form(const GaussianDiagState& state,
                                        double transmittivity) {
  const TwoModeCorrelation v = beamsplit_with_vacuum(state, transmittivity);
  const double p1 = v.tap_r + 1.0;
  const double p2 = v.tap_i + 1.0;
  const double T = transmittivity;
  const double R = 1.0 - T;
  const double a = state.width_r();
  const double b = state.width_i();
  return (p1 * p2 - 4.0) / (4.0 * T * R * (1.0 - a) * (b - 1.0));
}

double efficiency_threshold(const GaussianDiagState& state,
                            double transmittivity) {
  if (!(state.width_r() < 1.0) || !(state.width_i() > 1.0)) {
    throw NotSqueezedInput(
        "efficiency threshold requires width_r < 1 < width_i, got width_r=" +
        std::to_string(state.width_r()) +
        " width_i=" + std::to_string(state.width_i()));
  }
  const TwoModeCorrelation v = beamsplit_with_vacuum(state, transmittivity);
  const QuadGaussSum clicked = subtract_threshold(v).char_fn;

  const auto origin = [&clicked](double eta) {
    return wigner_eval(apply_loss(clicked, eta, LossConvention::Physical), 0.0,
                       0.0);
  };

  if (origin(1.0) >= 0.0) {
    throw NoThresholdBelowOne(
        "no efficiency in (0, 1] yields Wigner negativity at transmittivity " +
        std::to_string(transmittivity));
  }
  double lo = 1e-9;  // near-total loss: state is almost vacuum, W(0) > 0
  double hi = 1.0;
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

QuadGaussSum modal_mixture(const QuadGaussSum& sub_char,
                           const QuadGaussSum& sq_char, double xi) {
  if (xi < 0.0 || xi > 1.0) {
    throw InvalidState("modal purity xi must lie in [0, 1], got " +
                       std::to_string(xi));
  }
  if (xi == 1.0) return sub_char;
  if (xi == 0.0) return sq_char;
  return QuadGaussSum::mix(sub_char, xi, sq_char, 1.0 - xi);
}

QuadGaussSum scenario_char(const WignerScenario& sc) {
  const TwoModeCorrelation v = beamsplit_with_vacuum(sc.state, sc.transmittivity);
  QuadGaussSum subtracted;
  switch (sc.detector) {
    case Detector::SinglePhoton:
      subtracted = subtract_single_photon(v).char_fn;
      break;
    case Detector::Threshold:
      subtracted = subtract_threshold(v).char_fn;
      break;
    case Detector::None:
      subtracted = trace_out_mode2(v);
      break;
  }
  const QuadGaussSum lossy_sub = apply_loss(subtracted, sc.eta, sc.convention);
  if (sc.xi == 1.0) return lossy_sub;
  const QuadGaussSum lossy_sq =
      apply_loss(trace_out_mode2(v), sc.eta, sc.convention);
  return modal_mixture(lossy_sub, lossy_sq, sc.xi);
}

WignerSurface wigner_surface(const WignerScenario& scenario,
                             const WignerGridSpec& grid) {
  if (grid.n < 2 || !(grid.hi > grid.lo)) {
    throw Error("grid must have n >= 2 and hi > lo");
  }
  const QuadGaussSum chi = scenario_char(scenario);

  WignerSurface out;
  out.grid = grid;
  out.values.resize(static_cast<std::size_t>(grid.n) * grid.n);
  parallel_for(out.values.size(), [&](std::size_t idx) {
    const int ix = static_cast<int>(idx) / grid.n;
    const int ip = static_cast<int>(idx) % grid.n;
    out.values[idx] = wigner_eval(chi, grid.coord(ix), grid.coord(ip));
  });

  out.min_value = std::numeric_limits<double>::infinity();
  out.min_x = out.min_p = 0.0;
  for (int ix = 0; ix < grid.n; ++ix) {
    for (int ip = 0; ip < grid.n; ++ip) {
      const double w = out.value(ix, ip);
      if (w < out.min_value) {
        out.min_value = w;
        out.min_x = grid.coord(ix);
        out.min_p = grid.coord(ip);
      }
    }
  }
  return out;
}

}  // namespace psg
