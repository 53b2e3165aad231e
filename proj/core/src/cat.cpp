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

#include "psg/cat.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace psg {

CatSpec::CatSpec(double alpha_in) : alpha(alpha_in) {
  if (!(alpha_in > 0.0)) {
    throw InvalidState("cat amplitude alpha must be positive, got " +
                       std::to_string(alpha_in));
  }
  norm = 1.0 / std::sqrt(1.0 - std::exp(-2.0 * alpha_in * alpha_in));
}

QuadGaussSum cat_char_fn(const CatSpec& spec) {
  const double al = spec.alpha;
  // Squared prefactor of the superposition: 1 / (2*(1 - exp(-2*alpha^2))).
  const double m2 = 1.0 / (2.0 * (1.0 - std::exp(-2.0 * al * al)));
  const double cross = std::exp(-2.0 * al * al);

  std::vector<GaussTerm> terms(4);
  // Diagonal overlaps <±alpha|D|±alpha>: phase modulation along z_i.
  terms[0].coeff = m2;
  terms[0].lin_i = complexd(0.0, 2.0 * al);
  terms[1].coeff = m2;
  terms[1].lin_i = complexd(0.0, -2.0 * al);
  // Cross overlaps <∓alpha|D|±alpha>: real exponential tilt along z_r.
  terms[2].coeff = -m2 * cross;
  terms[2].lin_r = complexd(2.0 * al, 0.0);
  terms[3].coeff = -m2 * cross;
  terms[3].lin_r = complexd(-2.0 * al, 0.0);
  return QuadGaussSum(std::move(terms));
}

double overlap_fidelity(const QuadGaussSum& pure_char, const QuadGaussSum& rho_char) {
  const complexd val =
      integrate_full_plane(pure_char * rho_char.negated_argument()) /
      std::numbers::pi;
  if (std::abs(val.imag()) > 1e-10) {
    throw InvalidState("fidelity has imaginary residue; inputs are not states");
  }
  return val.real();
}

AlphaFit optimize_alpha(const QuadGaussSum& rho_char, double alpha_max) {
  if (!(alpha_max > 0.0)) {
    throw Error("alpha_max must be positive, got " + std::to_string(alpha_max));
  }
  constexpr double kAlphaMin = 1e-4;
  constexpr int kScanPoints = 64;

  const auto fid = [&rho_char](double al) {
    return overlap_fidelity(cat_char_fn(CatSpec(al)), rho_char);
  };

  // Coarse scan guards against local maxima before the unimodal refinement.
  int best = 0;
  double best_fid = -1.0;
  std::vector<double> grid(kScanPoints);
  for (int i = 0; i < kScanPoints; ++i) {
    grid[i] = kAlphaMin + (alpha_max - kAlphaMin) * i / (kScanPoints - 1);
    const double f = fid(grid[i]);
    if (f > best_fid) {
      best_fid = f;
      best = i;
    }
  }

  double lo = grid[best > 0 ? best - 1 : 0];
  double hi = grid[best + 1 < kScanPoints ? best + 1 : kScanPoints - 1];
  constexpr double kGolden = 0.6180339887498949;
  double c = hi - kGolden * (hi - lo);
  double d = lo + kGolden * (hi - lo);
  while (hi - lo > 1e-6) {
    if (fid(c) > fid(d)) {
      hi = d;
    } else {
      lo = c;
    }
    c = hi - kGolden * (hi - lo);
    d = lo + kGolden * (hi - lo);
  }
  const double alpha_star = 0.5 * (lo + hi);
  return {alpha_star, fid(alpha_star)};
}

}  // namespace psg
