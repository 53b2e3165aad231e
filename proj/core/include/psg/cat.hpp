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

#ifndef PSG_CAT_HPP
#define PSG_CAT_HPP

#include "psg/quad_gauss_sum.hpp"

namespace psg {

/// Odd coherent-state superposition norm(|alpha> - |-alpha>) with real
/// amplitude alpha > 0. `norm` is the superposition prefactor
/// 1/sqrt(1 - exp(-2*alpha^2)) conventionally quoted with the state.
struct CatSpec {
  explicit CatSpec(double alpha);

  double alpha;
  double norm;
};

/// Characteristic function of the odd cat: four terms sharing the vacuum
/// envelope — two phase-modulated diagonal terms (frequencies ±2*alpha along
/// z_i) and two exponentially tilted cross terms weighted by -exp(-2*alpha^2).
/// As alpha -> 0 this degenerates to the single-photon characteristic
/// function exp(-|z|^2/2)*(1 - |z|^2).
QuadGaussSum cat_char_fn(const CatSpec& spec);

/// Fidelity <phi|rho|phi> = (1/pi) * Integral[pure(z) * rho(-z)]. The
/// negated-argument pairing is the generally correct trace rule; for the even
/// states built here it coincides with the same-argument product.
double overlap_fidelity(const QuadGaussSum& pure_char, const QuadGaussSum& rho_char);

struct AlphaFit {
  double alpha_star;
  double fidelity_star;
};

/// Maximizes overlap_fidelity(cat_char_fn(alpha), rho_char) over
/// alpha in [1e-4, alpha_max]: 64-point coarse scan, then golden-section
/// refinement to 1e-6 absolute in alpha.
AlphaFit optimize_alpha(const QuadGaussSum& rho_char, double alpha_max = 3.0);

}  // namespace psg

#endif  // PSG_CAT_HPP
