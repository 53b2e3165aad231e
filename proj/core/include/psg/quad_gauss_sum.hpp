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

#ifndef PSG_QUAD_GAUSS_SUM_HPP
#define PSG_QUAD_GAUSS_SUM_HPP

#include <array>
#include <complex>
#include <vector>

#include "psg/errors.hpp"

namespace psg {

using complexd = std::complex<double>;

/// Real-coefficient polynomial in the two real characteristic-plane
/// coordinates (zr, zi), with per-variable degree capped at kMaxDegree.
///
/// States produced by conditioning carry degree <= 2 per variable; pointwise
/// products of two such states (fidelity/purity integrands) reach degree 4,
/// which is why the cap sits there.
class PhasePoly {
 public:
  static constexpr int kMaxDegree = 4;
  static constexpr int kStride = kMaxDegree + 1;

  PhasePoly() = default;

  static PhasePoly one() { return monomial(0, 0, 1.0); }

  static PhasePoly monomial(int deg_r, int deg_i, double c) {
    PhasePoly p;
    p.at(deg_r, deg_i) = c;
    return p;
  }

  double& at(int deg_r, int deg_i) { return c_[index(deg_r, deg_i)]; }
  double at(int deg_r, int deg_i) const { return c_[index(deg_r, deg_i)]; }

  double eval(double zr, double zi) const;

  /// p(k*zr, k*zi)
  PhasePoly scaled_args(double k) const;
  /// p(-zr, -zi)
  PhasePoly negated_args() const { return scaled_args(-1.0); }

  /// Throws Error if the product would exceed the degree cap.
  PhasePoly operator*(const PhasePoly& other) const;
  PhasePoly& operator*=(double k);

  int degree_r() const;
  int degree_i() const;

  bool operator==(const PhasePoly&) const = default;

 private:
  static int index(int deg_r, int deg_i);

  std::array<double, kStride * kStride> c_{};
};

/// One term of a quadratic-Gaussian sum:
///
///   coeff * poly(zr, zi) * exp(-decay_r*zr^2/2 - decay_i*zi^2/2
///                              + lin_r*zr + lin_i*zi)
///
/// The linear exponent coefficients are complex: purely imaginary parts are
/// phase modulations (Fourier kernels, displacements along the conjugate
/// axis), real parts arise from displaced-state cross terms.
struct GaussTerm {
  complexd coeff{1.0, 0.0};
  PhasePoly poly = PhasePoly::one();
  double decay_r = 1.0;
  double decay_i = 1.0;
  complexd lin_r{0.0, 0.0};
  complexd lin_i{0.0, 0.0};

  complexd eval(double zr, double zi) const;
};

/// A finite sum of quadratic-Gaussian terms over the characteristic plane.
///
/// This is the closed representation for every characteristic function the
/// library produces: Gaussian states, photon-subtracted states, displaced-state
/// superpositions, their statistical mixtures, and pointwise products of any
/// two of them. Values are immutable; every operation returns a new sum.
class QuadGaussSum {
 public:
  QuadGaussSum() = default;
  explicit QuadGaussSum(std::vector<GaussTerm> terms) : terms_(std::move(terms)) {}

  /// Single unit-coefficient Gaussian term exp(-dr*zr^2/2 - di*zi^2/2).
  static QuadGaussSum gaussian(double decay_r, double decay_i);

  const std::vector<GaussTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  complexd eval(double zr, double zi) const;

  /// Value at the origin; equals the trace for a characteristic function.
  complexd origin_value() const;

  /// f(k*zr, k*zi)
  QuadGaussSum scaled_argument(double k) const;

  /// f * exp(-dr*zr^2/2 - di*zi^2/2); negative arguments sharpen instead.
  QuadGaussSum with_extra_decay(double decay_r, double decay_i) const;

  /// f * exp(i*freq_r*zr + i*freq_i*zi)
  QuadGaussSum modulated(double freq_r, double freq_i) const;

  /// f(-zr, -zi)
  QuadGaussSum negated_argument() const;

  /// conj(f(-zr, -zi)); for a characteristic function of a Hermitian state
  /// this equals f itself.
  QuadGaussSum conj_negated_argument() const;

  /// Pointwise product. Throws Error if polynomial degrees would overflow.
  QuadGaussSum operator*(const QuadGaussSum& other) const;

  /// weight_a * a + weight_b * b (statistical mixture of states).
  static QuadGaussSum mix(const QuadGaussSum& a, double weight_a,
                          const QuadGaussSum& b, double weight_b);

 private:
  std::vector<GaussTerm> terms_;
};

/// Exact full-plane integral of a quadratic-Gaussian sum, term by term via the
/// one-dimensional moment recurrence. Throws DivergentIntegral if any term has
/// a non-positive decay rate.
complexd integrate_full_plane(const QuadGaussSum& f);

}  // namespace psg

#endif  // PSG_QUAD_GAUSS_SUM_HPP
