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

#ifndef PSG_FOCK_HPP
#define PSG_FOCK_HPP

#include <Eigen/Dense>
#include <utility>

#include "psg/cat.hpp"
#include "psg/errors.hpp"
#include "psg/quad_gauss_sum.hpp"

// Truncated Fock-space brute force. Everything here is an independent
// numerical route used to validate the closed-form characteristic-function
// calculus; nothing in the analytic modules depends on it.
namespace psg::fock {

enum class HeraldOutcome { One, AtLeastOne, None };

/// One- or two-mode density matrix truncated to photon numbers 0..dim-1.
/// Two-mode indices flatten as (n1, n2) -> n1*dim + n2.
class FockDensityMatrix {
 public:
  static FockDensityMatrix one_mode(Eigen::MatrixXcd entries, int dim);
  static FockDensityMatrix two_mode(Eigen::MatrixXcd entries, int dim);

  int dim() const { return dim_; }
  int modes() const { return modes_; }
  const Eigen::MatrixXcd& entries() const { return m_; }

  /// Photon-number marginal of one mode (0-indexed).
  Eigen::VectorXd populations(int mode) const;

  /// Population of the top 10% photon numbers of a mode's marginal.
  double tail_mass(int mode) const;

  /// Throws UnderTruncated if any mode's tail mass is >= 1e-8.
  void require_well_truncated() const;

 private:
  FockDensityMatrix(Eigen::MatrixXcd m, int dim, int modes);

  Eigen::MatrixXcd m_;
  int dim_;
  int modes_;
};

/// Beam-splitter action on |n>|0> for every n < dim, one output column per
/// photon-number sector. Build once per (T, dim) and reuse within a run.
class BeamSplitterColumns {
 public:
  BeamSplitterColumns(double transmittivity, int dim);

  /// Coefficients of U|n,0> over |k, n-k>, k = 0..n.
  const Eigen::VectorXd& column(int n) const { return cols_[n]; }
  double transmittivity() const { return transmittivity_; }
  int dim() const { return static_cast<int>(cols_.size()); }

 private:
  double transmittivity_;
  std::vector<Eigen::VectorXd> cols_;
};

/// Squeeze-operator conjugation of a thermal diagonal; nbar = 0 gives the
/// squeezed vacuum (even photon numbers only). Throws UnderTruncated when dim
/// cannot hold the state.
FockDensityMatrix squeezed_thermal_rho(double s, double nbar, int dim);

/// Splits a one-mode state against vacuum into the full two-mode state.
FockDensityMatrix beamsplitter_apply(const FockDensityMatrix& rho,
                                     const BeamSplitterColumns& bs);
FockDensityMatrix beamsplitter_apply(const FockDensityMatrix& rho, double T);

/// Projects mode 2 of a two-mode state on the requested outcome; returns the
/// normalized mode-1 state and the outcome probability. Throws
/// ZeroProbabilityHerald when the probability is below 1e-12.
std::pair<FockDensityMatrix, double> condition_mode2(const FockDensityMatrix& rho2,
                                                     HeraldOutcome outcome);

/// Fused split-plus-condition that never materializes the dim^2-sized
/// two-mode matrix; agrees with beamsplitter_apply + condition_mode2 exactly
/// and makes large-dim convergence checks cheap.
std::pair<FockDensityMatrix, double> split_and_condition(
    const FockDensityMatrix& rho, const BeamSplitterColumns& bs,
    HeraldOutcome outcome);

FockDensityMatrix partial_trace_mode2(const FockDensityMatrix& rho2);

/// Amplitude-damping Kraus sum at intensity efficiency eta in (0, 1].
FockDensityMatrix loss_apply(const FockDensityMatrix& rho, double eta);

/// Truncated displacement matrix exp(alpha*a^dag - conj(alpha)*a).
Eigen::MatrixXcd displacement(complexd alpha, int dim);

/// W(x, p) = (2/pi) * Tr[rho D(alpha) Pi D(alpha)^dag], alpha = x + i p.
double wigner_parity(const FockDensityMatrix& rho, double x, double p);

/// C(zeta) = Tr[D(zeta) rho]. Throws UnderTruncated outside the safe radius
/// |zeta| <= sqrt(dim)/2.
complexd char_value(const FockDensityMatrix& rho, complexd zeta);

/// Two-mode characteristic value Tr[(D(z) x D(w)) rho2].
complexd two_mode_char_value(const FockDensityMatrix& rho2, complexd z, complexd w);

/// Fock expansion of the odd cat (odd photon numbers only).
Eigen::VectorXd cat_fock_coeffs(const CatSpec& cat, int dim);

/// <cat|rho|cat> as a direct quadratic form.
double fidelity_pure(const FockDensityMatrix& rho, const CatSpec& cat);

/// Second moments of a two-mode state in characteristic-width units: the
/// same six entries the analytic beam-split correlation carries
/// (4<p1^2>, 4<x1^2>, 4<p1 p2>, 4<x1 x2>, 4<p2^2>, 4<x2^2>).
struct QuadMoments {
  double kept_r;
  double kept_i;
  double cross_r;
  double cross_i;
  double tap_r;
  double tap_i;
};
QuadMoments second_moments(const FockDensityMatrix& rho2);

}  // namespace psg::fock

#endif  // PSG_FOCK_HPP
