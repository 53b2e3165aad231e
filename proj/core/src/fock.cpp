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

#include "psg/fock.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>

namespace psg::fock {

namespace {

constexpr double kTailLimit = 1e-8;

Eigen::MatrixXd annihilation(int dim) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

void check_dim(int dim) {
  if (dim < 2) throw Error("Fock dimension must be at least 2");
}

}  // namespace

FockDensityMatrix::FockDensityMatrix(Eigen::MatrixXcd m, int dim, int modes)
    : m_(std::move(m)), dim_(dim), modes_(modes) {}

FockDensityMatrix FockDensityMatrix::one_mode(Eigen::MatrixXcd entries, int dim) {
  check_dim(dim);
  if (entries.rows() != dim || entries.cols() != dim) {
    throw Error("one-mode entries must be dim x dim");
  }
  return FockDensityMatrix(std::move(entries), dim, 1);
}

FockDensityMatrix FockDensityMatrix::two_mode(Eigen::MatrixXcd entries, int dim) {
  check_dim(dim);
  const long n = static_cast<long>(dim) * dim;
  if (entries.rows() != n || entries.cols() != n) {
    throw Error("two-mode entries must be dim^2 x dim^2");
  }
  return FockDensityMatrix(std::move(entries), dim, 2);
}

Eigen::VectorXd FockDensityMatrix::populations(int mode) const {
  Eigen::VectorXd pop = Eigen::VectorXd::Zero(dim_);
  if (modes_ == 1) {
    for (int n = 0; n < dim_; ++n) pop(n) = m_(n, n).real();
    return pop;
  }
  for (int n1 = 0; n1 < dim_; ++n1) {
    for (int n2 = 0; n2 < dim_; ++n2) {
      const long idx = static_cast<long>(n1) * dim_ + n2;
      pop(mode == 0 ? n1 : n2) += m_(idx, idx).real();
    }
  }
  return pop;
}

double FockDensityMatrix::tail_mass(int mode) const {
  const Eigen::VectorXd pop = populations(mode);
  // At least two indices: parity-striped states (squeezed vacuum, odd cats)
  // have exactly zero population on every other level, and a one-index window
  // could land on such a hole and miss a fat tail entirely.
  const int tail_start = dim_ - std::max(2, dim_ / 10);
  return pop.tail(dim_ - tail_start).sum();
}

void FockDensityMatrix::require_well_truncated() const {
  for (int mode = 0; mode < modes_; ++mode) {
    const double tail = tail_mass(mode);
    if (!(tail < kTailLimit)) {
      throw UnderTruncated("tail mass " + std::to_string(tail) + " in mode " +
                           std::to_string(mode) + " at dim " +
                           std::to_string(dim_) +
                           "; increase the truncation dimension");
    }
  }
}

FockDensityMatrix squeezed_thermal_rho(double s, double nbar, int dim) {
  check_dim(dim);
  if (nbar < 0.0) throw InvalidState("nbar must be non-negative");

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  if (nbar == 0.0) {
    rho(0, 0) = 1.0;
  } else {
    const double ratio = nbar / (1.0 + nbar);
    double w = 1.0;
    double total = 0.0;
    for (int n = 0; n < dim; ++n, w *= ratio) {
      rho(n, n) = w;
      total += w;
    }
    rho /= total;
  }

  if (s != 0.0) {
    const Eigen::MatrixXd a = annihilation(dim);
    const Eigen::MatrixXd generator =
        0.5 * s * (a.transpose() * a.transpose() - a * a);
    const Eigen::MatrixXd squeeze = generator.exp();
    rho = (squeeze * rho * squeeze.transpose()).eval();
    rho /= rho.trace().real();
  }

  FockDensityMatrix out = FockDensityMatrix::one_mode(std::move(rho), dim);
  out.require_well_truncated();
  return out;
}

BeamSplitterColumns::BeamSplitterColumns(double transmittivity, int dim)
    : transmittivity_(transmittivity) {
  check_dim(dim);
  if (!(transmittivity > 0.0) || !(transmittivity < 1.0)) {
    throw DegenerateSplitter("transmittivity T=" + std::to_string(transmittivity) +
                             " outside the open interval (0, 1)");
  }
  const double theta = std::acos(std::sqrt(transmittivity));
  cols_.reserve(dim);
  for (int total = 0; total < dim; ++total) {
    // Sector basis |k, total-k>, k = 0..total. The generator a1*a2^dag -
    // a1^dag*a2 is real antisymmetric; exp(theta*G) applied to |total, 0>
    // (the last basis vector) gives the output amplitudes.
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(total + 1, total + 1);
    for (int k = 1; k <= total; ++k) {
      const double amp = std::sqrt(static_cast<double>(k) * (total - k + 1));
      g(k - 1, k) += amp;
      g(k, k - 1) -= amp;
    }
    const Eigen::MatrixXd u = (theta * g).exp();
    cols_.push_back(u.col(total));
  }
}

FockDensityMatrix beamsplitter_apply(const FockDensityMatrix& rho,
                                     const BeamSplitterColumns& bs) {
  if (rho.modes() != 1) throw Error("beamsplitter_apply expects a one-mode state");
  const int d = rho.dim();
  if (bs.dim() < d) throw Error("beam-splitter cache dimension too small");

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<long>(d) * d,
                                                static_cast<long>(d) * d);
  for (int n = 0; n < d; ++n) {
    for (int m = 0; m < d; ++m) {
      const complexd w = rho.entries()(n, m);
      if (std::abs(w) < 1e-300) continue;
      const Eigen::VectorXd& cn = bs.column(n);
      const Eigen::VectorXd& cm = bs.column(m);
      for (int k = 0; k <= n; ++k) {
        const long row = static_cast<long>(k) * d + (n - k);
        for (int l = 0; l <= m; ++l) {
          out(row, static_cast<long>(l) * d + (m - l)) += w * cn(k) * cm(l);
        }
      }
    }
  }
  FockDensityMatrix result = FockDensityMatrix::two_mode(std::move(out), d);
  result.require_well_truncated();
  return result;
}

FockDensityMatrix beamsplitter_apply(const FockDensityMatrix& rho, double T) {
  return beamsplitter_apply(rho, BeamSplitterColumns(T, rho.dim()));
}

namespace {

std::pair<FockDensityMatrix, double> normalize_conditional(Eigen::MatrixXcd m,
                                                           int dim) {
  const double prob = m.trace().real();
  if (prob <= 1e-12) {
    throw ZeroProbabilityHerald("herald outcome has probability " +
                                std::to_string(prob));
  }
  m /= prob;
  return {FockDensityMatrix::one_mode(std::move(m), dim), prob};
}

}  // namespace

std::pair<FockDensityMatrix, double> condition_mode2(const FockDensityMatrix& rho2,
                                                     HeraldOutcome outcome) {
  if (rho2.modes() != 2) throw Error("condition_mode2 expects a two-mode state");
  const int d = rho2.dim();
  const int j_lo = outcome == HeraldOutcome::None ? 0 : 1;
  const int j_hi = outcome == HeraldOutcome::One ? 1 : d - 1;

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      complexd acc = 0.0;
      for (int j = j_lo; j <= j_hi; ++j) {
        acc += rho2.entries()(static_cast<long>(k) * d + j,
                              static_cast<long>(l) * d + j);
      }
      m(k, l) = acc;
    }
  }
  return normalize_conditional(std::move(m), d);
}

std::pair<FockDensityMatrix, double> split_and_condition(
    const FockDensityMatrix& rho, const BeamSplitterColumns& bs,
    HeraldOutcome outcome) {
  if (rho.modes() != 1) throw Error("split_and_condition expects a one-mode state");
  const int d = rho.dim();
  if (bs.dim() < d) throw Error("beam-splitter cache dimension too small");
  const int j_lo = outcome == HeraldOutcome::None ? 0 : 1;
  const int j_hi = outcome == HeraldOutcome::One ? 1 : d - 1;

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      complexd acc = 0.0;
      for (int j = j_lo; j <= j_hi && k + j < d && l + j < d; ++j) {
        acc += rho.entries()(k + j, l + j) * bs.column(k + j)(k) *
               bs.column(l + j)(l);
      }
      m(k, l) = acc;
    }
  }
  return normalize_conditional(std::move(m), d);
}

FockDensityMatrix partial_trace_mode2(const FockDensityMatrix& rho2) {
  if (rho2.modes() != 2) throw Error("partial_trace_mode2 expects two modes");
  const int d = rho2.dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      complexd acc = 0.0;
      for (int j = 0; j < d; ++j) {
        acc += rho2.entries()(static_cast<long>(k) * d + j,
                              static_cast<long>(l) * d + j);
      }
      m(k, l) = acc;
    }
  }
  return FockDensityMatrix::one_mode(std::move(m), d);
}

FockDensityMatrix loss_apply(const FockDensityMatrix& rho, double eta) {
  if (rho.modes() != 1) throw Error("loss_apply expects a one-mode state");
  if (!(eta > 0.0) || eta > 1.0) {
    throw InvalidState("efficiency eta must lie in (0, 1], got " +
                       std::to_string(eta));
  }
  if (eta == 1.0) return rho;
  const int d = rho.dim();
  const double log_eta = std::log(eta);
  const double log_loss = std::log(1.0 - eta);

  // Kraus amplitude <n-k| K_k |n> = sqrt(C(n,k) * eta^(n-k) * (1-eta)^k).
  const auto kraus = [&](int n, int k) {
    const double log_choose = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                              std::lgamma(n - k + 1.0);
    return std::exp(0.5 * (log_choose + (n - k) * log_eta + k * log_loss));
  };

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i + k < d; ++i) {
      const double left = kraus(i + k, k);
      for (int j = 0; j + k < d; ++j) {
        out(i, j) += left * kraus(j + k, k) * rho.entries()(i + k, j + k);
      }
    }
  }
  return FockDensityMatrix::one_mode(std::move(out), d);
}

Eigen::MatrixXcd displacement(complexd alpha, int dim) {
  check_dim(dim);
  // exp(alpha*a^dag - conj(alpha)*a) via the Hermitian form: the generator G
  // is anti-Hermitian, so i*G has an exact eigendecomposition and
  // exp(G) = V exp(-i*Lambda) V^dag. This is the exponential of the truncated
  // generator, not a truncation of the exact exponential.
  const Eigen::MatrixXd a = annihilation(dim);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  const complexd i_unit(0.0, 1.0);
  h = i_unit * (alpha * a.transpose().cast<complexd>() -
                std::conj(alpha) * a.cast<complexd>());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  const Eigen::VectorXd evals = solver.eigenvalues();
  Eigen::VectorXcd phases(dim);
  for (int n = 0; n < dim; ++n) {
    phases(n) = std::exp(complexd(0.0, -evals(n)));
  }
  return solver.eigenvectors() * phases.asDiagonal() *
         solver.eigenvectors().adjoint();
}

namespace {

void check_radius(const FockDensityMatrix& rho, double magnitude, const char* what) {
  const double safe = std::sqrt(static_cast<double>(rho.dim())) / 2.0;
  if (magnitude > safe) {
    throw UnderTruncated(std::string(what) + " magnitude " +
                         std::to_string(magnitude) + " exceeds safe radius " +
                         std::to_string(safe) + " at dim " +
                         std::to_string(rho.dim()));
  }
}

}  // namespace

double wigner_parity(const FockDensityMatrix& rho, double x, double p) {
  if (rho.modes() != 1) throw Error("wigner_parity expects a one-mode state");
  const complexd alpha(x, p);
  check_radius(rho, std::abs(alpha), "displacement");
  const int d = rho.dim();
  const Eigen::MatrixXcd disp = displacement(alpha, d);
  const Eigen::MatrixXcd shifted = disp.adjoint() * rho.entries() * disp;
  double acc = 0.0;
  for (int n = 0; n < d; ++n) {
    acc += (n % 2 == 0 ? 1.0 : -1.0) * shifted(n, n).real();
  }
  return 2.0 / std::numbers::pi * acc;
}

complexd char_value(const FockDensityMatrix& rho, complexd zeta) {
  if (rho.modes() != 1) throw Error("char_value expects a one-mode state");
  check_radius(rho, std::abs(zeta), "characteristic argument");
  const Eigen::MatrixXcd disp = displacement(zeta, rho.dim());
  return (disp * rho.entries()).trace();
}

complexd two_mode_char_value(const FockDensityMatrix& rho2, complexd z, complexd w) {
  if (rho2.modes() != 2) throw Error("two_mode_char_value expects two modes");
  check_radius(rho2, std::abs(z), "characteristic argument");
  check_radius(rho2, std::abs(w), "characteristic argument");
  const int d = rho2.dim();
  const Eigen::MatrixXcd d1 = displacement(z, d);
  const Eigen::MatrixXcd d2 = displacement(w, d);
  // Tr[(D1 x D2) rho2] contracted blockwise to avoid materializing the
  // Kronecker product.
  complexd acc = 0.0;
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      if (std::abs(d1(k, l)) < 1e-300) continue;
      complexd block = 0.0;
      for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) {
          block += d2(j, i) * rho2.entries()(static_cast<long>(l) * d + i,
                                             static_cast<long>(k) * d + j);
        }
      }
      acc += d1(k, l) * block;
    }
  }
  return acc;
}

Eigen::VectorXd cat_fock_coeffs(const CatSpec& cat, int dim) {
  check_dim(dim);
  const double al = cat.alpha;
  const double prefactor = 2.0 * std::exp(-0.5 * al * al) /
                           std::sqrt(2.0 * (1.0 - std::exp(-2.0 * al * al)));
  Eigen::VectorXd c = Eigen::VectorXd::Zero(dim);
  double term = al;  // alpha^n / sqrt(n!) at n = 1
  for (int n = 1; n < dim; n += 2) {
    c(n) = prefactor * term;
    term *= al * al / std::sqrt(static_cast<double>(n + 1) * (n + 2));
  }
  const int tail_start = dim - std::max(1, dim / 10);
  if (c.tail(dim - tail_start).squaredNorm() >= kTailLimit) {
    throw UnderTruncated("cat amplitude too large for dim " + std::to_string(dim));
  }
  return c;
}

double fidelity_pure(const FockDensityMatrix& rho, const CatSpec& cat) {
  if (rho.modes() != 1) throw Error("fidelity_pure expects a one-mode state");
  const Eigen::VectorXcd c = cat_fock_coeffs(cat, rho.dim()).cast<complexd>();
  return (c.adjoint() * rho.entries() * c)(0, 0).real();
}

QuadMoments second_moments(const FockDensityMatrix& rho2) {
  if (rho2.modes() != 2) throw Error("second_moments expects a two-mode state");
  const int d = rho2.dim();
  const auto& m = rho2.entries();

  // Single-mode second moments from the reduced states: x and p are
  // tridiagonal, so <x^2> and <p^2> need only entries within bandwidth 2.
  const auto mode_moments = [&](int mode, double& var_x, double& var_p) {
    // reduced[n][l] for |n-l| <= 2 suffices.
    var_x = 0.0;
    var_p = 0.0;
    // x^2 = (a^2 + a^dag^2 + a a^dag + a^dag a)/4;
    // p^2 = (-a^2 - a^dag^2 + a a^dag + a^dag a)/4.
    for (int n = 0; n < d; ++n) {
      complexd diag = 0.0;
      complexd off2 = 0.0;  // <n+2| rho |n>
      for (int j = 0; j < d; ++j) {
        const long row_d = mode == 0 ? static_cast<long>(n) * d + j
                                     : static_cast<long>(j) * d + n;
        diag += m(row_d, row_d);
        if (n + 2 < d) {
          const long row_o = mode == 0 ? static_cast<long>(n + 2) * d + j
                                       : static_cast<long>(j) * d + (n + 2);
          off2 += m(row_o, row_d);
        }
      }
      const double number_part = (2.0 * n + 1.0) * diag.real();
      double off_part = 0.0;
      if (n + 2 < d) {
        // rho is Hermitian: <n|rho|n+2> = conj(<n+2|rho|n>), and a^2 pairs
        // with <n+2|rho|n>, a^dag^2 with its conjugate.
        off_part = 2.0 * std::sqrt((n + 1.0) * (n + 2.0)) * off2.real();
      }
      var_x += 0.25 * (number_part + off_part);
      var_p += 0.25 * (number_part - off_part);
    }
  };

  double x1, p1, x2, p2;
  mode_moments(0, x1, p1);
  mode_moments(1, x2, p2);

  // Cross moments <x1 x2> and <p1 p2> from the one-off-diagonal blocks.
  // x[n, n+1] = x[n+1, n] = sqrt(n+1)/2; p[n, n+1] = -i sqrt(n+1)/2 = -p[n+1, n].
  double xx = 0.0;
  double pp = 0.0;
  for (int k = 0; k + 1 < d; ++k) {
    const double s1 = 0.5 * std::sqrt(k + 1.0);
    for (int j = 0; j + 1 < d; ++j) {
      const double s2 = 0.5 * std::sqrt(j + 1.0);
      // Tr[rho (x1 x2)] = sum over the four (±1, ±1) neighbor shifts.
      const complexd up_up = m(static_cast<long>(k) * d + j,
                               static_cast<long>(k + 1) * d + (j + 1));
      const complexd up_down = m(static_cast<long>(k) * d + (j + 1),
                                 static_cast<long>(k + 1) * d + j);
      // Hermiticity supplies the mirrored shifts as conjugates.
      xx += s1 * s2 * 2.0 * (up_up.real() + up_down.real());
      pp += s1 * s2 * 2.0 * (up_down.real() - up_up.real());
    }
  }

  QuadMoments out;
  out.kept_r = 4.0 * p1;
  out.kept_i = 4.0 * x1;
  out.cross_r = 4.0 * pp;
  out.cross_i = 4.0 * xx;
  out.tap_r = 4.0 * p2;
  out.tap_i = 4.0 * x2;
  return out;
}

}  // namespace psg::fock
