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

#include "psg/quad_gauss_sum.hpp"

#include <cmath>
#include <numbers>

namespace psg {

namespace {

// Gaussian moments M_n = integral of z^n * exp(-a*z^2/2 + lambda*z) over the
// real line, for a > 0 and complex lambda:
//
//   M_0 = sqrt(2*pi/a) * exp(lambda^2 / (2a))
//   M_n = (lambda/a) * M_{n-1} + ((n-1)/a) * M_{n-2}
//
// (integration by parts; the recurrence is stable for the small n used here).
std::array<complexd, PhasePoly::kStride> gaussian_moments(double a, complexd lambda) {
  std::array<complexd, PhasePoly::kStride> m{};
  const complexd l_over_a = lambda / a;
  m[0] = std::sqrt(2.0 * std::numbers::pi / a) * std::exp(lambda * lambda / (2.0 * a));
  m[1] = l_over_a * m[0];
  for (int n = 2; n < PhasePoly::kStride; ++n) {
    m[n] = l_over_a * m[n - 1] + (static_cast<double>(n - 1) / a) * m[n - 2];
  }
  return m;
}

}  // namespace

int PhasePoly::index(int deg_r, int deg_i) {
  if (deg_r < 0 || deg_r > kMaxDegree || deg_i < 0 || deg_i > kMaxDegree) {
    throw Error("polynomial degree outside supported range [0, 4]");
  }
  return deg_r * kStride + deg_i;
}

double PhasePoly::eval(double zr, double zi) const {
  // Horner in zr of Horner-in-zi rows.
  double acc = 0.0;
  for (int j = kMaxDegree; j >= 0; --j) {
    double row = 0.0;
    for (int k = kMaxDegree; k >= 0; --k) {
      row = row * zi + c_[j * kStride + k];
    }
    acc = acc * zr + row;
  }
  return acc;
}

PhasePoly PhasePoly::scaled_args(double k) const {
  PhasePoly out;
  double pow_j = 1.0;
  for (int j = 0; j <= kMaxDegree; ++j) {
    double pw = pow_j;
    for (int i = 0; i <= kMaxDegree; ++i) {
      out.c_[j * kStride + i] = c_[j * kStride + i] * pw;
      pw *= k;
    }
    pow_j *= k;
  }
  return out;
}

PhasePoly PhasePoly::operator*(const PhasePoly& other) const {
  if (degree_r() + other.degree_r() > kMaxDegree ||
      degree_i() + other.degree_i() > kMaxDegree) {
    throw Error("polynomial degree overflow in pointwise product");
  }
  PhasePoly out;
  for (int j = 0; j <= degree_r(); ++j) {
    for (int k = 0; k <= degree_i(); ++k) {
      const double c = c_[j * kStride + k];
      if (c == 0.0) continue;
      for (int j2 = 0; j2 + j <= kMaxDegree; ++j2) {
        for (int k2 = 0; k2 + k <= kMaxDegree; ++k2) {
          out.c_[(j + j2) * kStride + (k + k2)] += c * other.c_[j2 * kStride + k2];
        }
      }
    }
  }
  return out;
}

PhasePoly& PhasePoly::operator*=(double k) {
  for (double& c : c_) c *= k;
  return *this;
}

int PhasePoly::degree_r() const {
  for (int j = kMaxDegree; j >= 0; --j) {
    for (int k = 0; k <= kMaxDegree; ++k) {
      if (c_[j * kStride + k] != 0.0) return j;
    }
  }
  return 0;
}

int PhasePoly::degree_i() const {
  for (int k = kMaxDegree; k >= 0; --k) {
    for (int j = 0; j <= kMaxDegree; ++j) {
      if (c_[j * kStride + k] != 0.0) return k;
    }
  }
  return 0;
}

complexd GaussTerm::eval(double zr, double zi) const {
  const complexd expo = -0.5 * decay_r * zr * zr - 0.5 * decay_i * zi * zi +
                        lin_r * zr + lin_i * zi;
  return coeff * poly.eval(zr, zi) * std::exp(expo);
}

QuadGaussSum QuadGaussSum::gaussian(double decay_r, double decay_i) {
  GaussTerm t;
  t.decay_r = decay_r;
  t.decay_i = decay_i;
  return QuadGaussSum({t});
}

complexd QuadGaussSum::eval(double zr, double zi) const {
  complexd acc = 0.0;
  for (const GaussTerm& t : terms_) acc += t.eval(zr, zi);
  return acc;
}

complexd QuadGaussSum::origin_value() const {
  complexd acc = 0.0;
  for (const GaussTerm& t : terms_) acc += t.coeff * t.poly.at(0, 0);
  return acc;
}

QuadGaussSum QuadGaussSum::scaled_argument(double k) const {
  std::vector<GaussTerm> out = terms_;
  for (GaussTerm& t : out) {
    t.poly = t.poly.scaled_args(k);
    t.decay_r *= k * k;
    t.decay_i *= k * k;
    t.lin_r *= k;
    t.lin_i *= k;
  }
  return QuadGaussSum(std::move(out));
}

QuadGaussSum QuadGaussSum::with_extra_decay(double decay_r, double decay_i) const {
  std::vector<GaussTerm> out = terms_;
  for (GaussTerm& t : out) {
    t.decay_r += decay_r;
    t.decay_i += decay_i;
  }
  return QuadGaussSum(std::move(out));
}

QuadGaussSum QuadGaussSum::modulated(double freq_r, double freq_i) const {
  std::vector<GaussTerm> out = terms_;
  for (GaussTerm& t : out) {
    t.lin_r += complexd(0.0, freq_r);
    t.lin_i += complexd(0.0, freq_i);
  }
  return QuadGaussSum(std::move(out));
}

QuadGaussSum QuadGaussSum::negated_argument() const { return scaled_argument(-1.0); }

QuadGaussSum QuadGaussSum::conj_negated_argument() const {
  std::vector<GaussTerm> out = terms_;
  for (GaussTerm& t : out) {
    t.poly = t.poly.negated_args();
    t.coeff = std::conj(t.coeff);
    t.lin_r = -std::conj(t.lin_r);
    t.lin_i = -std::conj(t.lin_i);
  }
  return QuadGaussSum(std::move(out));
}

QuadGaussSum QuadGaussSum::operator*(const QuadGaussSum& other) const {
  std::vector<GaussTerm> out;
  out.reserve(terms_.size() * other.terms_.size());
  for (const GaussTerm& a : terms_) {
    for (const GaussTerm& b : other.terms_) {
      GaussTerm t;
      t.coeff = a.coeff * b.coeff;
      t.poly = a.poly * b.poly;
      t.decay_r = a.decay_r + b.decay_r;
      t.decay_i = a.decay_i + b.decay_i;
      t.lin_r = a.lin_r + b.lin_r;
      t.lin_i = a.lin_i + b.lin_i;
      out.push_back(std::move(t));
    }
  }
  return QuadGaussSum(std::move(out));
}

QuadGaussSum QuadGaussSum::mix(const QuadGaussSum& a, double weight_a,
                               const QuadGaussSum& b, double weight_b) {
  std::vector<GaussTerm> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  for (GaussTerm t : a.terms_) {
    t.coeff *= weight_a;
    out.push_back(std::move(t));
  }
  for (GaussTerm t : b.terms_) {
    t.coeff *= weight_b;
    out.push_back(std::move(t));
  }
  return QuadGaussSum(std::move(out));
}

complexd integrate_full_plane(const QuadGaussSum& f) {
  complexd acc = 0.0;
  for (const GaussTerm& t : f.terms()) {
    if (!(t.decay_r > 0.0) || !(t.decay_i > 0.0)) {
      throw DivergentIntegral(
          "term has non-positive Gaussian decay; full-plane integral diverges");
    }
    const auto mr = gaussian_moments(t.decay_r, t.lin_r);
    const auto mi = gaussian_moments(t.decay_i, t.lin_i);
    complexd term_value = 0.0;
    for (int j = 0; j <= PhasePoly::kMaxDegree; ++j) {
      for (int k = 0; k <= PhasePoly::kMaxDegree; ++k) {
        const double c = t.poly.at(j, k);
        if (c != 0.0) term_value += c * mr[j] * mi[k];
      }
    }
    acc += t.coeff * term_value;
  }
  return acc;
}

}  // namespace psg
