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
#include <random>

#include <doctest.h>

namespace psg {
namespace {

TEST_CASE("state construction enforces positivity and the uncertainty bound") {
  CHECK_NOTHROW(GaussianDiagState(1.0, 1.0));
  CHECK_NOTHROW(GaussianDiagState(0.5, 2.0));
  CHECK_THROWS_AS(GaussianDiagState(0.0, 2.0), InvalidState);
  CHECK_THROWS_AS(GaussianDiagState(1.0, -1.0), InvalidState);
  CHECK_THROWS_AS(GaussianDiagState(0.5, 1.9), InvalidState);
  // Right at the bound, within tolerance.
  CHECK_NOTHROW(GaussianDiagState(0.5, 2.0 - 1e-13));
}

TEST_CASE("squeezed and thermal factories") {
  const double s = 0.31;
  const GaussianDiagState pure = from_squeezing(s);
  CHECK(pure.width_r() == doctest::Approx(std::exp(-2.0 * s)).epsilon(1e-15));
  CHECK(pure.width_i() == doctest::Approx(std::exp(2.0 * s)).epsilon(1e-15));
  CHECK(pure.is_squeezed());
  CHECK(pure.purity() == doctest::Approx(1.0).epsilon(1e-14));

  const GaussianDiagState warm = from_squeezed_thermal(s, 0.2);
  CHECK(warm.purity() == doctest::Approx(1.0 / 1.4).epsilon(1e-14));
  CHECK_THROWS_AS(from_squeezed_thermal(s, -0.1), InvalidState);

  CHECK_FALSE(GaussianDiagState(1.0, 1.0).is_squeezed());
  CHECK_FALSE(GaussianDiagState(1.3, 1.3).is_squeezed());
}

TEST_CASE("characteristic function of a state is its Gaussian envelope") {
  const GaussianDiagState state(0.7, 1.6);
  const QuadGaussSum chi = char_fn(state);
  CHECK(std::abs(chi.origin_value() - complexd(1.0, 0.0)) < 1e-15);
  const double zr = 0.8;
  const double zi = -0.5;
  CHECK(std::abs(chi.eval(zr, zi) -
                 std::exp(complexd(-0.35 * zr * zr - 0.8 * zi * zi, 0.0))) <
        1e-15);
}

TEST_CASE("beam splitting against vacuum: reference point") {
  const GaussianDiagState state(1.0 / 2.36, 2.36);
  const TwoModeCorrelation corr = beamsplit_with_vacuum(state, 0.88);
  CHECK(corr.kept_r == doctest::Approx(0.4928813559322034).epsilon(1e-14));
  CHECK(corr.kept_i == doctest::Approx(2.1968).epsilon(1e-14));
  CHECK(corr.tap_r == doctest::Approx(0.9308474576271186).epsilon(1e-14));
  CHECK(corr.tap_i == doctest::Approx(1.1632).epsilon(1e-14));
  const double root = std::sqrt(0.88 * 0.12);
  CHECK(corr.cross_r ==
        doctest::Approx(root * (1.0 / 2.36 - 1.0)).epsilon(1e-14));
  CHECK(corr.cross_i == doctest::Approx(root * 1.36).epsilon(1e-14));
  CHECK(corr.transmittivity == 0.88);
}

TEST_CASE("beam splitting conserves total photon-quadrature weight") {
  std::mt19937 rng(41202);
  std::uniform_real_distribution<double> spread(0.05, 0.9);
  std::uniform_real_distribution<double> trans(0.02, 0.98);
  for (int trial = 0; trial < 25; ++trial) {
    const double s = spread(rng);
    const GaussianDiagState state = from_squeezed_thermal(s, 0.3 * spread(rng));
    const double T = trans(rng);
    const TwoModeCorrelation corr = beamsplit_with_vacuum(state, T);
    // Each quadrature's kept + tap widths add up to input + vacuum.
    CHECK(corr.kept_r + corr.tap_r ==
          doctest::Approx(state.width_r() + 1.0).epsilon(1e-14));
    CHECK(corr.kept_i + corr.tap_i ==
          doctest::Approx(state.width_i() + 1.0).epsilon(1e-14));
    // The tap mode is a valid state on its own.
    CHECK(corr.tap_r * corr.tap_i >= 1.0 - 1e-12);
    // Swapping T <-> R swaps kept and tap.
    const TwoModeCorrelation swapped = beamsplit_with_vacuum(state, 1.0 - T);
    CHECK(swapped.kept_r == doctest::Approx(corr.tap_r).epsilon(1e-13));
    CHECK(swapped.tap_i == doctest::Approx(corr.kept_i).epsilon(1e-13));
  }
}

TEST_CASE("degenerate splitter settings are rejected by parameter name") {
  const GaussianDiagState state = from_squeezing(0.4);
  for (double T : {0.0, 1.0, -0.2, 1.4}) {
    try {
      beamsplit_with_vacuum(state, T);
      FAIL("expected DegenerateSplitter for T=", T);
    } catch (const DegenerateSplitter& e) {
      CHECK(std::string(e.what()).find("transmittivity") != std::string::npos);
    }
  }
}

TEST_CASE("two-mode characteristic value: margins and normalization") {
  const GaussianDiagState state = from_squeezing(0.43);
  const TwoModeCorrelation corr = beamsplit_with_vacuum(state, 0.7);
  CHECK(std::abs(two_mode_char(corr, 0, 0, 0, 0) - complexd(1, 0)) < 1e-15);
  // Setting the tap argument to zero leaves the kept-mode marginal.
  const double zr = 0.6;
  const double zi = -0.8;
  const complexd marginal = two_mode_char(corr, zr, zi, 0.0, 0.0);
  const complexd expected = std::exp(
      complexd(-0.5 * corr.kept_r * zr * zr - 0.5 * corr.kept_i * zi * zi, 0.0));
  CHECK(std::abs(marginal - expected) < 1e-15);
  // And symmetrically for the tap marginal.
  const complexd tap = two_mode_char(corr, 0.0, 0.0, zr, zi);
  const complexd tap_expected = std::exp(
      complexd(-0.5 * corr.tap_r * zr * zr - 0.5 * corr.tap_i * zi * zi, 0.0));
  CHECK(std::abs(tap - tap_expected) < 1e-15);
}

}  // namespace
}  // namespace psg
