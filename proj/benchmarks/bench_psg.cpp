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

#include <benchmark/benchmark.h>

#include <cmath>

#include "psg/cat.hpp"
#include "psg/conditioning.hpp"
#include "psg/fock.hpp"
#include "psg/gaussian.hpp"
#include "psg/imperfections.hpp"
#include "psg/quasiprob.hpp"

namespace {

using namespace psg;

TwoModeCorrelation reference_corr() {
  return beamsplit_with_vacuum(GaussianDiagState(1.0 / 2.36, 2.36), 0.88);
}

void BM_SubtractThreshold(benchmark::State& state) {
  const TwoModeCorrelation corr = reference_corr();
  for (auto _ : state) {
    benchmark::DoNotOptimize(subtract_threshold(corr));
  }
}
BENCHMARK(BM_SubtractThreshold);

void BM_PlaneIntegral(benchmark::State& state) {
  const QuadGaussSum chi = subtract_threshold(reference_corr()).char_fn;
  const QuadGaussSum integrand = chi * chi.negated_argument();
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_full_plane(integrand));
  }
}
BENCHMARK(BM_PlaneIntegral);

void BM_WignerPoint(benchmark::State& state) {
  const QuadGaussSum chi = subtract_threshold(reference_corr()).char_fn;
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wigner_eval(chi, x, -x));
    x = x < 2.0 ? x + 1e-3 : 0.0;
  }
}
BENCHMARK(BM_WignerPoint);

void BM_WignerSurface(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WignerScenario scenario{GaussianDiagState(1.0 / 2.36, 2.36), 0.88,
                                Detector::Threshold, 0.75, 0.9,
                                LossConvention::Physical};
  for (auto _ : state) {
    benchmark::DoNotOptimize(wigner_surface(scenario, {-2.5, 2.5, n}));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_WignerSurface)->Arg(21)->Arg(51);

void BM_OptimizeAlpha(benchmark::State& state) {
  const QuadGaussSum rho = subtract_single_photon(reference_corr()).char_fn;
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_alpha(rho));
  }
}
BENCHMARK(BM_OptimizeAlpha);

void BM_FockSplit(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const double s = 0.5 * std::log(2.36);
  const fock::FockDensityMatrix rho = fock::squeezed_thermal_rho(s, 0.0, dim);
  const fock::BeamSplitterColumns bs(0.88, dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fock::beamsplitter_apply(rho, bs));
  }
}
BENCHMARK(BM_FockSplit)->Arg(24)->Arg(40);

void BM_FockSplitAndCondition(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const double s = 0.5 * std::log(2.36);
  const fock::FockDensityMatrix rho = fock::squeezed_thermal_rho(s, 0.0, dim);
  const fock::BeamSplitterColumns bs(0.88, dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fock::split_and_condition(rho, bs, fock::HeraldOutcome::AtLeastOne));
  }
}
BENCHMARK(BM_FockSplitAndCondition)->Arg(40)->Arg(60);

void BM_FockWignerParity(benchmark::State& state) {
  const double s = 0.5 * std::log(2.36);
  const fock::FockDensityMatrix rho = fock::squeezed_thermal_rho(s, 0.0, 40);
  const fock::BeamSplitterColumns bs(0.88, 40);
  const auto [cond, prob] =
      fock::split_and_condition(rho, bs, fock::HeraldOutcome::AtLeastOne);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fock::wigner_parity(cond, 0.3, -0.2));
  }
}
BENCHMARK(BM_FockWignerParity);

}  // namespace

BENCHMARK_MAIN();
