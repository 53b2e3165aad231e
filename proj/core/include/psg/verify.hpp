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

#ifndef PSG_VERIFY_HPP
#define PSG_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "psg/fock.hpp"
#include "psg/quad_gauss_sum.hpp"

namespace psg {

enum class CheckStatus { Pass, Fail, Info };

struct CheckValue {
  std::string name;
  double value;
};

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
  std::vector<CheckValue> values;

  double value(std::string_view value_name) const;
};

struct VerifyOptions {
  int dim = 40;
};

struct VerifyReport {
  int dim;
  std::vector<CheckResult> checks;

  /// True iff no check has status Fail (Info entries never fail).
  bool all_hard_passed() const;
  const CheckResult* find(std::string_view name) const;
};

/// One verification scenario: input state parameters and splitter setting.
struct VerifyParams {
  double s;
  double nbar;
  double transmittivity;
};

/// The fixed 10-point parameter grid every cross-check runs over.
const std::vector<VerifyParams>& verification_grid();

/// Compares a characteristic function against the Fock oracle on `npoints`
/// deterministic pseudo-random points within |zeta| <= radius. Exposed so
/// tests can aim it at deliberately corrupted inputs.
CheckResult compare_char_to_oracle(std::string name, const QuadGaussSum& char_fn,
                                   const fock::FockDensityMatrix& rho,
                                   int npoints, double radius, double tol,
                                   unsigned seed);

/// Runs every analytic-vs-oracle cross-check plus the documented-discrepancy
/// probes (reported as Info, never failures).
VerifyReport run_verification(const VerifyOptions& options = {});

}  // namespace psg

#endif  // PSG_VERIFY_HPP
