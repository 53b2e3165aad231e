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

#ifndef PSG_ERRORS_HPP
#define PSG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace psg {

/// Absolute tolerance used by validity checks (uncertainty bounds, probability
/// floors, positivity guards).
inline constexpr double kEpsTol = 1e-12;

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state parameterization violates positivity or the uncertainty bound.
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// Beam-splitter transmittivity outside the open interval (0, 1).
class DegenerateSplitter : public Error {
 public:
  using Error::Error;
};

/// Conditioning on a detector outcome whose probability vanishes.
class ZeroProbabilityHerald : public Error {
 public:
  using Error::Error;
};

/// An operation that requires quadrature squeezing was given an unsqueezed
/// input.
class NotSqueezedInput : public Error {
 public:
  using Error::Error;
};

/// A closed-form Gaussian integral has a non-positive decay rate and does not
/// converge.
class DivergentIntegral : public Error {
 public:
  using Error::Error;
};

/// A Fock-space computation left too much weight near the truncation edge for
/// its result to be trusted.
class UnderTruncated : public Error {
 public:
  using Error::Error;
};

/// No detector efficiency in (0, 1] preserves the requested negativity.
class NoThresholdBelowOne : public Error {
 public:
  using Error::Error;
};

}  // namespace psg

#endif  // PSG_ERRORS_HPP
