// Copyright 2026 The weylkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace weylkit {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input matrix fails the unitarity check.
struct NonUnitaryError : Error {
  using Error::Error;
};

/// Matrix expected to be complex-symmetric is not.
struct NotSymmetricError : Error {
  using Error::Error;
};

/// No candidate Weyl-chamber point reproduces the gate's invariants.
struct CoordinateRecoveryError : Error {
  using Error::Error;
};

/// Exactly three Schmidt coefficients exceed the threshold: impossible for a
/// unitary, so the threshold is misconfigured relative to the data.
struct DegenerateSpectrumError : Error {
  using Error::Error;
};

/// Operation defined only for Schmidt-number <= 2 gates was called on a
/// Schmidt-number-4 spectrum.
struct SchmidtRankError : Error {
  using Error::Error;
};

/// Scalar argument outside its admissible range.
struct OutOfRangeError : Error {
  using Error::Error;
};

/// Edge name not in the canonical tetrahedron/polyhedron edge table.
struct UnknownEdgeError : Error {
  using Error::Error;
};

/// Gate expected to classify as a perfect entangler does not.
struct NotPerfectEntanglerError : Error {
  using Error::Error;
};

/// Malformed input file or gate description.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace weylkit
