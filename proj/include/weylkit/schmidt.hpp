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

#include <array>

#include "weylkit/matrix.hpp"
#include "weylkit/unitary.hpp"

namespace weylkit {

/// Operator-Schmidt coefficients of a two-qubit gate, sorted descending,
/// normalized so that sum s_l^2 = 1.
struct SchmidtSpectrum {
  std::array<double, 4> s{};

  /// Validates ordering, non-negativity and normalization (1e-10).
  static SchmidtSpectrum from(const std::array<double, 4>& coeffs);
};

/// Full decomposition U = sum_l s_l A_l (x) B_l with operator bases
/// orthonormal under the normalized trace inner product, tr(A^dag A) = 2.
struct SchmidtFactors {
  SchmidtSpectrum spectrum;
  std::array<Mat2, 4> a_ops;
  std::array<Mat2, 4> b_ops;
};

/// Decompose by realigning U (first-qubit indices against second-qubit
/// indices) and taking the SVD of the realigned matrix; the realignment
/// singular values are 2 s_l for a unitary.
SchmidtFactors schmidt_decompose(const Unitary4& u);

/// Count of coefficients above `eps`. A unitary admits 1, 2 or 4 nonzero
/// coefficients only; a count of exactly 3 throws DegenerateSpectrumError
/// (it signals a threshold misconfiguration, not a real gate).
int schmidt_number(const SchmidtSpectrum& sp, double eps = 1e-8);

/// Shannon entropy (base 2) of the distribution s_l^2, in [0, 2].
/// Coefficients below 1e-12 contribute exactly zero.
double schmidt_strength(const SchmidtSpectrum& sp);

/// Linear entropy from the coefficients: 1 - sum s_l^4, in [0, 3/4].
double linear_entropy_coeffs(const SchmidtSpectrum& sp);

/// Linear entropy by the permutation-trace route on the doubled space:
///   1 - (1/16) tr(U^{dag(x)2} T13 U^{(x)2} T13)
/// with T13 the permutation |a,b,c,d> -> |c,b,a,d> under index 8a+4b+2c+d.
/// The imaginary residue is checked against 1e-10 and dropped.
double linear_entropy_permutation(const Unitary4& u);

/// The 16x16 permutation matrix for T13 (involution).
const Mat16& permutation_t13();

/// Operator concurrence 2 s1 s2, defined for Schmidt number <= 2 gates.
/// Throws SchmidtRankError on Schmidt-number-4 spectra.
double operator_concurrence(const SchmidtSpectrum& sp);

/// Schmidt strength of a Schmidt-number-2 gate expressed through its linear
/// entropy: the two squared coefficients are (1 +- sqrt(1-2l))/2 and the
/// entropy of that pair is returned. Monotone increasing on [0, 1/2].
/// Throws OutOfRangeError outside [0, 1/2] (1e-12 slack).
double strength_from_entropy_rank2(double l);

}  // namespace weylkit
