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

#include <cstdint>
#include <span>
#include <utility>

#include "weylkit/matrix.hpp"
#include "weylkit/point.hpp"
#include "weylkit/unitary.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

/// Normalized two-qubit pure state (amplitudes over |00>,|01>,|10>,|11>).
struct TwoQubitPureState {
  Vector<4> amp{};

  /// Validates normalization within 1e-12.
  static TwoQubitPureState from(const Vector<4>& amplitudes);
};

/// Linear entropy of a gate from its chamber coordinates:
///   1 - (1/4)(1 + cos^2 c1 cos^2 c2 + cos^2 c2 cos^2 c3 + cos^2 c3 cos^2 c1)
double linear_entropy_point(const WeylPoint& c);

/// Linear entropy from the invariants: 1 - (1/8)(3 + 2|g1| + g2).
double linear_entropy_invariants(const LocalInvariants& inv);

/// Linear entropy of U*SWAP from the invariants of U:
///   1 - (1/8)(3 + 2|g1| - g2).
double linear_entropy_swapped(const LocalInvariants& inv);

/// Entangling power from the invariants: (2/9)(1 - |g1|), in [0, 2/9].
double entangling_power_invariant(const LocalInvariants& inv);

/// Entangling power from the two operator entropies:
///   (4/9)(L(U) + L(US) - 3/4).
double entangling_power_linear(double l_u, double l_us);

/// Linear entropy of the first-qubit marginal, 1 - tr(rho_A^2) in [0, 1/2];
/// 0 exactly on product states, 1/2 on maximally entangled ones.
double state_linear_entropy(const TwoQubitPureState& psi);

/// Monte-Carlo estimate of the entangling power: the mean first-qubit
/// entropy of u acting on n Haar-random product states. Returns
/// (mean, standard error of the mean). Per-index random streams make the
/// result a function of (u, n, seed) only, independent of batching.
struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};
MonteCarloEstimate entangling_power_montecarlo(const Unitary4& u, std::uint64_t n,
                                               std::uint64_t seed);

/// Sanity gate for sets of perfect entanglers: every point must classify as
/// a perfect entangler (NotPerfectEntanglerError otherwise); returns the
/// (min, max) of their linear entropies.
std::pair<double, double> perfect_entangler_entropy_bounds(
    std::span<const WeylPoint> points);

}  // namespace weylkit
