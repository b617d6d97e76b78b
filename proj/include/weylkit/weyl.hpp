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

#include <complex>
#include <optional>

#include "weylkit/matrix.hpp"
#include "weylkit/point.hpp"
#include "weylkit/unitary.hpp"

namespace weylkit {

/// The Makhlin pair: g1 is complex, g2 real. Unchanged under local
/// (single-qubit) dressing of the gate; together they pin the local
/// equivalence class.
struct LocalInvariants {
  std::complex<double> g1;
  double g2 = 0.0;
};

/// Region classification of a chamber point.
struct GateClass {
  bool is_local = false;
  bool is_perfect_entangler = false;
  bool is_special_perfect_entangler = false;
  std::optional<NamedGate> named_equivalent;
};

/// Magic-basis conjugation Q^dagger U Q. Local gates land in the real
/// orthogonal group; canonical gates come out diagonal.
Mat4 magic_transform(const Unitary4& u);

/// Invariants from the matrix route: m = U_B^T U_B,
/// g1 = tr(m)^2 / 16, g2 = (tr(m)^2 - tr(m^2)) / 4.
/// The analytically-real g2 keeps a float imaginary residue; it is checked
/// against 1e-9 and dropped.
LocalInvariants invariants_from_unitary(const Unitary4& u);

/// Invariants from chamber coordinates (closed form, no matrices).
LocalInvariants invariants_from_point(const WeylPoint& c);

/// Fold an arbitrary coordinate triple into the reduced chamber using the
/// local-equivalence symmetry moves (mod-pi shifts, permutations, sign
/// flips of coordinate pairs). Deterministic: of the valid candidates the
/// lexicographically smallest is returned.
WeylPoint weyl_reduce(double r1, double r2, double r3);

/// Recover the reduced-chamber point of a gate. The eigenphases of
/// U_B^T U_B are (twice) signed sums of the coordinates; candidate
/// assignments are enumerated, reduced, and checked against the gate's own
/// invariants. Throws CoordinateRecoveryError when nothing matches.
WeylPoint coordinates_from_unitary(const Unitary4& u);

/// Perfect-entangler polyhedron membership and named-class detection.
/// `c` must be a reduced-chamber point. Membership is the half-space system
///   c1 + c2 >= pi/2,  c1 - c2 <= pi/2,  c2 + c3 <= pi/2
/// (closed: boundary gates count). Every member is cross-checked against
/// the invariant bounds |g1| <= 1/4, -1 <= g2 <= 1.
GateClass classify(const WeylPoint& c, const LocalInvariants& inv);

}  // namespace weylkit
