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

#include <string>

#include "weylkit/matrix.hpp"
#include "weylkit/point.hpp"

namespace weylkit {

/// A 4x4 two-qubit unitary, phase-normalized to det = 1 on construction
/// (principal fourth root of the determinant is divided out, so the
/// representative is deterministic). Basis ordering is |ab> -> row 2a+b
/// with qubit a the first tensor factor.
class Unitary4 {
 public:
  /// Validate unitarity within `tol` (throws NonUnitaryError otherwise) and
  /// return the det-normalized gate. Inputs that pass the check but carry
  /// float-level drift beyond 1e-12 are projected onto the closest unitary
  /// first, so the stored matrix always satisfies the tight invariant.
  static Unitary4 normalized(const Mat4& m, double tol = 1e-10);

  /// Wrap a matrix already known to be unitary to float precision and have
  /// det 1 (products of exact unitaries). Skips projection; still checked.
  static Unitary4 trusted(const Mat4& m);

  const Mat4& matrix() const { return m_; }
  const cxd& operator()(int r, int c) const { return m_(r, c); }

 private:
  explicit Unitary4(const Mat4& m) : m_(m) {}
  Mat4 m_;
};

/// The fixed magic (Bell-like) basis change. Columns:
///   (|00>+|11>)/sqrt2, (-i|00>+i|11>)/sqrt2,
///   (|01>-|10>)/sqrt2, (-i|01>-i|10>)/sqrt2.
/// Local gates become real orthogonal in this frame and the canonical
/// nonlocal generators become diagonal.
const Mat4& magic_basis();

/// The nonlocal canonical gate exp{(i/2)(c1 XX + c2 YY + c3 ZZ)}.
/// The three generators commute and are jointly diagonal in the magic
/// basis, so the exponential is assembled as Q diag(e^{i lambda}) Q^dagger.
Unitary4 canonical_gate(const WeylPoint& c);

/// Built-in named gates (det-normalized class representatives).
enum class NamedGate { Identity, Cnot, Dcnot, Swap, SqrtSwap };

Unitary4 named_gate(NamedGate g);
Mat4 named_gate_matrix(NamedGate g);  // textbook matrix, before normalization
std::string to_string(NamedGate g);
/// Parse "CNOT", "SWAP", ... Throws ParseError on unknown names.
NamedGate named_gate_from_string(const std::string& name);

/// Canonical chamber coordinates of each named gate class.
WeylPoint named_gate_point(NamedGate g);

}  // namespace weylkit
