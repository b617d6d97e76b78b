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

namespace weylkit {

/// Result of a full 4x4 complex SVD:  m = u * diag(sigma) * v^dagger,
/// singular values sorted descending and non-negative, u and v unitary.
struct Svd4 {
  std::array<double, 4> sigma{};
  Mat4 u;
  Mat4 v;
};

/// One-sided complex Jacobi SVD of a 4x4 matrix. Handles rank-deficient
/// inputs (zero singular values get left factors completed to a unitary
/// basis). Reconstruction residual is at the level of a few ulps of |m|.
Svd4 svd4(const Mat4& m);

/// Eigenvalues and eigenvectors of a 4x4 real symmetric matrix by cyclic
/// Jacobi rotations. Returns eigenvalues unordered, columns of `vectors`
/// are the matching orthonormal eigenvectors.
struct SymEig4 {
  std::array<double, 4> values{};
  std::array<std::array<double, 4>, 4> vectors{};  // vectors[c] = column c
};
SymEig4 jacobi_eigen_sym4(const std::array<std::array<double, 4>, 4>& m);

/// Eigenphases of a unitary complex-symmetric 4x4 matrix: the four angles
/// theta_j with eigenvalues e^{i theta_j}, each in (-pi, pi]. The real and
/// imaginary parts of such a matrix are commuting real symmetric matrices,
/// so both are diagonalized by one real orthogonal basis; the phases are
/// read off the joint diagonal. Unordered.
///
/// Throws NotSymmetricError / NonUnitaryError when the input fails the
/// respective 1e-9 check.
std::array<double, 4> eigenphases_symmetric_unitary(const Mat4& m);

}  // namespace weylkit
