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

#include <cstddef>
#include <string>
#include <vector>

#include "weylkit/matrix.hpp"

namespace weylkit::kernels {

/// Batch of two-qubit pure states in structure-of-arrays layout:
/// amplitude j of state i lives at re[j][i] / im[j][i]. This is the hot
/// path of the Monte-Carlo entangling-power estimator; the layout lets the
/// SIMD variants run one state per lane.
struct StateBatch {
  std::size_t n = 0;
  std::array<std::vector<double>, 4> re;
  std::array<std::vector<double>, 4> im;

  void resize(std::size_t count) {
    n = count;
    for (auto& v : re) v.resize(count);
    for (auto& v : im) v.resize(count);
  }
};

enum class Backend { Scalar, Avx2 };

/// Backend picked at startup from CPU capabilities (override below).
Backend active_backend();
std::string backend_name(Backend b);

/// Force a backend; throws OutOfRangeError if unavailable on this CPU.
/// Used by the equivalence tests and for debugging.
void force_backend(Backend b);
bool backend_available(Backend b);

/// out_i = u * in_i for every state in the batch.
void apply_unitary(const Mat4& u, const StateBatch& in, StateBatch& out);

/// Linear entropy of the first-qubit marginal of each (normalized) state:
/// E_i = 2 |psi0 psi3 - psi1 psi2|^2, which equals 1 - tr(rho_A^2).
/// Exactly zero on product states up to the rounding of the determinant.
void state_entropy(const StateBatch& in, double* out);

/// Scalar reference implementations (the ground truth the SIMD variants
/// are equivalence-tested against; both use the same per-state operation
/// order, so the results match bit for bit).
void apply_unitary_scalar(const Mat4& u, const StateBatch& in, StateBatch& out);
void state_entropy_scalar(const StateBatch& in, double* out);

#if defined(WEYLKIT_HAVE_AVX2)
void apply_unitary_avx2(const Mat4& u, const StateBatch& in, StateBatch& out);
void state_entropy_avx2(const StateBatch& in, double* out);
#endif

}  // namespace weylkit::kernels
