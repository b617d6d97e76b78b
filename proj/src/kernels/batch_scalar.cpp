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

#include "weylkit/kernels.hpp"

namespace weylkit::kernels {

// Reference kernels. Keep the arithmetic order in lockstep with the SIMD
// variants: accumulate over k in index order, plain mul/add, no fma.

void apply_unitary_scalar(const Mat4& u, const StateBatch& in, StateBatch& out) {
  out.resize(in.n);
  double ur[4][4], ui[4][4];
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 4; ++k) {
      ur[r][k] = u(r, k).real();
      ui[r][k] = u(r, k).imag();
    }
  for (std::size_t i = 0; i < in.n; ++i) {
    for (int r = 0; r < 4; ++r) {
      double acc_re = 0.0, acc_im = 0.0;
      for (int k = 0; k < 4; ++k) {
        const double xr = in.re[k][i], xi = in.im[k][i];
        acc_re = acc_re + (ur[r][k] * xr - ui[r][k] * xi);
        acc_im = acc_im + (ur[r][k] * xi + ui[r][k] * xr);
      }
      out.re[r][i] = acc_re;
      out.im[r][i] = acc_im;
    }
  }
}

void state_entropy_scalar(const StateBatch& in, double* out) {
  for (std::size_t i = 0; i < in.n; ++i) {
    const double r0 = in.re[0][i], i0 = in.im[0][i];
    const double r1 = in.re[1][i], i1 = in.im[1][i];
    const double r2 = in.re[2][i], i2 = in.im[2][i];
    const double r3 = in.re[3][i], i3 = in.im[3][i];
    // det of the 2x2 amplitude matrix [[psi0, psi1], [psi2, psi3]]
    const double det_re = (r0 * r3 - i0 * i3) - (r1 * r2 - i1 * i2);
    const double det_im = (r0 * i3 + i0 * r3) - (r1 * i2 + i1 * r2);
    out[i] = 2.0 * (det_re * det_re + det_im * det_im);
  }
}

}  // namespace weylkit::kernels
